// Copyright 2026 The toystab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOYSTAB_ONTIC_HPP
#define TOYSTAB_ONTIC_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "toystab/errors.hpp"
#include "toystab/rng.hpp"
#include "toystab/stabilizer.hpp"
#include "toystab/transform.hpp"

namespace toystab {

/// Explicit subset of the 4^n ontic states; ground truth for all toy-side
/// semantics at small n. Members are kept sorted.
struct OnticSupport {
  size_t n = 0;
  std::vector<OnticIndex> members;

  size_t size() const { return members.size(); }

  bool contains(OnticIndex v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }

  bool operator==(const OnticSupport&) const = default;
};

/// The ontic states compatible with every generator: {v : g v = v for all
/// g in S}. Size is exactly 4^n / |S|.
inline OnticSupport support_of(const StabilizerState<ToyKind>& s,
                               size_t max_n = 8) {
  size_t n = s.num_systems();
  if (n > max_n) {
    throw GuardExceeded("support_of", n, max_n);
  }
  OnticSupport out;
  out.n = n;
  for (uint64_t v = 0; v < ontic_space_size(n); ++v) {
    CheckVector pat = ontic_pattern(n, OnticIndex{v});
    bool compatible = true;
    for (const auto& g : s.generators()) {
      if (eigenvalue_at_pattern(g, pat) != 1) {
        compatible = false;
        break;
      }
    }
    if (compatible) {
      out.members.push_back(OnticIndex{v});
    }
  }
  return out;
}

/// Partition of the ontic space by agreement on every toy observable that
/// commutes with g: two states fall in the same class iff no measurement of
/// a commuting observable could tell them apart. Agreement on a spanning
/// set of the commutant suffices (values are parities, hence linear in the
/// check vector).
struct OnticClassing {
  std::vector<size_t> class_of;                 // indexed by ontic index
  std::vector<std::vector<OnticIndex>> classes;  // members, sorted
};

inline OnticClassing ontic_classes(size_t n, const ToyObservable& g,
                                   size_t max_n = 8) {
  if (n > max_n) {
    throw GuardExceeded("ontic_classes", n, max_n);
  }
  // Basis of {h : sp(h, g) = 0}: the commuting unit vectors, plus pairwise
  // sums of the anticommuting ones.
  Gf2Basis commutant;
  BitVec dual(2 * n);
  for (size_t k = 0; k < n; ++k) {
    dual.set(k, g.cv.z_bit(k));
    dual.set(n + k, g.cv.x_bit(k));
  }
  std::vector<ToyObservable> basis;
  std::optional<size_t> first_anti;
  for (size_t c = 0; c < 2 * n; ++c) {
    BitVec unit(2 * n);
    unit.set(c, true);
    if (!unit.and_parity(dual)) {
      if (commutant.insert(unit)) {
        basis.emplace_back(CheckVector::from_flat(unit), 0);
      }
    } else if (!first_anti) {
      first_anti = c;
    } else {
      BitVec sum(2 * n);
      sum.set(*first_anti, true);
      sum.set(c, true);
      if (commutant.insert(sum)) {
        basis.emplace_back(CheckVector::from_flat(sum), 0);
      }
    }
  }
  OnticClassing out;
  size_t space = ontic_space_size(n);
  out.class_of.resize(space);
  std::vector<std::pair<uint64_t, uint64_t>> signatures(space);
  for (uint64_t u = 0; u < space; ++u) {
    CheckVector pat = ontic_pattern(n, OnticIndex{u});
    uint64_t sig = 0;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (eigenvalue_at_pattern(basis[b], pat) == -1) {
        sig |= uint64_t{1} << b;
      }
    }
    signatures[u] = {sig, u};
  }
  std::sort(signatures.begin(), signatures.end());
  for (size_t i = 0; i < signatures.size(); ++i) {
    if (i == 0 || signatures[i].first != signatures[i - 1].first) {
      out.classes.emplace_back();
    }
    out.class_of[signatures[i].second] = out.classes.size() - 1;
    out.classes.back().push_back(OnticIndex{signatures[i].second});
  }
  return out;
}

/// The set of ontic states a measurement of g may leave behind when the
/// system was at v.
inline std::vector<OnticIndex> ontic_class(size_t n, OnticIndex v,
                                           const ToyObservable& g,
                                           size_t max_n = 8) {
  OnticClassing classing = ontic_classes(n, g, max_n);
  return classing.classes[classing.class_of[v.v]];
}

struct OnticMeasureResult {
  int value;
  OnticIndex post;
};

/// Ground-truth measurement at the ontic level: the value is read off v,
/// and the post state is uniform over the states agreeing with v on every
/// observable commuting with g.
inline OnticMeasureResult ontic_measure(size_t n, OnticIndex v,
                                        const ToyObservable& g, Rng& rng,
                                        size_t max_n = 8) {
  if (v.v >= ontic_space_size(n)) {
    throw std::invalid_argument("ontic index out of range");
  }
  int value = eigenvalue_at_pattern(g, ontic_pattern(n, v));
  std::vector<OnticIndex> cls = ontic_class(n, v, g, max_n);
  OnticIndex post = cls[rng.below(cls.size())];
  return OnticMeasureResult{value, post};
}

enum class CountKind { pure_states, all_states, transformations };

inline const char* count_kind_name(CountKind kind) {
  switch (kind) {
    case CountKind::pure_states:
      return "pure_states";
    case CountKind::all_states:
      return "all_states";
    case CountKind::transformations:
      return "transformations";
  }
  return "?";
}

/// Paired counting result: a closed-form value and/or an enumerated value,
/// which must agree when both are present.
struct CountReport {
  CountKind kind;
  size_t n;
  std::optional<uint64_t> formula_value;
  std::optional<uint64_t> enumerated_value;
  std::string method;

  bool consistent() const {
    return !formula_value || !enumerated_value ||
           *formula_value == *enumerated_value;
  }

  std::string line() const {
    auto cell = [](const std::optional<uint64_t>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    return std::string(count_kind_name(kind)) + " " + std::to_string(n) + " " +
           cell(formula_value) + " " + cell(enumerated_value) + " " +
           (consistent() ? "OK" : "MISMATCH");
  }
};

/// 2^n * prod_{k=0}^{n-1} (2^{n-k} + 1).
inline uint64_t pure_state_count_formula(size_t n) {
  uint64_t count = uint64_t{1} << n;
  for (size_t k = 0; k < n; ++k) {
    count *= (uint64_t{1} << (n - k)) + 1;
  }
  return count;
}

/// 2^{2n^2+3n} * prod_{k=1}^{n} (1 - 2^{-2k}), i.e.
/// 2^{n^2+2n} * prod_{k=1}^{n} (4^k - 1).
inline uint64_t transformation_count_formula(size_t n) {
  uint64_t count = uint64_t{1} << (n * n + 2 * n);
  for (size_t k = 1; k <= n; ++k) {
    count *= (uint64_t{1} << (2 * k)) - 1;
  }
  return count;
}

namespace detail {

/// Calls fn with every RREF check-vector matrix of the given rank whose
/// rows pairwise commute, one call per subgroup row space. Enumerates pivot
/// structures, then all assignments of the free entries.
template <typename Fn>
void for_each_isotropic_rref(size_t n, size_t rank, Fn&& fn) {
  size_t cols = 2 * n;
  std::vector<size_t> pivots(rank);
  std::vector<CheckVector> rows(rank, CheckVector(n));

  auto emit_assignments = [&](auto&& self, size_t row,
                              std::vector<size_t>& free_cols) -> void {
    if (row == rank) {
      for (size_t i = 0; i < rank; ++i) {
        for (size_t j = i + 1; j < rank; ++j) {
          if (symplectic_product(rows[i], rows[j]) != 0) {
            return;
          }
        }
      }
      fn(rows);
      return;
    }
    // Free columns for this row: after its pivot, excluding all pivots.
    free_cols.clear();
    for (size_t c = pivots[row] + 1; c < cols; ++c) {
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
        free_cols.push_back(c);
      }
    }
    std::vector<size_t> local = free_cols;
    for (uint64_t mask = 0; mask < (uint64_t{1} << local.size()); ++mask) {
      CheckVector cv(n);
      auto set_col = [&cv, n](size_t c, bool v) {
        if (c < n) {
          cv.set_x(c, v);
        } else {
          cv.set_z(c - n, v);
        }
      };
      set_col(pivots[row], true);
      for (size_t b = 0; b < local.size(); ++b) {
        set_col(local[b], (mask >> b) & 1);
      }
      rows[row] = std::move(cv);
      self(self, row + 1, free_cols);
    }
  };

  auto choose_pivots = [&](auto&& self, size_t idx, size_t start) -> void {
    if (idx == rank) {
      std::vector<size_t> scratch;
      emit_assignments(emit_assignments, 0, scratch);
      return;
    }
    for (size_t c = start; c < cols; ++c) {
      pivots[idx] = c;
      self(self, idx + 1, c + 1);
    }
  };

  if (rank == 0) {
    std::vector<CheckVector> empty;
    fn(empty);
    return;
  }
  choose_pivots(choose_pivots, 0, 0);
}

}  // namespace detail

/// All toy stabilizer states at system count n, optionally restricted to a
/// fixed generator count. Enumerates canonical row spaces directly (RREF
/// pivot structures), then every sign assignment.
inline std::vector<ToyStabilizerState> all_stabilizer_states(
    size_t n, std::optional<size_t> only_rank = std::nullopt,
    size_t max_n = 3) {
  if (n > max_n) {
    throw GuardExceeded("all_stabilizer_states", n, max_n);
  }
  std::vector<ToyStabilizerState> out;
  size_t lo = only_rank.value_or(0);
  size_t hi = only_rank.value_or(n);
  for (size_t rank = lo; rank <= hi; ++rank) {
    detail::for_each_isotropic_rref(n, rank, [&](const std::vector<CheckVector>& rows) {
      for (uint64_t signs = 0; signs < (uint64_t{1} << rank); ++signs) {
        std::vector<ToyObservable> gens;
        gens.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
          gens.emplace_back(rows[i], static_cast<uint8_t>((signs >> i) & 1));
        }
        out.emplace_back(n, std::move(gens));
      }
    });
  }
  return out;
}

/// All valid toy transformations at system count n: depth-first search over
/// signed images with the canonical commutation pattern enforced as slots
/// are filled.
inline std::vector<ToyTransformation> all_transformations(size_t n,
                                                          size_t max_n = 2) {
  if (n > max_n) {
    throw GuardExceeded("all_transformations", n, max_n);
  }
  std::vector<ToyTransformation> out;
  std::vector<CheckVector> nonzero;
  for (uint64_t code = 1; code < ontic_space_size(n); ++code) {
    CheckVector cv(n);
    for (size_t k = 0; k < n; ++k) {
      cv.set_x(k, (code >> k) & 1);
      cv.set_z(k, (code >> (n + k)) & 1);
    }
    nonzero.push_back(std::move(cv));
  }
  // Slots interleaved as X_1, Z_1, X_2, Z_2, ... so the anticommuting
  // partner constraint binds immediately.
  std::vector<size_t> slot_order;
  for (size_t k = 0; k < n; ++k) {
    slot_order.push_back(k);
    slot_order.push_back(n + k);
  }
  std::vector<ToyObservable> images(2 * n, ToyObservable::identity(n));
  auto search = [&](auto&& self, size_t depth) -> void {
    if (depth == slot_order.size()) {
      std::vector<ToyObservable> ordered = images;
      out.emplace_back(n, std::move(ordered));
      return;
    }
    size_t slot = slot_order[depth];
    for (const CheckVector& cv : nonzero) {
      bool ok = true;
      for (size_t d = 0; d < depth; ++d) {
        size_t other = slot_order[d];
        int expected =
            (other + n == slot || slot + n == other) ? 1 : 0;
        if (symplectic_product(cv, images[other].cv) != expected) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        continue;
      }
      for (uint8_t sign : {0, 1}) {
        images[slot] = ToyObservable(cv, sign);
        self(self, depth + 1);
      }
    }
  };
  search(search, 0);
  return out;
}

/// Counts pure states by formula and by exhaustive canonical-subgroup
/// enumeration; the two must agree.
inline CountReport enumerate_pure_states(size_t n, size_t max_n = 3) {
  if (n > max_n) {
    throw GuardExceeded("enumerate_pure_states", n, max_n);
  }
  uint64_t count = 0;
  detail::for_each_isotropic_rref(n, n, [&](const std::vector<CheckVector>&) {
    count += uint64_t{1} << n;  // every sign assignment is a distinct state
  });
  return CountReport{CountKind::pure_states, n, pure_state_count_formula(n),
                     count, "formula vs canonical-subgroup enumeration"};
}

/// Counts all toy stabilizer subgroups two independent ways: by canonical
/// generator enumeration and by scanning ontic-state subsets for stabilizer
/// supports. Reported as formula/enumerated so agreement is checked the
/// same way as the closed-form counts.
inline CountReport enumerate_all_states(size_t n, size_t max_n = 2) {
  // The support scan walks all 2^(4^n) subsets; n = 2 is its hard ceiling.
  if (n > max_n || n > 2) {
    throw GuardExceeded("enumerate_all_states", n, std::min<size_t>(max_n, 2));
  }
  uint64_t by_generators = all_stabilizer_states(n, std::nullopt, max_n).size();

  // Support-based enumeration: a subset is a stabilizer support iff the
  // toy observables constant on it form a subgroup whose support is the
  // subset itself.
  uint64_t by_supports = 0;
  size_t space = ontic_space_size(n);
  std::vector<CheckVector> patterns;
  patterns.reserve(space);
  for (uint64_t v = 0; v < space; ++v) {
    patterns.push_back(ontic_pattern(n, OnticIndex{v}));
  }
  for (uint64_t subset = 1; subset < (uint64_t{1} << space); ++subset) {
    size_t size = static_cast<size_t>(std::popcount(subset));
    if ((space / size) * size != space ||
        std::popcount(static_cast<uint64_t>(size)) != 1) {
      continue;  // support sizes are powers of two dividing 4^n
    }
    std::vector<uint64_t> members;
    for (uint64_t v = 0; v < space; ++v) {
      if ((subset >> v) & 1) {
        members.push_back(v);
      }
    }
    // Observables with a constant value across the subset, taken at their
    // observed sign.
    std::vector<ToyObservable> gens;
    Gf2Basis basis;
    bool valid = true;
    for (uint64_t code = 1; code < ontic_space_size(n); ++code) {
      CheckVector cv(n);
      for (size_t k = 0; k < n; ++k) {
        cv.set_x(k, (code >> k) & 1);
        cv.set_z(k, (code >> (n + k)) & 1);
      }
      ToyObservable probe(cv, 0);
      int first = eigenvalue_at_pattern(probe, patterns[members[0]]);
      bool constant = true;
      for (size_t i = 1; i < members.size(); ++i) {
        if (eigenvalue_at_pattern(probe, patterns[members[i]]) != first) {
          constant = false;
          break;
        }
      }
      if (constant && basis.insert(cv.flat())) {
        gens.emplace_back(cv, first == 1 ? 0 : 1);
      }
    }
    if (validate_generators<ToyKind>(gens)) {
      valid = false;
    }
    if (valid) {
      ToyStabilizerState state(n, gens);
      OnticSupport support = support_of(state);
      valid = support.size() == members.size();
      for (size_t i = 0; valid && i < members.size(); ++i) {
        valid = support.members[i].v == members[i];
      }
    }
    if (valid) {
      ++by_supports;
    }
  }
  return CountReport{CountKind::all_states, n, by_supports, by_generators,
                     "support-subset scan vs canonical-subgroup enumeration"};
}

/// Counts valid transformations by formula and by canonical-generator-set
/// enumeration. At n = 1 the enumeration is additionally cross-checked by
/// testing all 4! ontic permutations for validity.
inline CountReport enumerate_transformations(size_t n, size_t max_n = 2) {
  if (n > max_n) {
    throw GuardExceeded("enumerate_transformations", n, max_n);
  }
  uint64_t enumerated = all_transformations(n, max_n).size();
  if (n == 1) {
    uint64_t valid_perms = 0;
    std::array<int, 4> labels{1, 2, 3, 4};
    do {
      // A permutation is valid iff the permuted eigenvalue diagonals of X
      // and Z are signed letters again forming a canonical generator pair;
      // from_permutation checks exactly that.
      try {
        from_permutation(ElementaryPermutation::from_images(labels));
        ++valid_perms;
      } catch (const std::exception&) {
      }
    } while (std::next_permutation(labels.begin(), labels.end()));
    if (valid_perms != enumerated) {
      // Structural disagreement between the two ground truths.
      return CountReport{CountKind::transformations, n,
                         transformation_count_formula(n), 0,
                         "ontic-permutation check failed"};
    }
  }
  return CountReport{CountKind::transformations, n,
                     transformation_count_formula(n), enumerated,
                     "formula vs canonical-generator-set enumeration"};
}

}  // namespace toystab

#endif  // TOYSTAB_ONTIC_HPP
