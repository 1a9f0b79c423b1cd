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

#ifndef TOYSTAB_MEASUREMENT_HPP
#define TOYSTAB_MEASUREMENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toystab/rng.hpp"
#include "toystab/stabilizer.hpp"

namespace toystab {

/// Expected value of g on the state: +1 if g is in the subgroup, -1 if -g
/// is, 0 otherwise (either outcome equally likely).
template <typename K>
int expectation(const StabilizerState<K>& s, const Observable<K>& g) {
  switch (s.membership(g)) {
    case Membership::in_group:
      return 1;
    case Membership::negation_in_group:
      return -1;
    case Membership::neither:
      return 0;
  }
  return 0;
}

namespace detail {

/// Generator-list measurement primitives shared by the state-level API and
/// the circuit executor. The list need not be canonical; it stays an
/// independent commuting list throughout.
struct MeasurementPlan {
  bool deterministic = false;
  int value = 0;            // set when deterministic
  size_t anti_index = 0;    // first anticommuting generator, when present
  bool has_anti = false;
};

template <typename K>
MeasurementPlan plan_measurement(const std::vector<Observable<K>>& gens,
                                 const Observable<K>& g) {
  MeasurementPlan plan;
  if (g.is_trivial()) {
    plan.deterministic = true;
    plan.value = g.sign();
    return plan;
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].commutes_with(g)) {
      plan.anti_index = i;
      plan.has_anti = true;
      return plan;
    }
  }
  // Everything commutes; the outcome is fixed iff +-g is in the group.
  std::vector<Observable<K>> rows = gens;
  std::vector<size_t> pivots = canonicalize_rows(rows, g.num_systems());
  Observable<K> acc = Observable<K>::identity(g.num_systems());
  CheckVector rest = g.cv;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rest.column(pivots[r])) {
      rest ^= rows[r].cv;
      acc = mul(acc, rows[r]);
    }
  }
  if (!rest.is_zero()) {
    return plan;  // independent direction: random outcome, group grows
  }
  plan.deterministic = true;
  plan.value = acc.phase == g.phase ? 1 : -1;
  return plan;
}

/// Applies the update rule for outcome `value`: keep at most one
/// anticommuting generator (the first, others absorb it), delete it, and
/// append value * g. Deterministic outcomes leave the list untouched.
template <typename K>
void apply_measurement(std::vector<Observable<K>>& gens,
                       const Observable<K>& g, int value,
                       const MeasurementPlan& plan) {
  if (plan.deterministic) {
    return;
  }
  Observable<K> signed_g = value == 1 ? g : g.negated();
  if (plan.has_anti) {
    const Observable<K> pivot = gens[plan.anti_index];
    for (size_t i = plan.anti_index + 1; i < gens.size(); ++i) {
      if (!gens[i].commutes_with(g)) {
        gens[i] = mul(gens[i], pivot);
      }
    }
    gens[plan.anti_index] = std::move(signed_g);
  } else {
    gens.push_back(std::move(signed_g));
  }
}

template <typename K>
int measure_in_place(std::vector<Observable<K>>& gens, const Observable<K>& g,
                     Rng* rng, bool* deterministic_out = nullptr) {
  MeasurementPlan plan = plan_measurement(gens, g);
  int value;
  if (plan.deterministic) {
    value = plan.value;
  } else {
    if (rng == nullptr) {
      throw SeedRequired();
    }
    value = rng->bit() ? 1 : -1;
  }
  apply_measurement(gens, g, value, plan);
  if (deterministic_out != nullptr) {
    *deterministic_out = plan.deterministic;
  }
  return value;
}

}  // namespace detail

template <typename K>
struct MeasureResult {
  int value;
  StabilizerState<K> posterior;
  bool deterministic;
};

/// Measures a toy observable with the stabilizer update rule. Deterministic
/// iff +-g is already in the subgroup (then the state is unchanged);
/// otherwise the outcome is a fair coin from rng and the subgroup is
/// rewritten around it. Trivial observables measure deterministically with
/// no disturbance.
inline MeasureResult<ToyKind> measure(const StabilizerState<ToyKind>& s,
                                      const ToyObservable& g, Rng& rng) {
  if (g.num_systems() != s.num_systems()) {
    throw std::invalid_argument("observable system count differs from state");
  }
  std::vector<ToyObservable> gens(s.generators().begin(),
                                  s.generators().end());
  bool deterministic = false;
  int value = detail::measure_in_place(gens, g, &rng, &deterministic);
  return MeasureResult<ToyKind>{
      value, StabilizerState<ToyKind>(s.num_systems(), std::move(gens)),
      deterministic};
}

/// A measurement given as a partition of the ontic space into toy
/// stabilizer blocks.
struct PartitionMeasurement {
  std::vector<ToyStabilizerState> blocks;
};

struct PartitionViolation {
  enum class Kind { empty, dimension_mismatch, overlapping_blocks, incomplete_cover };
  Kind kind;
  size_t index_a = 0;
  size_t index_b = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::empty:
        return "partition has no blocks";
      case Kind::dimension_mismatch:
        return "block " + std::to_string(index_a) +
               " has a different system count";
      case Kind::overlapping_blocks:
        return "blocks " + std::to_string(index_a) + " and " +
               std::to_string(index_b) + " overlap";
      case Kind::incomplete_cover:
        return "block supports do not cover the ontic space";
    }
    return "invalid partition";
  }
};

/// Valid iff the blocks are pairwise disjoint and their supports cover all
/// 4^n ontic states (support sizes are 4^n / 2^l, so disjoint + total size
/// is a complete cover).
inline std::optional<PartitionViolation> validate_partition(
    const PartitionMeasurement& p) {
  if (p.blocks.empty()) {
    return PartitionViolation{PartitionViolation::Kind::empty, 0, 0};
  }
  size_t n = p.blocks[0].num_systems();
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (p.blocks[i].num_systems() != n) {
      return PartitionViolation{PartitionViolation::Kind::dimension_mismatch,
                                i, 0};
    }
  }
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    for (size_t j = i + 1; j < p.blocks.size(); ++j) {
      if (!are_disjoint(p.blocks[i], p.blocks[j])) {
        return PartitionViolation{PartitionViolation::Kind::overlapping_blocks,
                                  i, j};
      }
    }
  }
  uint64_t total = 0;
  for (const auto& block : p.blocks) {
    total += ontic_space_size(n) / block.order();
  }
  if (total != ontic_space_size(n)) {
    return PartitionViolation{PartitionViolation::Kind::incomplete_cover, 0,
                              0};
  }
  return std::nullopt;
}

/// Realization of a partition measurement as a sequence of toy observable
/// measurements: internal nodes measure an observable and branch on the
/// outcome, leaves name the identified block.
class DecisionTree {
 public:
  static DecisionTree leaf(size_t block) {
    DecisionTree t;
    t.block_ = block;
    return t;
  }

  static DecisionTree node(ToyObservable g, DecisionTree plus,
                           DecisionTree minus) {
    DecisionTree t;
    t.observable_ = std::move(g);
    t.plus_ = std::make_shared<DecisionTree>(std::move(plus));
    t.minus_ = std::make_shared<DecisionTree>(std::move(minus));
    return t;
  }

  bool is_leaf() const { return !observable_.has_value(); }
  size_t block() const { return block_; }
  const ToyObservable& observable() const { return *observable_; }
  const DecisionTree& plus() const { return *plus_; }
  const DecisionTree& minus() const { return *minus_; }

  size_t depth() const {
    if (is_leaf()) {
      return 0;
    }
    return 1 + std::max(plus_->depth(), minus_->depth());
  }

 private:
  std::optional<ToyObservable> observable_;
  std::shared_ptr<const DecisionTree> plus_, minus_;
  size_t block_ = 0;
};

namespace detail {

/// Candidate observables in check-vector order (system 1's X bit least
/// significant), positive sign first.
inline std::vector<ToyObservable> sequence_candidates(size_t n) {
  std::vector<CheckVector> cvs;
  for (uint64_t code = 1; code < ontic_space_size(n); ++code) {
    CheckVector cv(n);
    for (size_t k = 0; k < n; ++k) {
      cv.set_x(k, (code >> k) & 1);
      cv.set_z(k, (code >> (n + k)) & 1);
    }
    cvs.push_back(std::move(cv));
  }
  // The code enumeration is already ascending in check-vector order.
  std::vector<ToyObservable> out;
  out.reserve(2 * cvs.size());
  for (const CheckVector& cv : cvs) {
    out.push_back(ToyObservable(cv, 0));
    out.push_back(ToyObservable(cv, 1));
  }
  return out;
}

inline std::optional<DecisionTree> find_sequence_rec(
    const PartitionMeasurement& p, const std::vector<ToyObservable>& candidates,
    const std::vector<size_t>& active) {
  if (active.size() == 1) {
    return DecisionTree::leaf(active[0]);
  }
  for (const ToyObservable& g : candidates) {
    std::vector<size_t> plus_side, minus_side;
    bool usable = true;
    for (size_t idx : active) {
      switch (p.blocks[idx].membership(g)) {
        case Membership::in_group:
          plus_side.push_back(idx);
          break;
        case Membership::negation_in_group:
          minus_side.push_back(idx);
          break;
        case Membership::neither:
          usable = false;
          break;
      }
      if (!usable) {
        break;
      }
    }
    if (!usable || plus_side.empty() || minus_side.empty()) {
      continue;
    }
    auto plus_tree = find_sequence_rec(p, candidates, plus_side);
    if (!plus_tree) {
      continue;
    }
    auto minus_tree = find_sequence_rec(p, candidates, minus_side);
    if (!minus_tree) {
      continue;
    }
    return DecisionTree::node(g, std::move(*plus_tree), std::move(*minus_tree));
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches for an observable-measurement realization of the partition:
/// at each level, the first (in candidate order) non-trivial g that lies
/// signed in every active block and separates them. nullopt when no such
/// sequence exists at some level.
inline std::optional<DecisionTree> find_observable_sequence(
    const PartitionMeasurement& p) {
  if (auto violation = validate_partition(p)) {
    throw std::invalid_argument("invalid partition: " + violation->describe());
  }
  size_t n = p.blocks[0].num_systems();
  std::vector<size_t> all(p.blocks.size());
  for (size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  return detail::find_sequence_rec(p, detail::sequence_candidates(n), all);
}

}  // namespace toystab

#endif  // TOYSTAB_MEASUREMENT_HPP
