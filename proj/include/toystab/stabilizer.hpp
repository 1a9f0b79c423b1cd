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

#ifndef TOYSTAB_STABILIZER_HPP
#define TOYSTAB_STABILIZER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toystab/errors.hpp"
#include "toystab/observable.hpp"

namespace toystab {

/// Why a generator list fails to define a stabilizer subgroup.
struct GeneratorViolation {
  enum class Kind {
    dimension_mismatch,
    non_hermitian,
    anticommuting_pair,
    dependent_generator,
  };
  Kind kind;
  size_t index_a = 0;
  size_t index_b = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::dimension_mismatch:
        return "generator " + std::to_string(index_a) +
               " has a different system count";
      case Kind::non_hermitian:
        return "generator " + std::to_string(index_a) +
               " carries an imaginary phase";
      case Kind::anticommuting_pair:
        return "generators " + std::to_string(index_a) + " and " +
               std::to_string(index_b) + " anticommute";
      case Kind::dependent_generator:
        return "generator " + std::to_string(index_a) +
               " is a product of earlier generators";
    }
    return "invalid generators";
  }
};

/// Checks that a generator list defines a stabilizer subgroup: uniform
/// system count, Hermitian entries, pairwise commuting, and linearly
/// independent check vectors. The same test serves both algebras.
template <typename K>
std::optional<GeneratorViolation> validate_generators(
    std::span<const Observable<K>> gens) {
  if (gens.empty()) {
    return std::nullopt;
  }
  size_t n = gens[0].num_systems();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].num_systems() != n) {
      return GeneratorViolation{GeneratorViolation::Kind::dimension_mismatch,
                                i, 0};
    }
    if (!gens[i].is_hermitian()) {
      return GeneratorViolation{GeneratorViolation::Kind::non_hermitian, i, 0};
    }
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        return GeneratorViolation{GeneratorViolation::Kind::anticommuting_pair,
                                  i, j};
      }
    }
  }
  Gf2Basis basis;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!basis.insert(gens[i].cv.flat())) {
      return GeneratorViolation{GeneratorViolation::Kind::dependent_generator,
                                i, 0};
    }
  }
  return std::nullopt;
}

template <typename K>
std::optional<GeneratorViolation> validate_generators(
    const std::vector<Observable<K>>& gens) {
  return validate_generators(std::span<const Observable<K>>(gens));
}

/// Result of locating an observable relative to a stabilizer subgroup.
enum class Membership { in_group, negation_in_group, neither };

namespace detail {

/// In-place reduced row echelon form with phases carried through the row
/// operations. Columns are scanned X-part first, left to right. Rows must
/// pairwise commute. Returns the pivot column of each resulting row.
template <typename K>
std::vector<size_t> canonicalize_rows(std::vector<Observable<K>>& rows,
                                      size_t n) {
  std::vector<size_t> pivots;
  size_t next_row = 0;
  for (size_t col = 0; col < 2 * n && next_row < rows.size(); ++col) {
    size_t hit = rows.size();
    for (size_t r = next_row; r < rows.size(); ++r) {
      if (rows[r].cv.column(col)) {
        hit = r;
        break;
      }
    }
    if (hit == rows.size()) {
      continue;
    }
    std::swap(rows[next_row], rows[hit]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != next_row && rows[r].cv.column(col)) {
        rows[r] = mul(rows[r], rows[next_row]);
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace detail

/// Stabilizer subgroup held as its unique canonical generator list (RREF of
/// the check-vector matrix, phases recombined along the row operations).
/// Represents an epistemic state over one of the two algebras.
template <typename K>
class StabilizerState {
 public:
  using Obs = Observable<K>;

  /// Canonicalizes the given independent commuting generators.
  /// Throws std::invalid_argument when validation fails.
  StabilizerState(size_t n, std::vector<Obs> gens) : n_(n), gens_(std::move(gens)) {
    for (const Obs& g : gens_) {
      if (g.num_systems() != n_) {
        throw std::invalid_argument("generator system count differs from state");
      }
    }
    if (auto violation = validate_generators<K>(gens_)) {
      throw std::invalid_argument("invalid stabilizer generators: " +
                                  violation->describe());
    }
    pivots_ = detail::canonicalize_rows(gens_, n_);
  }

  /// The trivial subgroup <>: complete ignorance.
  static StabilizerState trivial(size_t n) { return StabilizerState(n, {}); }

  size_t num_systems() const { return n_; }
  size_t num_generators() const { return gens_.size(); }
  std::span<const Obs> generators() const { return gens_; }

  /// A state of maximal knowledge has n independent generators.
  bool is_pure() const { return gens_.size() == n_; }

  /// Group order 2^l.
  uint64_t order() const { return uint64_t{1} << gens_.size(); }

  /// Locates g: reduce its check vector against the canonical rows; if it
  /// reduces to zero, compare the accumulated phase.
  Membership membership(const Obs& g) const {
    if (g.num_systems() != n_) {
      throw std::invalid_argument("observable system count differs from state");
    }
    Obs acc = Obs::identity(n_);
    CheckVector cv = g.cv;
    for (size_t r = 0; r < gens_.size(); ++r) {
      if (cv.column(pivots_[r])) {
        cv ^= gens_[r].cv;
        acc = mul(acc, gens_[r]);
      }
    }
    if (!cv.is_zero()) {
      return Membership::neither;
    }
    if (acc.phase == g.phase) {
      return Membership::in_group;
    }
    if (acc.phase ==
        static_cast<uint8_t>((g.phase + K::phase_modulus / 2) %
                             K::phase_modulus)) {
      return Membership::negation_in_group;
    }
    return Membership::neither;
  }

  bool contains(const Obs& g) const {
    return membership(g) == Membership::in_group;
  }

  /// All 2^l group elements, sorted. Guarded against exponential blowup.
  std::vector<Obs> expand(size_t max_generators = 20) const {
    if (gens_.size() > max_generators) {
      throw GuardExceeded("expand", gens_.size(), max_generators);
    }
    std::vector<Obs> out;
    out.reserve(size_t{1} << gens_.size());
    out.push_back(Obs::identity(n_));
    for (const Obs& g : gens_) {
      size_t count = out.size();
      for (size_t i = 0; i < count; ++i) {
        out.push_back(mul(out[i], g));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const StabilizerState&) const = default;

 private:
  size_t n_ = 0;
  std::vector<Obs> gens_;
  std::vector<size_t> pivots_;
};

using ToyStabilizerState = StabilizerState<ToyKind>;
using QubitStabilizerState = StabilizerState<QubitKind>;

namespace detail {

template <typename K>
void require_compatible(const StabilizerState<K>& a,
                        const StabilizerState<K>& b) {
  if (a.num_systems() != b.num_systems()) {
    throw std::invalid_argument("states have different system counts");
  }
}

template <typename K>
std::vector<BitVec> flat_rows(const StabilizerState<K>& s) {
  std::vector<BitVec> rows;
  rows.reserve(s.num_generators());
  for (const auto& g : s.generators()) {
    rows.push_back(g.cv.flat());
  }
  return rows;
}

/// The element of s whose check vector is cv; requires cv in the row space.
template <typename K>
Observable<K> element_with_cv(const StabilizerState<K>& s,
                              const CheckVector& cv) {
  Observable<K> acc = Observable<K>::identity(s.num_systems());
  CheckVector rest = cv;
  for (const auto& row : s.generators()) {
    size_t pivot = row.cv.flat().first_set().value();
    if (rest.column(pivot)) {
      rest ^= row.cv;
      acc = mul(acc, row);
    }
  }
  if (!rest.is_zero()) {
    throw std::logic_error("check vector not in the subgroup's row space");
  }
  return acc;
}

}  // namespace detail

/// True iff some g in S has -g in T; equivalently the epistemic states share
/// no ontic state (toy) / the stabilized states are orthogonal (qubit).
template <typename K>
bool are_disjoint(const StabilizerState<K>& s, const StabilizerState<K>& t) {
  detail::require_compatible(s, t);
  // Signed elements disagree somewhere iff the phase difference functional
  // is non-zero on the row-space intersection; it is linear there because
  // the letter-recombination phases depend only on check vectors.
  auto common = gf2_row_space_intersection(detail::flat_rows(s),
                                           detail::flat_rows(t));
  for (const BitVec& cv_bits : common) {
    CheckVector cv = CheckVector::from_flat(cv_bits);
    if (detail::element_with_cv(s, cv).phase !=
        detail::element_with_cv(t, cv).phase) {
      return true;
    }
  }
  return false;
}

/// True iff S and T have the same unsigned elements (equal row spaces).
template <typename K>
bool is_rephasing(const StabilizerState<K>& s, const StabilizerState<K>& t) {
  detail::require_compatible(s, t);
  if (s.num_generators() != t.num_generators()) {
    return false;
  }
  for (size_t i = 0; i < s.num_generators(); ++i) {
    if (s.generators()[i].cv != t.generators()[i].cv) {
      return false;
    }
  }
  return true;
}

/// The uniform mixture of two rephased states: the intersection subgroup
/// T = S ∩ S'. mix(s, s) = s.
template <typename K>
StabilizerState<K> mix(const StabilizerState<K>& s,
                       const StabilizerState<K>& t) {
  if (!is_rephasing(s, t)) {
    throw std::invalid_argument("mix requires one state to rephase the other");
  }
  std::vector<uint8_t> flipped(s.num_generators());
  size_t pivot = s.num_generators();
  for (size_t i = 0; i < s.num_generators(); ++i) {
    flipped[i] = s.generators()[i].phase != t.generators()[i].phase;
    if (flipped[i] && pivot == s.num_generators()) {
      pivot = i;
    }
  }
  if (pivot == s.num_generators()) {
    return s;  // identical states
  }
  std::vector<Observable<K>> gens;
  for (size_t i = 0; i < s.num_generators(); ++i) {
    if (i == pivot) {
      continue;
    }
    gens.push_back(flipped[i]
                       ? mul(s.generators()[i], s.generators()[pivot])
                       : s.generators()[i]);
  }
  return StabilizerState<K>(s.num_systems(), std::move(gens));
}

/// The four uniform coherent superpositions of two distinct rephased pure
/// states S = <g_1..g_{n-1}, g_n>, S' = <g_1..g_{n-1}, -g_n>: the states
/// <g_1..g_{n-1}, h> with h outside S ∪ S'. Sorted canonically.
template <typename K>
std::vector<StabilizerState<K>> superpositions(const StabilizerState<K>& s,
                                               const StabilizerState<K>& t) {
  if (!s.is_pure() || !t.is_pure()) {
    throw std::invalid_argument("superpositions require pure states");
  }
  if (!is_rephasing(s, t)) {
    throw std::invalid_argument(
        "superpositions require one state to rephase the other");
  }
  if (s == t) {
    throw std::invalid_argument("superpositions require distinct states");
  }
  size_t n = s.num_systems();
  StabilizerState<K> common = mix(s, t);

  // Distinguished generator of S outside the intersection.
  std::optional<Observable<K>> last;
  for (const auto& g : s.generators()) {
    if (common.membership(g) == Membership::neither) {
      last = g;
      break;
    }
  }

  // h must commute with the common generators and anticommute with g_n;
  // sp(h, v) is linear in h's check vector.
  std::vector<BitVec> constraints;
  std::vector<bool> rhs;
  auto symplectic_row = [n](const CheckVector& cv) {
    BitVec row(2 * n);
    for (size_t k = 0; k < n; ++k) {
      row.set(k, cv.z_bit(k));
      row.set(n + k, cv.x_bit(k));
    }
    return row;
  };
  for (const auto& g : common.generators()) {
    constraints.push_back(symplectic_row(g.cv));
    rhs.push_back(false);
  }
  constraints.push_back(symplectic_row(last->cv));
  rhs.push_back(true);
  BitVec h_bits = gf2_solve(std::move(constraints), std::move(rhs), 2 * n).value();

  Observable<K> h0(CheckVector::from_flat(h_bits), 0);
  Observable<K> h1(h0.cv ^ last->cv, 0);

  std::vector<StabilizerState<K>> out;
  for (const Observable<K>& h : {h0, h0.negated(), h1, h1.negated()}) {
    std::vector<Observable<K>> gens(common.generators().begin(),
                                    common.generators().end());
    gens.push_back(h);
    out.emplace_back(n, std::move(gens));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto ga = a.generators();
    auto gb = b.generators();
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(),
                                        gb.end());
  });
  return out;
}

}  // namespace toystab

#endif  // TOYSTAB_STABILIZER_HPP
