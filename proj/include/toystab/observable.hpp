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

#ifndef TOYSTAB_OBSERVABLE_HPP
#define TOYSTAB_OBSERVABLE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "toystab/gf2.hpp"

namespace toystab {

/// Single-system letter, encoded as the (x, z) bit pair. Y carries both bits.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char letter_char(Letter l) {
  switch (l) {
    case Letter::I:
      return 'I';
    case Letter::X:
      return 'X';
    case Letter::Z:
      return 'Z';
    case Letter::Y:
      return 'Y';
  }
  return '?';
}

/// 2n-bit symplectic vector: the X-part records which systems carry an X
/// (or Y) letter, the Z-part which carry a Z (or Y). System 1 is bit 0 of
/// each part, and the X-part precedes the Z-part in column numbering.
class CheckVector {
 public:
  CheckVector() = default;
  explicit CheckVector(size_t n) : n_(n), x_(n), z_(n) {}

  size_t num_systems() const { return n_; }

  bool x_bit(size_t k) const { return x_.get(k); }
  bool z_bit(size_t k) const { return z_.get(k); }
  void set_x(size_t k, bool v) { x_.set(k, v); }
  void set_z(size_t k, bool v) { z_.set(k, v); }

  Letter letter(size_t k) const {
    return static_cast<Letter>((x_.get(k) ? 1 : 0) | (z_.get(k) ? 2 : 0));
  }

  void set_letter(size_t k, Letter l) {
    uint8_t bits = static_cast<uint8_t>(l);
    x_.set(k, bits & 1);
    z_.set(k, bits & 2);
  }

  bool is_zero() const { return !x_.any() && !z_.any(); }

  /// Bit at symplectic column c, X-part columns [0, n) then Z-part [n, 2n).
  bool column(size_t c) const { return c < n_ ? x_.get(c) : z_.get(c - n_); }

  const BitVec& x_part() const { return x_; }
  const BitVec& z_part() const { return z_; }

  CheckVector& operator^=(const CheckVector& o) {
    require_same(o);
    x_ ^= o.x_;
    z_ ^= o.z_;
    return *this;
  }

  friend CheckVector operator^(CheckVector a, const CheckVector& b) {
    a ^= b;
    return a;
  }

  /// Flattened 2n-bit vector in symplectic column order, for linear algebra.
  BitVec flat() const {
    BitVec out(2 * n_);
    for (size_t k = 0; k < n_; ++k) {
      if (x_.get(k)) {
        out.set(k, true);
      }
      if (z_.get(k)) {
        out.set(n_ + k, true);
      }
    }
    return out;
  }

  static CheckVector from_flat(const BitVec& bits) {
    size_t n = bits.size() / 2;
    CheckVector out(n);
    for (size_t k = 0; k < n; ++k) {
      out.set_x(k, bits.get(k));
      out.set_z(k, bits.get(n + k));
    }
    return out;
  }

  bool operator==(const CheckVector& o) const = default;

  /// Integer order with system 1's X bit least significant.
  std::strong_ordering operator<=>(const CheckVector& o) const {
    if (auto c = z_ <=> o.z_; c != 0) {
      return c;
    }
    return x_ <=> o.x_;
  }

 private:
  void require_same(const CheckVector& o) const {
    if (n_ != o.n_) {
      throw std::invalid_argument("check vector dimension mismatch");
    }
  }

  size_t n_ = 0;
  BitVec x_, z_;
};

/// 0 iff the observables with these check vectors commute.
inline int symplectic_product(const CheckVector& a, const CheckVector& b) {
  if (a.num_systems() != b.num_systems()) {
    throw std::invalid_argument("check vector dimension mismatch");
  }
  return (a.x_part().and_parity(b.z_part()) ^
          a.z_part().and_parity(b.x_part()))
             ? 1
             : 0;
}

inline CheckVector cv_add(const CheckVector& a, const CheckVector& b) {
  return a ^ b;
}

namespace detail {

/// i-power picked up when multiplying two single-system letters, chosen so
/// that X*Z = -iY (i.e. i^3 Y).
inline constexpr std::array<std::array<uint8_t, 4>, 4> kLetterPhase = [] {
  std::array<std::array<uint8_t, 4>, 4> t{};
  auto at = [&t](Letter a, Letter b) -> uint8_t& {
    return t[static_cast<size_t>(a)][static_cast<size_t>(b)];
  };
  at(Letter::X, Letter::Z) = 3;
  at(Letter::Z, Letter::X) = 1;
  at(Letter::X, Letter::Y) = 1;
  at(Letter::Y, Letter::X) = 3;
  at(Letter::Y, Letter::Z) = 1;
  at(Letter::Z, Letter::Y) = 3;
  return t;
}();

}  // namespace detail

/// Phase algebra of the toy observables G_n: phases are just signs, and
/// letter recombination never contributes (XZ = Y exactly).
struct ToyKind {
  /// Phase exponents live in Z_2; the phase is (-1)^exponent.
  static constexpr uint8_t phase_modulus = 2;
  static constexpr const char* name = "toy";

  static uint8_t mul_letter_phase(const CheckVector&, const CheckVector&) {
    return 0;
  }
  /// Phase cost of rewriting letters as X^x Z^z products; none in G_n.
  static uint8_t decompose_phase(const CheckVector&) { return 0; }
};

/// Phase algebra of the Pauli group P_n: phases are powers of i, and letter
/// recombination follows XZ = -iY.
struct QubitKind {
  /// Phase exponents live in Z_4; the phase is i^exponent.
  static constexpr uint8_t phase_modulus = 4;
  static constexpr const char* name = "qubit";

  static uint8_t mul_letter_phase(const CheckVector& a, const CheckVector& b) {
    uint8_t total = 0;
    for (size_t k = 0; k < a.num_systems(); ++k) {
      total = static_cast<uint8_t>(
          (total + detail::kLetterPhase[static_cast<size_t>(a.letter(k))]
                                       [static_cast<size_t>(b.letter(k))]) &
          3);
    }
    return total;
  }
  /// Every Y letter costs one i when rewritten as XZ (Y = iXZ).
  static uint8_t decompose_phase(const CheckVector& cv) {
    uint8_t total = 0;
    for (size_t k = 0; k < cv.num_systems(); ++k) {
      if (cv.x_bit(k) && cv.z_bit(k)) {
        total = static_cast<uint8_t>((total + 1) & 3);
      }
    }
    return total;
  }
};

/// Signed (toy) or i-power-phased (qubit) tensor product of letters.
/// Immutable value; all operations are pure.
template <typename K>
struct Observable {
  using Kind = K;

  CheckVector cv;
  /// Exponent of the phase unit: (-1)^phase for toy, i^phase for qubit.
  uint8_t phase = 0;

  Observable() = default;
  Observable(CheckVector cv_in, uint8_t phase_in)
      : cv(std::move(cv_in)),
        phase(static_cast<uint8_t>(phase_in % K::phase_modulus)) {}

  static Observable identity(size_t n) { return Observable(CheckVector(n), 0); }

  static Observable single(size_t n, size_t k, Letter l, bool negative = false) {
    CheckVector cv(n);
    cv.set_letter(k, l);
    return Observable(std::move(cv),
                      negative ? static_cast<uint8_t>(K::phase_modulus / 2) : 0);
  }

  size_t num_systems() const { return cv.num_systems(); }

  bool is_trivial() const { return cv.is_zero(); }
  bool is_identity() const { return cv.is_zero() && phase == 0; }
  bool is_negative_identity() const {
    return cv.is_zero() && phase == K::phase_modulus / 2;
  }

  /// Hermitian observables carry a real phase (+1 or -1).
  bool is_hermitian() const { return phase % (K::phase_modulus / 2) == 0; }

  /// +1 or -1; only meaningful for Hermitian observables.
  int sign() const { return phase == 0 ? 1 : -1; }

  Observable negated() const {
    return Observable(cv, static_cast<uint8_t>(phase + K::phase_modulus / 2));
  }

  bool commutes_with(const Observable& o) const {
    return symplectic_product(cv, o.cv) == 0;
  }

  bool operator==(const Observable&) const = default;
  std::strong_ordering operator<=>(const Observable& o) const {
    if (auto c = cv <=> o.cv; c != 0) {
      return c;
    }
    return phase <=> o.phase;
  }
};

using ToyObservable = Observable<ToyKind>;
using PauliObservable = Observable<QubitKind>;

/// Group multiplication. Check vectors add; phases add together with the
/// algebra's letter-recombination contribution.
template <typename K>
Observable<K> mul(const Observable<K>& a, const Observable<K>& b) {
  uint8_t phase = static_cast<uint8_t>(
      (a.phase + b.phase + K::mul_letter_phase(a.cv, b.cv)) % K::phase_modulus);
  return Observable<K>(a.cv ^ b.cv, phase);
}

inline ToyObservable toy_mul(const ToyObservable& a, const ToyObservable& b) {
  return mul(a, b);
}

inline PauliObservable pauli_mul(const PauliObservable& a,
                                 const PauliObservable& b) {
  return mul(a, b);
}

/// Letter-preserving map G_n -> P_n. Preserves check vectors and commutation
/// but is not multiplicative (toy XZ = Y while qubit XZ = -iY).
inline PauliObservable m_map(const ToyObservable& g) {
  return PauliObservable(g.cv, g.phase == 0 ? 0 : 2);
}

/// Ontic state of n elementary systems, packed base-4 little-endian:
/// digit k (0-based system k) is label-1, with label 1 -> (x,z) = (0,0),
/// 2 -> (1,0), 3 -> (0,1), 4 -> (1,1).
struct OnticIndex {
  uint64_t v = 0;

  auto operator<=>(const OnticIndex&) const = default;
};

inline size_t ontic_space_size(size_t n) { return size_t{1} << (2 * n); }

/// Label (1..4) of system k within the packed index.
inline int ontic_label(OnticIndex idx, size_t k) {
  return static_cast<int>((idx.v >> (2 * k)) & 3) + 1;
}

inline OnticIndex ontic_from_labels(std::initializer_list<int> labels) {
  OnticIndex idx;
  size_t k = 0;
  for (int label : labels) {
    idx.v |= static_cast<uint64_t>(label - 1) << (2 * (k++));
  }
  return idx;
}

/// The (x, z) bit pattern of an ontic index, in check-vector layout. The x
/// bit of system k is set iff its X-eigenvalue is -1, likewise z for Z.
inline CheckVector ontic_pattern(size_t n, OnticIndex idx) {
  CheckVector pat(n);
  for (size_t k = 0; k < n; ++k) {
    uint64_t digit = (idx.v >> (2 * k)) & 3;
    pat.set_x(k, digit & 1);
    pat.set_z(k, digit & 2);
  }
  return pat;
}

inline OnticIndex ontic_from_pattern(const CheckVector& pat) {
  OnticIndex idx;
  for (size_t k = 0; k < pat.num_systems(); ++k) {
    uint64_t digit = (pat.x_bit(k) ? 1u : 0u) | (pat.z_bit(k) ? 2u : 0u);
    idx.v |= digit << (2 * k);
  }
  return idx;
}

/// Value of a toy observable at an ontic state: the product over systems of
/// the letter diagonals (X = diag(1,-1,1,-1), Y = diag(1,-1,-1,1),
/// Z = diag(1,1,-1,-1)) times the observable's sign. With the bit encoding
/// this is a parity of ANDs.
inline int eigenvalue_at_pattern(const ToyObservable& g,
                                 const CheckVector& pattern) {
  bool negative = g.cv.x_part().and_parity(pattern.x_part()) ^
                  g.cv.z_part().and_parity(pattern.z_part()) ^ (g.phase != 0);
  return negative ? -1 : 1;
}

inline int eigenvalue(const ToyObservable& g, OnticIndex v) {
  size_t n = g.num_systems();
  if (v.v >= ontic_space_size(n)) {
    throw std::invalid_argument("ontic index out of range");
  }
  return eigenvalue_at_pattern(g, ontic_pattern(n, v));
}

/// Parses `SIGN? LETTER{n}` with SIGN in {+,-} (default +) and letters from
/// {I,X,Y,Z}. Exactly n letters are required.
template <typename K>
Observable<K> parse_observable(std::string_view text, size_t n) {
  size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    throw std::invalid_argument("duplicate sign in observable \"" +
                                std::string(text) + "\"");
  }
  if (pos == text.size()) {
    throw std::invalid_argument("observable \"" + std::string(text) +
                                "\" is missing its letter body");
  }
  if (text.size() - pos != n) {
    throw std::invalid_argument(
        "observable \"" + std::string(text) + "\" has " +
        std::to_string(text.size() - pos) + " letters, expected " +
        std::to_string(n));
  }
  CheckVector cv(n);
  for (size_t k = 0; k < n; ++k) {
    switch (text[pos + k]) {
      case 'I':
        break;
      case 'X':
        cv.set_letter(k, Letter::X);
        break;
      case 'Y':
        cv.set_letter(k, Letter::Y);
        break;
      case 'Z':
        cv.set_letter(k, Letter::Z);
        break;
      default:
        throw std::invalid_argument(std::string("unknown letter '") +
                                    text[pos + k] + "' in observable \"" +
                                    std::string(text) + "\"");
    }
  }
  return Observable<K>(std::move(cv),
                       negative ? static_cast<uint8_t>(K::phase_modulus / 2)
                                : 0);
}

/// Inverse of parse_observable for Hermitian observables. Imaginary phases
/// (qubit products only) render with an i marker; that form is diagnostic
/// and not re-parseable.
template <typename K>
std::string format_observable(const Observable<K>& g) {
  std::string out;
  switch (g.phase * (4 / K::phase_modulus)) {
    case 0:
      out += '+';
      break;
    case 1:
      out += "+i";
      break;
    case 2:
      out += '-';
      break;
    case 3:
      out += "-i";
      break;
  }
  for (size_t k = 0; k < g.num_systems(); ++k) {
    out += letter_char(g.cv.letter(k));
  }
  return out;
}

}  // namespace toystab

#endif  // TOYSTAB_OBSERVABLE_HPP
