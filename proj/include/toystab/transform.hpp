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

#ifndef TOYSTAB_TRANSFORM_HPP
#define TOYSTAB_TRANSFORM_HPP

#include <array>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "toystab/errors.hpp"
#include "toystab/stabilizer.hpp"

namespace toystab {

/// Why a list of 2n images fails to define a reversible transformation.
struct TransformationViolation {
  enum class Kind {
    wrong_count,
    dimension_mismatch,
    non_hermitian,
    commutation_pattern,
    singular_matrix,
  };
  Kind kind;
  size_t index_a = 0;
  size_t index_b = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::wrong_count:
        return "expected 2n images";
      case Kind::dimension_mismatch:
        return "image " + std::to_string(index_a) +
               " has a different system count";
      case Kind::non_hermitian:
        return "image " + std::to_string(index_a) +
               " carries an imaginary phase";
      case Kind::commutation_pattern:
        return "images " + std::to_string(index_a) + " and " +
               std::to_string(index_b) +
               " break the canonical commutation pattern";
      case Kind::singular_matrix:
        return "image check vectors are singular over GF(2)";
    }
    return "invalid transformation";
  }
};

/// Images must reproduce the commutation pattern of the X_k, Z_k basis:
/// slot k anticommutes with slot n+k and commutes with every other slot.
/// The check-vector matrix must additionally be invertible over GF(2).
template <typename K>
std::optional<TransformationViolation> validate_transformation(
    std::span<const Observable<K>> images, size_t n) {
  if (images.size() != 2 * n) {
    return TransformationViolation{TransformationViolation::Kind::wrong_count,
                                   images.size(), 0};
  }
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].num_systems() != n) {
      return TransformationViolation{
          TransformationViolation::Kind::dimension_mismatch, i, 0};
    }
    if (!images[i].is_hermitian()) {
      return TransformationViolation{
          TransformationViolation::Kind::non_hermitian, i, 0};
    }
  }
  for (size_t i = 0; i < images.size(); ++i) {
    for (size_t j = i + 1; j < images.size(); ++j) {
      int expected = (j == i + n) ? 1 : 0;
      if (symplectic_product(images[i].cv, images[j].cv) != expected) {
        return TransformationViolation{
            TransformationViolation::Kind::commutation_pattern, i, j};
      }
    }
  }
  Gf2Basis basis;
  for (const auto& img : images) {
    if (!basis.insert(img.cv.flat())) {
      return TransformationViolation{
          TransformationViolation::Kind::singular_matrix, 0, 0};
    }
  }
  return std::nullopt;
}

/// Reversible transformation held symbolically as the images of the
/// canonical generators: slot k is the image of X_{k+1}, slot n+k the image
/// of Z_{k+1}. Never materialized as a 4^n matrix outside the ontic oracle.
template <typename K>
class Transformation {
 public:
  using Obs = Observable<K>;

  /// Validates the canonical commutation pattern; throws on violation.
  Transformation(size_t n, std::vector<Obs> images)
      : n_(n), images_(std::move(images)) {
    if (auto violation = validate_transformation<K>(images_, n_)) {
      throw std::invalid_argument("invalid transformation: " +
                                  violation->describe());
    }
  }

  static Transformation identity(size_t n) {
    std::vector<Obs> images;
    images.reserve(2 * n);
    for (size_t k = 0; k < n; ++k) {
      images.push_back(Obs::single(n, k, Letter::X));
    }
    for (size_t k = 0; k < n; ++k) {
      images.push_back(Obs::single(n, k, Letter::Z));
    }
    return Transformation(n, std::move(images));
  }

  size_t num_systems() const { return n_; }
  std::span<const Obs> images() const { return images_; }
  const Obs& x_image(size_t k) const { return images_[k]; }
  const Obs& z_image(size_t k) const { return images_[n_ + k]; }

  /// Conjugation action on an observable: decompose g over the X_k/Z_k
  /// basis via its check vector and multiply the corresponding images,
  /// carrying g's phase and the algebra's decomposition phase.
  Obs apply(const Obs& g) const {
    if (g.num_systems() != n_) {
      throw std::invalid_argument(
          "observable system count differs from transformation");
    }
    Obs acc = Obs::identity(n_);
    for (size_t k = 0; k < n_; ++k) {
      if (g.cv.x_bit(k)) {
        acc = mul(acc, images_[k]);
      }
    }
    for (size_t k = 0; k < n_; ++k) {
      if (g.cv.z_bit(k)) {
        acc = mul(acc, images_[n_ + k]);
      }
    }
    uint8_t phase = static_cast<uint8_t>(
        (acc.phase + g.phase + K::decompose_phase(g.cv)) % K::phase_modulus);
    return Obs(acc.cv, phase);
  }

  /// Image state: each generator mapped through the conjugation action and
  /// re-canonicalized. Purity and group order are preserved.
  StabilizerState<K> apply(const StabilizerState<K>& s) const {
    if (s.num_systems() != n_) {
      throw std::invalid_argument(
          "state system count differs from transformation");
    }
    std::vector<Obs> gens;
    gens.reserve(s.num_generators());
    for (const Obs& g : s.generators()) {
      gens.push_back(apply(g));
    }
    return StabilizerState<K>(n_, std::move(gens));
  }

  Transformation inverse() const {
    // Check-vector map is linear; invert it by Gauss-Jordan, then fix each
    // image's phase so that the round trip lands on +X_k / +Z_k.
    size_t dim = 2 * n_;
    std::vector<BitVec> rows;
    std::vector<BitVec> inv_rows;
    rows.reserve(dim);
    inv_rows.reserve(dim);
    for (size_t i = 0; i < dim; ++i) {
      rows.push_back(images_[i].cv.flat());
      BitVec unit(dim);
      unit.set(i, true);
      inv_rows.push_back(std::move(unit));
    }
    // Basis row r holds the current expansion of input slot r; reduce the
    // unit target vectors after full elimination.
    for (size_t col = 0, next = 0; col < dim && next < dim; ++col) {
      size_t hit = dim;
      for (size_t r = next; r < dim; ++r) {
        if (rows[r].get(col)) {
          hit = r;
          break;
        }
      }
      if (hit == dim) {
        continue;
      }
      std::swap(rows[next], rows[hit]);
      std::swap(inv_rows[next], inv_rows[hit]);
      for (size_t r = 0; r < dim; ++r) {
        if (r != next && rows[r].get(col)) {
          rows[r] ^= rows[next];
          inv_rows[r] ^= inv_rows[next];
        }
      }
      ++next;
    }
    std::vector<Obs> inv_images(dim, Obs::identity(n_));
    for (size_t i = 0; i < dim; ++i) {
      // rows is now a permuted identity: rows[r] has its single bit at the
      // pivot column; inv_rows[r] is the preimage expansion of that column.
      size_t col = rows[i].first_set().value();
      CheckVector pre = CheckVector::from_flat(inv_rows[i]);
      Obs candidate(pre, 0);
      Obs round_trip = apply(candidate);
      uint8_t fix = static_cast<uint8_t>(
          (K::phase_modulus - round_trip.phase) % K::phase_modulus);
      inv_images[col] = Obs(pre, fix);
    }
    return Transformation(n_, std::move(inv_images));
  }

  bool operator==(const Transformation&) const = default;

 private:
  size_t n_ = 0;
  std::vector<Obs> images_;
};

using ToyTransformation = Transformation<ToyKind>;
using QubitTransformation = Transformation<QubitKind>;

/// compose(second, first) acts as first-then-second.
template <typename K>
Transformation<K> compose(const Transformation<K>& second,
                          const Transformation<K>& first) {
  if (second.num_systems() != first.num_systems()) {
    throw std::invalid_argument("transformation system counts differ");
  }
  std::vector<Observable<K>> images;
  images.reserve(2 * first.num_systems());
  for (const auto& img : first.images()) {
    images.push_back(second.apply(img));
  }
  return Transformation<K>(first.num_systems(), std::move(images));
}

template <typename K>
Transformation<K> invert(const Transformation<K>& t) {
  return t.inverse();
}

/// Bijection on the four ontic labels of an elementary system.
class ElementaryPermutation {
 public:
  ElementaryPermutation() : map_{0, 1, 2, 3} {}

  static ElementaryPermutation identity() { return {}; }

  /// image_of[i] is the 1-based image of label i+1.
  static ElementaryPermutation from_images(std::array<int, 4> image_of) {
    ElementaryPermutation p;
    bool seen[4] = {};
    for (size_t i = 0; i < 4; ++i) {
      int img = image_of[i];
      if (img < 1 || img > 4 || seen[img - 1]) {
        throw std::invalid_argument("permutation is not a bijection on 1..4");
      }
      seen[img - 1] = true;
      p.map_[i] = static_cast<uint8_t>(img - 1);
    }
    return p;
  }

  /// Parses cycle notation with every label listed exactly once, e.g.
  /// "(1)(2)(43)"; "(342)" sends 3 -> 4 -> 2 -> 3.
  static ElementaryPermutation from_cycles(std::string_view text) {
    std::array<int, 4> image_of{0, 0, 0, 0};
    bool seen[4] = {};
    size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') {
        throw std::invalid_argument("bad cycle notation: expected '('");
      }
      ++pos;
      std::vector<int> cycle;
      while (pos < text.size() && text[pos] != ')') {
        char c = text[pos];
        if (c < '1' || c > '4') {
          throw std::invalid_argument(
              std::string("bad cycle notation: unexpected '") + c + "'");
        }
        int label = c - '0';
        if (seen[label - 1]) {
          throw std::invalid_argument("bad cycle notation: repeated label " +
                                      std::to_string(label));
        }
        seen[label - 1] = true;
        cycle.push_back(label);
        ++pos;
      }
      if (pos == text.size()) {
        throw std::invalid_argument("bad cycle notation: unterminated cycle");
      }
      ++pos;  // ')'
      if (cycle.empty()) {
        throw std::invalid_argument("bad cycle notation: empty cycle");
      }
      for (size_t i = 0; i < cycle.size(); ++i) {
        image_of[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
      }
    }
    for (bool s : seen) {
      if (!s) {
        throw std::invalid_argument(
            "bad cycle notation: every label 1..4 must appear");
      }
    }
    return from_images(image_of);
  }

  /// 1-based image of a 1-based label.
  int apply(int label) const { return map_[label - 1] + 1; }

  /// Canonical cycle string: cycles ordered by their minimum label, each
  /// written so it ends on that minimum (the Table II convention).
  std::string to_cycles() const {
    std::string out;
    bool done[4] = {};
    for (int start = 1; start <= 4; ++start) {
      if (done[start - 1]) {
        continue;
      }
      std::vector<int> cycle;
      int cur = start;
      do {
        done[cur - 1] = true;
        cycle.push_back(cur);
        cur = apply(cur);
      } while (cur != start);
      out += '(';
      // Rotate so the minimum (the start) comes last.
      for (size_t i = 1; i <= cycle.size(); ++i) {
        out += static_cast<char>('0' + cycle[i % cycle.size()]);
      }
      out += ')';
    }
    return out;
  }

  friend ElementaryPermutation compose(const ElementaryPermutation& second,
                                       const ElementaryPermutation& first) {
    ElementaryPermutation out;
    for (int label = 1; label <= 4; ++label) {
      out.map_[label - 1] =
          static_cast<uint8_t>(second.apply(first.apply(label)) - 1);
    }
    return out;
  }

  ElementaryPermutation inverse() const {
    ElementaryPermutation out;
    for (int label = 1; label <= 4; ++label) {
      out.map_[apply(label) - 1] = static_cast<uint8_t>(label - 1);
    }
    return out;
  }

  bool operator==(const ElementaryPermutation&) const = default;
  auto operator<=>(const ElementaryPermutation&) const = default;

 private:
  std::array<uint8_t, 4> map_;
};

namespace detail {

/// Eigenvalue diagonal of a single-system toy observable, by label 1..4.
inline std::array<int, 4> letter_diagonal(Letter l, int sign) {
  std::array<int, 4> d;
  for (int label = 1; label <= 4; ++label) {
    uint64_t digit = static_cast<uint64_t>(label - 1);
    bool x_v = digit & 1;
    bool z_v = digit & 2;
    uint8_t bits = static_cast<uint8_t>(l);
    bool neg = ((bits & 1) && x_v) ^ ((bits & 2) && z_v);
    d[label - 1] = (neg ? -1 : 1) * sign;
  }
  return d;
}

}  // namespace detail

/// The unique n=1 toy transformation whose ontic action is the given
/// permutation; the images are read off from the permuted eigenvalue
/// diagonals. All 24 permutations are valid.
inline ToyTransformation from_permutation(const ElementaryPermutation& p) {
  auto image_of = [&](Letter l) {
    auto d = detail::letter_diagonal(l, 1);
    std::array<int, 4> permuted;
    for (int label = 1; label <= 4; ++label) {
      permuted[p.apply(label) - 1] = d[label - 1];
    }
    for (Letter candidate : {Letter::X, Letter::Y, Letter::Z}) {
      for (int sign : {1, -1}) {
        if (detail::letter_diagonal(candidate, sign) == permuted) {
          return ToyObservable::single(1, 0, candidate, sign < 0);
        }
      }
    }
    throw std::logic_error("permuted diagonal is not a signed letter");
  };
  return ToyTransformation(1, {image_of(Letter::X), image_of(Letter::Z)});
}

/// The explicit ontic permutation realizing a toy transformation: entry v
/// is the image index. Brute force, guarded.
inline std::vector<OnticIndex> ontic_permutation(const ToyTransformation& t,
                                                 size_t max_n = 6) {
  size_t n = t.num_systems();
  if (n > max_n) {
    throw GuardExceeded("ontic_permutation", n, max_n);
  }
  ToyTransformation inv = t.inverse();
  size_t space = ontic_space_size(n);
  std::vector<OnticIndex> out(space);
  std::vector<char> hit(space, 0);
  // Pull each basis observable back through the inverse once.
  std::vector<ToyObservable> x_pre, z_pre;
  for (size_t k = 0; k < n; ++k) {
    x_pre.push_back(inv.x_image(k));
    z_pre.push_back(inv.z_image(k));
  }
  for (size_t v = 0; v < space; ++v) {
    CheckVector pat = ontic_pattern(n, OnticIndex{v});
    CheckVector image(n);
    // The image state's X_k/Z_k values equal the preimage observables'
    // values at v; the bit encoding reads the state straight off them.
    for (size_t k = 0; k < n; ++k) {
      image.set_x(k, eigenvalue_at_pattern(x_pre[k], pat) == -1);
      image.set_z(k, eigenvalue_at_pattern(z_pre[k], pat) == -1);
    }
    OnticIndex u = ontic_from_pattern(image);
    if (hit[u.v]) {
      throw std::logic_error("transformation does not act as a permutation");
    }
    hit[u.v] = 1;
    out[v] = u;
  }
  return out;
}

namespace detail {

template <typename K>
Observable<K> embed_single(size_t n, size_t k, Letter l, bool negative) {
  return Observable<K>::single(n, k, l, negative);
}

template <typename K>
Transformation<K> single_site_transformation(size_t n, size_t k, Letter x_to,
                                             bool x_neg, Letter z_to,
                                             bool z_neg) {
  auto t = Transformation<K>::identity(n);
  std::vector<Observable<K>> images(t.images().begin(), t.images().end());
  images[k] = embed_single<K>(n, k, x_to, x_neg);
  images[n + k] = embed_single<K>(n, k, z_to, z_neg);
  return Transformation<K>(n, std::move(images));
}

}  // namespace detail

/// X-type flip: X -> X, Z -> -Z (both algebras).
template <typename K>
Transformation<K> gate_x(size_t n, size_t k) {
  return detail::single_site_transformation<K>(n, k, Letter::X, false,
                                               Letter::Z, true);
}

/// Z-type flip: X -> -X, Z -> Z.
template <typename K>
Transformation<K> gate_z(size_t n, size_t k) {
  return detail::single_site_transformation<K>(n, k, Letter::Z, false,
                                               Letter::X, true);
}

/// Basis exchange: X -> Z, Z -> X. In the toy theory this is the label swap
/// 3 <-> 2 and fixes Y; the qubit version sends Y -> -Y.
template <typename K>
Transformation<K> gate_h(size_t n, size_t k) {
  return detail::single_site_transformation<K>(n, k, Letter::Z, false,
                                               Letter::X, false);
}

/// Phase-type gate: qubit S sends X -> Y, Z -> Z; the toy analogue is the
/// 4-cycle 1 -> 4 -> 2 -> 3 -> 1, which sends X -> Y but Z -> -Z.
template <typename K>
Transformation<K> gate_s(size_t n, size_t k) {
  if constexpr (std::is_same_v<K, ToyKind>) {
    return detail::single_site_transformation<K>(n, k, Letter::Y, false,
                                                 Letter::Z, true);
  } else {
    return detail::single_site_transformation<K>(n, k, Letter::Y, false,
                                                 Letter::Z, false);
  }
}

/// Controlled-NOT pattern: X_c -> X_c X_t, X_t -> X_t, Z_c -> Z_c,
/// Z_t -> Z_c Z_t.
template <typename K>
Transformation<K> gate_cnot(size_t n, size_t c, size_t t) {
  if (c == t) {
    throw std::invalid_argument("cnot requires two distinct systems");
  }
  auto base = Transformation<K>::identity(n);
  std::vector<Observable<K>> images(base.images().begin(),
                                    base.images().end());
  CheckVector xc(n);
  xc.set_letter(c, Letter::X);
  xc.set_letter(t, Letter::X);
  images[c] = Observable<K>(xc, 0);
  CheckVector zt(n);
  zt.set_letter(c, Letter::Z);
  zt.set_letter(t, Letter::Z);
  images[n + t] = Observable<K>(zt, 0);
  return Transformation<K>(n, std::move(images));
}

/// Controlled-Z pattern: X_k -> X_k Z_l, X_l -> Z_k X_l, Z's fixed.
template <typename K>
Transformation<K> gate_cz(size_t n, size_t k, size_t l) {
  if (k == l) {
    throw std::invalid_argument("cz requires two distinct systems");
  }
  auto base = Transformation<K>::identity(n);
  std::vector<Observable<K>> images(base.images().begin(),
                                    base.images().end());
  CheckVector xk(n);
  xk.set_letter(k, Letter::X);
  xk.set_letter(l, Letter::Z);
  images[k] = Observable<K>(xk, 0);
  CheckVector xl(n);
  xl.set_letter(k, Letter::Z);
  xl.set_letter(l, Letter::X);
  images[l] = Observable<K>(xl, 0);
  return Transformation<K>(n, std::move(images));
}

/// Any of the 24 single-system toy transformations, embedded at system k.
inline ToyTransformation gate_perm(size_t n, size_t k,
                                   const ElementaryPermutation& p) {
  ToyTransformation local = from_permutation(p);
  const ToyObservable& ix = local.x_image(0);
  const ToyObservable& iz = local.z_image(0);
  return detail::single_site_transformation<ToyKind>(
      n, k, ix.cv.letter(0), ix.phase != 0, iz.cv.letter(0), iz.phase != 0);
}

}  // namespace toystab

#endif  // TOYSTAB_TRANSFORM_HPP
