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

#ifndef TOYSTAB_TESTS_TEST_UTIL_HPP
#define TOYSTAB_TESTS_TEST_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "toystab/rng.hpp"
#include "toystab/stabilizer.hpp"
#include "toystab/transform.hpp"

namespace toystab::testing {

inline size_t letters_in(std::string_view text) {
  size_t n = text.size();
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    --n;
  }
  return n;
}

/// Observable literal with the system count read off the text.
inline ToyObservable tobs(std::string_view text) {
  return parse_observable<ToyKind>(text, letters_in(text));
}

inline PauliObservable qobs(std::string_view text) {
  return parse_observable<QubitKind>(text, letters_in(text));
}

template <typename K>
StabilizerState<K> make_state(std::initializer_list<std::string_view> gens) {
  std::vector<Observable<K>> list;
  size_t n = 0;
  for (std::string_view text : gens) {
    n = letters_in(text);
    list.push_back(parse_observable<K>(text, n));
  }
  return StabilizerState<K>(n, std::move(list));
}

inline ToyStabilizerState toy_state(std::initializer_list<std::string_view> g) {
  return make_state<ToyKind>(g);
}

inline QubitStabilizerState qubit_state(
    std::initializer_list<std::string_view> g) {
  return make_state<QubitKind>(g);
}

/// Independent eigenvalue oracle: the explicit diagonal of the observable's
/// matrix, built from the per-letter diagonals I = (1,1,1,1),
/// X = (1,-1,1,-1), Y = (1,-1,-1,1), Z = (1,1,-1,-1) by taking products
/// over systems, times the sign.
inline std::vector<int> diagonal_oracle(const ToyObservable& g) {
  auto letter_diag = [](Letter l) -> std::array<int, 4> {
    switch (l) {
      case Letter::I:
        return {1, 1, 1, 1};
      case Letter::X:
        return {1, -1, 1, -1};
      case Letter::Y:
        return {1, -1, -1, 1};
      case Letter::Z:
        return {1, 1, -1, -1};
    }
    return {0, 0, 0, 0};
  };
  size_t n = g.num_systems();
  std::vector<int> diag(ontic_space_size(n), g.sign());
  for (uint64_t v = 0; v < diag.size(); ++v) {
    for (size_t k = 0; k < n; ++k) {
      int label = static_cast<int>((v >> (2 * k)) & 3);
      diag[v] *= letter_diag(g.cv.letter(k))[label];
    }
  }
  return diag;
}

/// Every observable of the given algebra at system count n (both signs;
/// Hermitian only), in check-vector order.
template <typename K>
std::vector<Observable<K>> all_observables(size_t n) {
  std::vector<Observable<K>> out;
  std::vector<CheckVector> cvs;
  for (uint64_t code = 0; code < ontic_space_size(n); ++code) {
    CheckVector cv(n);
    for (size_t k = 0; k < n; ++k) {
      cv.set_x(k, (code >> k) & 1);
      cv.set_z(k, (code >> (n + k)) & 1);
    }
    cvs.push_back(std::move(cv));
  }
  for (const CheckVector& cv : cvs) {
    out.emplace_back(cv, 0);
    out.emplace_back(cv, K::phase_modulus / 2);
  }
  return out;
}

template <typename K>
Observable<K> random_observable(size_t n, Rng& rng) {
  CheckVector cv(n);
  for (size_t k = 0; k < n; ++k) {
    cv.set_x(k, rng.bit());
    cv.set_z(k, rng.bit());
  }
  return Observable<K>(cv, rng.bit() ? K::phase_modulus / 2 : 0);
}

/// Random valid generator list grown by rejection: keeps commuting,
/// independent draws until `count` generators are collected.
template <typename K>
std::vector<Observable<K>> random_generators(size_t n, size_t count,
                                             Rng& rng) {
  std::vector<Observable<K>> gens;
  while (gens.size() < count) {
    Observable<K> candidate = random_observable<K>(n, rng);
    if (candidate.is_trivial()) {
      continue;
    }
    std::vector<Observable<K>> trial = gens;
    trial.push_back(candidate);
    if (!validate_generators<K>(trial)) {
      gens = std::move(trial);
    }
  }
  return gens;
}

template <typename K>
StabilizerState<K> random_pure_state(size_t n, Rng& rng) {
  return StabilizerState<K>(n, random_generators<K>(n, n, rng));
}

/// Random valid transformation: a word of named gates, so validity holds by
/// construction while still reaching the whole group.
template <typename K>
Transformation<K> random_transformation(size_t n, Rng& rng,
                                        size_t word_length = 24) {
  Transformation<K> t = Transformation<K>::identity(n);
  for (size_t i = 0; i < word_length; ++i) {
    size_t k = rng.below(n);
    switch (rng.below(n > 1 ? 6 : 4)) {
      case 0:
        t = compose(gate_x<K>(n, k), t);
        break;
      case 1:
        t = compose(gate_z<K>(n, k), t);
        break;
      case 2:
        t = compose(gate_h<K>(n, k), t);
        break;
      case 3:
        t = compose(gate_s<K>(n, k), t);
        break;
      case 4:
      case 5: {
        size_t l = rng.below(n);
        while (l == k) {
          l = rng.below(n);
        }
        t = compose(rng.bit() ? gate_cnot<K>(n, k, l) : gate_cz<K>(n, k, l),
                    t);
        break;
      }
    }
  }
  return t;
}

/// The 24 elementary reversible transformations: ontic permutation in cycle
/// notation and the images of X and Z.
struct ElementaryRow {
  const char* cycles;
  const char* x_image;
  const char* z_image;
};

inline constexpr ElementaryRow kElementaryTransformations[24] = {
    {"(1)(2)(3)(4)", "+X", "+Z"}, {"(1)(2)(43)", "+Y", "+Z"},
    {"(1)(32)(4)", "+Z", "+X"},   {"(1)(342)", "+Y", "+X"},
    {"(1)(432)", "+Z", "+Y"},     {"(1)(42)(3)", "+X", "+Y"},
    {"(21)(3)(4)", "-Y", "+Z"},   {"(21)(43)", "-X", "+Z"},
    {"(231)(4)", "+Z", "-Y"},     {"(2341)", "-X", "-Y"},
    {"(2431)", "+Z", "-X"},       {"(241)(3)", "-Y", "-X"},
    {"(321)(4)", "-Y", "+X"},     {"(3421)", "-Z", "+X"},
    {"(31)(2)(4)", "+X", "-Y"},   {"(341)(2)", "-Z", "-Y"},
    {"(31)(42)", "+X", "-Z"},     {"(3241)", "-Y", "-Z"},
    {"(4321)", "-X", "+Y"},       {"(421)(3)", "-Z", "+Y"},
    {"(431)(2)", "+Y", "-X"},     {"(41)(2)(3)", "-Z", "-X"},
    {"(4231)", "+Y", "-Z"},       {"(41)(32)", "-X", "-Z"},
};

}  // namespace toystab::testing

#endif  // TOYSTAB_TESTS_TEST_UTIL_HPP
