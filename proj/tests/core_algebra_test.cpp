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

#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "toystab/observable.hpp"

namespace toystab {
namespace {

using testing::all_observables;
using testing::diagonal_oracle;
using testing::qobs;
using testing::random_observable;
using testing::tobs;

TEST(CheckVector, SymplecticProductDefiningCases) {
  EXPECT_EQ(symplectic_product(tobs("X").cv, tobs("Z").cv), 1);
  EXPECT_EQ(symplectic_product(tobs("XX").cv, tobs("ZZ").cv), 0);

  // r(X (x) Y (x) Z) = (1,1,0,0,1,1), which commutes with itself.
  CheckVector xyz = qobs("XYZ").cv;
  std::vector<int> expected_bits = {1, 1, 0, 0, 1, 1};
  for (size_t c = 0; c < 6; ++c) {
    EXPECT_EQ(xyz.column(c), expected_bits[c] == 1) << "column " << c;
  }
  EXPECT_EQ(symplectic_product(xyz, xyz), 0);

  EXPECT_THROW(symplectic_product(tobs("X").cv, tobs("XX").cv),
               std::invalid_argument);
}

TEST(CheckVector, Addition) {
  // X * Z has the Y letter pattern at n=1.
  EXPECT_EQ(cv_add(tobs("X").cv, tobs("Z").cv), tobs("Y").cv);

  // r(-Z (x) I) = (0,0,1,0); adding zero changes nothing.
  CheckVector zi = qobs("-ZI").cv;
  std::vector<int> expected_bits = {0, 0, 1, 0};
  for (size_t c = 0; c < 4; ++c) {
    EXPECT_EQ(zi.column(c), expected_bits[c] == 1) << "column " << c;
  }
  EXPECT_EQ(cv_add(zi, CheckVector(2)), zi);

  CheckVector xyz = qobs("XYZ").cv;
  EXPECT_EQ(cv_add(xyz, xyz), CheckVector(3));
}

TEST(ToyMul, PaperCases) {
  EXPECT_EQ(toy_mul(tobs("X"), tobs("Z")), tobs("Y"));
  EXPECT_EQ(toy_mul(tobs("-X"), tobs("-X")), tobs("I"));
  EXPECT_EQ(toy_mul(tobs("XX"), tobs("YY")), tobs("ZZ"));
}

TEST(PauliMul, PaperCases) {
  // XZ = -iY.
  PauliObservable xz = pauli_mul(qobs("X"), qobs("Z"));
  EXPECT_EQ(xz.cv, qobs("Y").cv);
  EXPECT_EQ(xz.phase, 3);

  EXPECT_EQ(pauli_mul(qobs("XX"), qobs("YY")), qobs("-ZZ"));

  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    PauliObservable g = random_observable<QubitKind>(4, rng);
    EXPECT_EQ(pauli_mul(PauliObservable::identity(4), g), g);
    EXPECT_EQ(pauli_mul(g, PauliObservable::identity(4)), g);
  }
}

TEST(PauliMul, AssociativeAndCommutationPhase) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    size_t n = 1 + rng.below(4);
    PauliObservable a = random_observable<QubitKind>(n, rng);
    PauliObservable b = random_observable<QubitKind>(n, rng);
    PauliObservable c = random_observable<QubitKind>(n, rng);
    EXPECT_EQ(pauli_mul(pauli_mul(a, b), c), pauli_mul(a, pauli_mul(b, c)));

    // g h = (-1)^sp(g,h) h g.
    PauliObservable gh = pauli_mul(a, b);
    PauliObservable hg = pauli_mul(b, a);
    int sp = symplectic_product(a.cv, b.cv);
    EXPECT_EQ(gh.cv, hg.cv);
    EXPECT_EQ(gh.phase, (hg.phase + 2 * sp) % 4);
  }
}

TEST(MMap, LetterPreservingButNotMultiplicative) {
  EXPECT_EQ(m_map(tobs("-XZ")), qobs("-XZ"));
  EXPECT_EQ(m_map(tobs("III")), qobs("III"));

  // m(X*Z) = m(Y) = Y, while m(X)m(Z) = XZ = -iY.
  PauliObservable via_toy = m_map(toy_mul(tobs("X"), tobs("Z")));
  PauliObservable via_qubit = pauli_mul(m_map(tobs("X")), m_map(tobs("Z")));
  EXPECT_EQ(via_toy, qobs("Y"));
  EXPECT_EQ(via_qubit.cv, qobs("Y").cv);
  EXPECT_EQ(via_qubit.phase, 3);
  EXPECT_NE(via_toy, via_qubit);
}

TEST(MMap, CheckVectorSignHomomorphism) {
  // r∘m is a homomorphism, and appending the sign bit gives a bijection
  // onto 2n+1 bits. Exhaustive at n = 1 and 2.
  for (size_t n : {1u, 2u}) {
    auto observables = all_observables<ToyKind>(n);
    std::set<std::pair<std::vector<bool>, bool>> images;
    for (const ToyObservable& g : observables) {
      std::vector<bool> bits;
      for (size_t c = 0; c < 2 * n; ++c) {
        bits.push_back(g.cv.column(c));
      }
      images.insert({bits, g.phase != 0});
      EXPECT_EQ(m_map(g).cv, g.cv);
    }
    EXPECT_EQ(images.size(), observables.size());
    EXPECT_EQ(images.size(), size_t{2} << (2 * n));

    for (const ToyObservable& g : observables) {
      for (const ToyObservable& h : observables) {
        EXPECT_EQ(toy_mul(g, h).cv, cv_add(g.cv, h.cv));
      }
    }
  }
}

TEST(Observable, EverythingSquaresToIdentity) {
  for (const ToyObservable& g : all_observables<ToyKind>(2)) {
    EXPECT_TRUE(toy_mul(g, g).is_identity());
  }
  for (const PauliObservable& g : all_observables<QubitKind>(2)) {
    ASSERT_TRUE(g.is_hermitian());
    EXPECT_TRUE(pauli_mul(g, g).is_identity());
  }
}

TEST(Eigenvalue, PaperCases) {
  // X = diag(1,-1,1,-1): ontic state 2 sits at the -1 entry.
  EXPECT_EQ(eigenvalue(tobs("X"), ontic_from_labels({2})), -1);
  EXPECT_EQ(eigenvalue(tobs("X"), ontic_from_labels({1})), 1);

  for (uint64_t v = 0; v < 16; ++v) {
    EXPECT_EQ(eigenvalue(tobs("II"), OnticIndex{v}), 1);
  }

  EXPECT_EQ(eigenvalue(tobs("XXX"), ontic_from_labels({1, 1, 1})), 1);

  EXPECT_THROW(eigenvalue(tobs("X"), OnticIndex{4}), std::invalid_argument);
}

TEST(Eigenvalue, MatchesDiagonalOracle) {
  for (size_t n : {1u, 2u}) {
    for (const ToyObservable& g : all_observables<ToyKind>(n)) {
      std::vector<int> diag = diagonal_oracle(g);
      for (uint64_t v = 0; v < diag.size(); ++v) {
        ASSERT_EQ(eigenvalue(g, OnticIndex{v}), diag[v])
            << format_observable(g) << " at " << v;
      }
    }
  }
}

TEST(Eigenvalue, MultiplicativeOverTheGroup) {
  for (size_t n : {1u, 2u, 3u}) {
    auto observables = all_observables<ToyKind>(n);
    for (const ToyObservable& g : observables) {
      for (const ToyObservable& h : observables) {
        ToyObservable product = toy_mul(g, h);
        for (uint64_t v = 0; v < ontic_space_size(n); ++v) {
          OnticIndex idx{v};
          ASSERT_EQ(eigenvalue(product, idx),
                    eigenvalue(g, idx) * eigenvalue(h, idx));
        }
      }
    }
  }
}

TEST(OnticIndex, LabelEncoding) {
  OnticIndex idx = ontic_from_labels({2, 4});
  EXPECT_EQ(ontic_label(idx, 0), 2);
  EXPECT_EQ(ontic_label(idx, 1), 4);
  EXPECT_EQ(ontic_from_pattern(ontic_pattern(2, idx)), idx);

  // Label -> bit pair: 1 -> (0,0), 2 -> (1,0), 3 -> (0,1), 4 -> (1,1).
  CheckVector pat = ontic_pattern(1, ontic_from_labels({3}));
  EXPECT_FALSE(pat.x_bit(0));
  EXPECT_TRUE(pat.z_bit(0));
}

TEST(ParseObservable, Grammar) {
  ToyObservable xxi = parse_observable<ToyKind>("+XXI", 3);
  EXPECT_EQ(xxi.cv.letter(0), Letter::X);
  EXPECT_EQ(xxi.cv.letter(1), Letter::X);
  EXPECT_EQ(xxi.cv.letter(2), Letter::I);
  EXPECT_EQ(xxi.phase, 0);

  ToyObservable zi = parse_observable<ToyKind>("-ZI", 2);
  EXPECT_EQ(zi.cv.letter(0), Letter::Z);
  EXPECT_EQ(zi.phase, 1);

  // Sign is optional and defaults to +.
  EXPECT_EQ(parse_observable<ToyKind>("XX", 2), parse_observable<ToyKind>("+XX", 2));

  EXPECT_THROW(parse_observable<ToyKind>("XYZW", 4), std::invalid_argument);
  EXPECT_THROW(parse_observable<ToyKind>("XYZ", 2), std::invalid_argument);
  EXPECT_THROW(parse_observable<ToyKind>("-", 1), std::invalid_argument);
  EXPECT_THROW(parse_observable<ToyKind>("", 1), std::invalid_argument);
  EXPECT_THROW(parse_observable<ToyKind>("++XX", 2), std::invalid_argument);
}

TEST(ParseObservable, RoundTrip) {
  for (size_t n : {1u, 2u}) {
    for (const ToyObservable& g : all_observables<ToyKind>(n)) {
      EXPECT_EQ(parse_observable<ToyKind>(format_observable(g), n), g);
    }
    for (const PauliObservable& g : all_observables<QubitKind>(n)) {
      EXPECT_EQ(parse_observable<QubitKind>(format_observable(g), n), g);
    }
  }
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    ToyObservable g = random_observable<ToyKind>(5, rng);
    EXPECT_EQ(parse_observable<ToyKind>(format_observable(g), 5), g);
  }
}

}  // namespace
}  // namespace toystab
