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

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "toystab/ontic.hpp"
#include "toystab/stabilizer.hpp"

namespace toystab {
namespace {

using testing::all_observables;
using testing::qobs;
using testing::qubit_state;
using testing::random_generators;
using testing::random_observable;
using testing::random_pure_state;
using testing::tobs;
using testing::toy_state;

TEST(ValidateGenerators, DetectsEachViolation) {
  EXPECT_FALSE(validate_generators<ToyKind>({tobs("XX"), tobs("ZZ")}));
  EXPECT_FALSE(validate_generators<ToyKind>(std::vector<ToyObservable>{}));

  auto anti = validate_generators<ToyKind>({tobs("X"), tobs("Z")});
  ASSERT_TRUE(anti);
  EXPECT_EQ(anti->kind, GeneratorViolation::Kind::anticommuting_pair);
  EXPECT_EQ(anti->index_a, 0u);
  EXPECT_EQ(anti->index_b, 1u);

  // The third generator is the product of the first two.
  EXPECT_EQ(cv_add(tobs("XX").cv, tobs("YY").cv), tobs("ZZ").cv);
  auto dep =
      validate_generators<ToyKind>({tobs("XX"), tobs("YY"), tobs("ZZ")});
  ASSERT_TRUE(dep);
  EXPECT_EQ(dep->kind, GeneratorViolation::Kind::dependent_generator);
  EXPECT_EQ(dep->index_a, 2u);

  auto imag = validate_generators<QubitKind>(
      {PauliObservable(qobs("X").cv, 1)});
  ASSERT_TRUE(imag);
  EXPECT_EQ(imag->kind, GeneratorViolation::Kind::non_hermitian);
}

TEST(ValidateGenerators, AgreesAcrossTheoriesOnRandomLists) {
  // Lemma-style cross-theory check: a toy list is valid iff its letterwise
  // qubit image is.
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    size_t n = 1 + rng.below(3);
    size_t count = 1 + rng.below(n + 1);
    std::vector<ToyObservable> toy;
    std::vector<PauliObservable> qubit;
    for (size_t j = 0; j < count; ++j) {
      ToyObservable g = random_observable<ToyKind>(n, rng);
      toy.push_back(g);
      qubit.push_back(m_map(g));
    }
    EXPECT_EQ(validate_generators<ToyKind>(toy).has_value(),
              validate_generators<QubitKind>(qubit).has_value());
  }
}

TEST(StabilizerState, CanonicalFormIsOrderIndependent) {
  EXPECT_EQ(toy_state({"-ZI", "+IZ"}), toy_state({"+IZ", "-ZI"}));

  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    size_t n = 1 + rng.below(3);
    auto gens = random_generators<ToyKind>(n, 1 + rng.below(n), rng);
    auto shuffled = gens;
    for (size_t j = shuffled.size(); j > 1; --j) {
      std::swap(shuffled[j - 1], shuffled[rng.below(j)]);
    }
    EXPECT_EQ(ToyStabilizerState(n, gens), ToyStabilizerState(n, shuffled));
  }
}

TEST(StabilizerState, CanonicalFormReducesRows) {
  // <Z1Z2, Z2> reduces to leading-pivot form <Z1, Z2>.
  ToyStabilizerState s = toy_state({"+ZZ", "+IZ"});
  ASSERT_EQ(s.num_generators(), 2u);
  EXPECT_EQ(s.generators()[0], tobs("ZI"));
  EXPECT_EQ(s.generators()[1], tobs("IZ"));

  EXPECT_EQ(ToyStabilizerState::trivial(1).num_generators(), 0u);

  EXPECT_THROW(toy_state({"+X", "+Z"}), std::invalid_argument);
}

TEST(StabilizerState, MembershipTrichotomy) {
  ToyStabilizerState toy = toy_state({"+XX", "+YY"});
  EXPECT_EQ(toy.membership(tobs("ZZ")), Membership::in_group);
  EXPECT_EQ(toy.membership(tobs("-ZZ")), Membership::negation_in_group);
  EXPECT_EQ(toy.membership(tobs("XI")), Membership::neither);

  QubitStabilizerState qubit = qubit_state({"+XX", "+YY"});
  EXPECT_EQ(qubit.membership(qobs("ZZ")), Membership::negation_in_group);
  EXPECT_EQ(qubit.membership(qobs("-ZZ")), Membership::in_group);

  EXPECT_EQ(toy.membership(tobs("II")), Membership::in_group);
  EXPECT_EQ(qubit.membership(qobs("II")), Membership::in_group);
}

TEST(StabilizerState, MembershipAgreesWithExpandSearch) {
  for (size_t n : {1u, 2u}) {
    for (const ToyStabilizerState& s : all_stabilizer_states(n)) {
      std::vector<ToyObservable> elements = s.expand();
      for (const ToyObservable& g : all_observables<ToyKind>(n)) {
        Membership expected = Membership::neither;
        if (std::binary_search(elements.begin(), elements.end(), g)) {
          expected = Membership::in_group;
        } else if (std::binary_search(elements.begin(), elements.end(),
                                      g.negated())) {
          expected = Membership::negation_in_group;
        }
        ASSERT_EQ(s.membership(g), expected);
      }
    }
  }
}

TEST(StabilizerState, ExpandDivergesBetweenTheories) {
  // Same generators, different subgroups: the key difference between the
  // two algebras.
  std::vector<ToyObservable> toy = toy_state({"+XX", "+YY"}).expand();
  std::vector<ToyObservable> toy_expected = {tobs("II"), tobs("XX"),
                                             tobs("YY"), tobs("ZZ")};
  std::sort(toy_expected.begin(), toy_expected.end());
  EXPECT_EQ(toy, toy_expected);

  std::vector<PauliObservable> qubit = qubit_state({"+XX", "+YY"}).expand();
  std::vector<PauliObservable> qubit_expected = {qobs("II"), qobs("XX"),
                                                 qobs("YY"), qobs("-ZZ")};
  std::sort(qubit_expected.begin(), qubit_expected.end());
  EXPECT_EQ(qubit, qubit_expected);

  EXPECT_EQ(ToyStabilizerState::trivial(2).expand(),
            std::vector<ToyObservable>{tobs("II")});
}

TEST(StabilizerState, ExpandGuard) {
  std::vector<ToyObservable> gens;
  size_t n = 21;
  for (size_t k = 0; k < n; ++k) {
    gens.push_back(ToyObservable::single(n, k, Letter::Z));
  }
  ToyStabilizerState s(n, gens);
  EXPECT_THROW(s.expand(), GuardExceeded);
  EXPECT_NO_THROW(s.expand(21));
}

TEST(StabilizerState, Purity) {
  EXPECT_TRUE(toy_state({"+X"}).is_pure());
  EXPECT_FALSE(ToyStabilizerState::trivial(1).is_pure());
  EXPECT_FALSE(toy_state({"+ZI"}).is_pure());
}

TEST(Disjointness, DefiningCases) {
  EXPECT_TRUE(are_disjoint(toy_state({"+X"}), toy_state({"-X"})));
  EXPECT_FALSE(are_disjoint(toy_state({"+X"}), toy_state({"+Z"})));
  for (const ToyStabilizerState& s : all_stabilizer_states(1)) {
    EXPECT_FALSE(are_disjoint(s, s));
  }
  EXPECT_TRUE(
      are_disjoint(qubit_state({"+XX", "+YY"}), qubit_state({"+ZZ", "+XX"})));
}

TEST(Disjointness, MatchesSupportOracle) {
  for (size_t n : {1u, 2u}) {
    auto states = all_stabilizer_states(n);
    std::vector<OnticSupport> supports;
    supports.reserve(states.size());
    for (const auto& s : states) {
      supports.push_back(support_of(s));
    }
    for (size_t i = 0; i < states.size(); ++i) {
      for (size_t j = 0; j < states.size(); ++j) {
        bool overlap = false;
        for (OnticIndex v : supports[i].members) {
          if (supports[j].contains(v)) {
            overlap = true;
            break;
          }
        }
        ASSERT_EQ(are_disjoint(states[i], states[j]), !overlap)
            << "states " << i << ", " << j << " at n=" << n;
      }
    }
  }

  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    ToyStabilizerState s = random_pure_state<ToyKind>(3, rng);
    ToyStabilizerState t = random_pure_state<ToyKind>(3, rng);
    OnticSupport ss = support_of(s);
    OnticSupport ts = support_of(t);
    bool overlap = false;
    for (OnticIndex v : ss.members) {
      overlap = overlap || ts.contains(v);
    }
    EXPECT_EQ(are_disjoint(s, t), !overlap);
  }
}

TEST(Rephasing, DefiningCases) {
  EXPECT_TRUE(is_rephasing(qubit_state({"+ZI", "-IZ"}),
                           qubit_state({"-ZI", "+IZ"})));
  EXPECT_FALSE(is_rephasing(toy_state({"+X"}), toy_state({"+Z"})));
  for (const ToyStabilizerState& s : all_stabilizer_states(1)) {
    EXPECT_TRUE(is_rephasing(s, s));
  }
}

// Signed intersection of the two expanded subgroups, as a reference for mix.
template <typename K>
std::vector<Observable<K>> intersection_oracle(const StabilizerState<K>& a,
                                               const StabilizerState<K>& b) {
  std::vector<Observable<K>> ea = a.expand();
  std::vector<Observable<K>> eb = b.expand();
  std::vector<Observable<K>> out;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(out));
  return out;
}

TEST(Mix, IntersectionSubgroup) {
  // <-Z1, Z2> mixed with <Z1, -Z2> is <-Z1Z2>.
  QubitStabilizerState mixed =
      mix(qubit_state({"-ZI", "+IZ"}), qubit_state({"+ZI", "-IZ"}));
  EXPECT_EQ(mixed, qubit_state({"-ZZ"}));

  ToyStabilizerState s = toy_state({"+ZI", "+IZ"});
  EXPECT_EQ(mix(s, s), s);

  ToyStabilizerState t = toy_state({"-ZI", "-IZ"});
  EXPECT_EQ(mix(s, t), toy_state({"+ZZ"}));
  EXPECT_EQ(mix(s, t).expand(), intersection_oracle(s, t));

  EXPECT_THROW(mix(toy_state({"+X"}), toy_state({"+Z"})),
               std::invalid_argument);
}

TEST(Mix, MatchesIntersectionOracleExhaustively) {
  auto states = all_stabilizer_states(2);
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = 0; j < states.size(); ++j) {
      if (!is_rephasing(states[i], states[j])) {
        continue;
      }
      EXPECT_EQ(mix(states[i], states[j]).expand(),
                intersection_oracle(states[i], states[j]));
    }
  }
}

// Exhaustive reference: every subgroup <common generators, h> with h
// outside both inputs.
template <typename K>
std::set<std::vector<Observable<K>>> superposition_oracle(
    const StabilizerState<K>& s, const StabilizerState<K>& t) {
  StabilizerState<K> common = mix(s, t);
  size_t n = s.num_systems();
  std::set<std::vector<Observable<K>>> out;
  for (const Observable<K>& h : all_observables<K>(n)) {
    if (s.membership(h) != Membership::neither ||
        t.membership(h) != Membership::neither) {
      continue;
    }
    std::vector<Observable<K>> gens(common.generators().begin(),
                                    common.generators().end());
    gens.push_back(h);
    if (validate_generators<K>(gens)) {
      continue;
    }
    StabilizerState<K> candidate(n, std::move(gens));
    out.insert(std::vector<Observable<K>>(candidate.generators().begin(),
                                          candidate.generators().end()));
  }
  return out;
}

template <typename K>
std::set<std::vector<Observable<K>>> as_generator_set(
    const std::vector<StabilizerState<K>>& states) {
  std::set<std::vector<Observable<K>>> out;
  for (const auto& s : states) {
    out.insert(std::vector<Observable<K>>(s.generators().begin(),
                                          s.generators().end()));
  }
  return out;
}

TEST(Superpositions, QubitPaperExample) {
  QubitStabilizerState s = qubit_state({"+ZI", "+IZ"});
  QubitStabilizerState t = qubit_state({"-ZI", "-IZ"});
  std::vector<QubitStabilizerState> result = superpositions(s, t);
  ASSERT_EQ(result.size(), 4u);

  // The four <Z1Z2, h> with h in {+-X1X2, +-X1Y2}.
  std::vector<QubitStabilizerState> expected = {
      qubit_state({"+ZZ", "+XX"}),
      qubit_state({"+ZZ", "-XX"}),
      qubit_state({"+ZZ", "+XY"}),
      qubit_state({"+ZZ", "-XY"}),
  };
  EXPECT_EQ(as_generator_set(result), as_generator_set(expected));
  EXPECT_EQ(as_generator_set(result), superposition_oracle(s, t));
}

TEST(Superpositions, ToyCases) {
  ToyStabilizerState s = toy_state({"+ZI", "+IZ"});
  ToyStabilizerState t = toy_state({"-ZI", "-IZ"});
  std::vector<ToyStabilizerState> result = superpositions(s, t);
  ASSERT_EQ(result.size(), 4u);
  EXPECT_EQ(as_generator_set(result), superposition_oracle(s, t));
  std::vector<ToyStabilizerState> expected = {
      toy_state({"+ZZ", "+XX"}),
      toy_state({"+ZZ", "-XX"}),
      toy_state({"+ZZ", "+XY"}),
      toy_state({"+ZZ", "-XY"}),
  };
  EXPECT_EQ(as_generator_set(result), as_generator_set(expected));

  // Elementary system: the superpositions of <Z> and <-Z>.
  std::vector<ToyStabilizerState> elementary =
      superpositions(toy_state({"+Z"}), toy_state({"-Z"}));
  std::vector<ToyStabilizerState> elementary_expected = {
      toy_state({"+X"}), toy_state({"-X"}), toy_state({"+Y"}),
      toy_state({"-Y"})};
  EXPECT_EQ(as_generator_set(elementary),
            as_generator_set(elementary_expected));

  EXPECT_THROW(superpositions(s, s), std::invalid_argument);
  EXPECT_THROW(superpositions(toy_state({"+ZI"}), toy_state({"-ZI"})),
               std::invalid_argument);
}

TEST(Superpositions, AlwaysExactlyFourDistinctValidStates) {
  Rng rng(47);
  for (int i = 0; i < 150; ++i) {
    size_t n = 1 + rng.below(4);
    ToyStabilizerState s = random_pure_state<ToyKind>(n, rng);
    // Rephase: flip at least one canonical generator sign.
    std::vector<ToyObservable> gens(s.generators().begin(),
                                    s.generators().end());
    bool flipped = false;
    for (auto& g : gens) {
      if (rng.bit()) {
        g = g.negated();
        flipped = true;
      }
    }
    if (!flipped) {
      size_t idx = rng.below(gens.size());
      gens[idx] = gens[idx].negated();
    }
    ToyStabilizerState t(n, gens);
    if (s == t) {
      continue;
    }
    std::vector<ToyStabilizerState> result = superpositions(s, t);
    ASSERT_EQ(result.size(), 4u);
    EXPECT_EQ(as_generator_set(result).size(), 4u);
    OnticSupport ss = support_of(s);
    OnticSupport ts = support_of(t);
    for (const auto& state : result) {
      EXPECT_TRUE(state.is_pure());
      // Each superposition draws ontic states from both inputs.
      OnticSupport sup = support_of(state);
      bool meets_s = false, meets_t = false;
      for (OnticIndex v : sup.members) {
        meets_s = meets_s || ss.contains(v);
        meets_t = meets_t || ts.contains(v);
      }
      EXPECT_TRUE(meets_s);
      EXPECT_TRUE(meets_t);
    }
    if (n <= 3) {
      EXPECT_EQ(as_generator_set(result), superposition_oracle(s, t));
    }
  }
}

}  // namespace
}  // namespace toystab
