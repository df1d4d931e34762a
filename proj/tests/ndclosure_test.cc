// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxext/ndclosure.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "generators.h"
#include "maxext/errors.h"
#include "maxext/fcp.h"
#include "maxext/property.h"
#include "reference.h"

namespace maxext {
namespace {

NdClosureOperator upset(Nat k) {
  return NdClosureOperator(testing::upset_rules(k), Universe(k + 1));
}

TEST(IsNclosedTest, Examples) {
  const NdClosureOperator n({{FinSet{}, FinSet{0, 1, 2}}}, Universe(3));
  EXPECT_FALSE(is_nclosed(FinSet{}, n));
  EXPECT_TRUE(is_nclosed(FinSet{1}, n));
  EXPECT_TRUE(is_nclosed(FinSet{2, 3}, upset(3)));
  EXPECT_FALSE(is_nclosed(FinSet{1, 3}, upset(3)));
}

TEST(NdClosureOperatorTest, ValidatesChoices) {
  EXPECT_THROW(NdClosureOperator({{FinSet{0}, FinSet{}}}, Universe(3)),
               InputError);
  EXPECT_THROW(NdClosureOperator({{FinSet{0}, FinSet{3}}}, Universe(3)),
               InputError);
  const NdClosureOperator cut = NdClosureOperator::truncated(
      {{FinSet{0}, FinSet{1, 7}}}, Universe(3));
  ASSERT_EQ(cut.rules().size(), 1u);
  EXPECT_EQ(cut.rules()[0].choices, FinSet{1});
  EXPECT_THROW(NdClosureOperator::truncated({{FinSet{0}, FinSet{7}}},
                                            Universe(3)),
               InputError);
}

TEST(NclosedFamilyTest, Examples) {
  EXPECT_EQ(nclosed_family(NdClosureOperator({}, Universe(3)), FinSet{0, 2})
                .size(),
            4u);
  EXPECT_EQ(nclosed_family(upset(3), FinSet::interval(0, 4)),
            (std::vector<FinSet>{FinSet{3}, FinSet{2, 3}, FinSet{1, 2, 3},
                                 FinSet{0, 1, 2, 3}}));
  EXPECT_TRUE(nclosed_family(NdClosureOperator({{FinSet{}, FinSet{5}}},
                                               Universe(6)),
                             FinSet{0, 1})
                  .empty());
}

TEST(NclosedFamilyTest, MatchesReferenceInIndexOrder) {
  testing::Rng rng(testing::seed_from_environment());
  for (int trial = 0; trial < 100; ++trial) {
    const Nat u = testing::uniform(rng, 1, 9);
    const std::vector<NdRule> rules = testing::random_nd_rules(rng, u, u);
    const NdClosureOperator n(rules, Universe(u));
    const FinSet within = testing::random_subset(rng, testing::ground(u), 0.7);
    std::vector<FinSet> expected;
    for (const FinSet& y : testing::all_subsets(within)) {
      if (testing::reference_nclosed(y, rules)) expected.push_back(y);
    }
    std::sort(expected.begin(), expected.end(), index_less);
    EXPECT_EQ(nclosed_family(n, within), expected);
  }
}

TEST(NclosedFamilyTest, UnionOfAChainOfClosedSetsIsClosed) {
  testing::Rng rng(testing::seed_from_environment());
  for (int trial = 0; trial < 100; ++trial) {
    const Nat u = testing::uniform(rng, 1, 9);
    const NdClosureOperator n(testing::random_nd_rules(rng, u, u), Universe(u));
    const std::vector<FinSet> family = nclosed_family(n, testing::ground(u));
    // Build a chain greedily from the family.
    FinSet chain_union;
    std::optional<FinSet> link;
    for (const FinSet& y : family) {
      if (!link || (link->is_subset_of(y) && testing::coin(rng))) {
        link = y;
        chain_union = set_union(chain_union, y);
      }
    }
    if (link) EXPECT_TRUE(is_nclosed(chain_union, n));
  }
}

TEST(NclosedFamilyTest, MinimalClosedSetDependsOnTheTruncation) {
  // Over {0..k} the least closed set is {k}; it changes with k, so no
  // finite truncation predicts a least closed set of the untruncated rules.
  for (Nat k = 1; k <= 6; ++k) {
    const std::vector<FinSet> family =
        nclosed_family(upset(k), FinSet::interval(0, k + 1));
    ASSERT_FALSE(family.empty());
    EXPECT_EQ(family.front(), FinSet{k});
    for (const FinSet& y : family) EXPECT_TRUE(FinSet{k}.is_subset_of(y));
  }
}

TEST(LeastWitnessTest, MatchesBruteForce) {
  testing::Rng rng(testing::seed_from_environment());
  for (int trial = 0; trial < 200; ++trial) {
    const Nat u = testing::uniform(rng, 1, 9);
    const Universe universe(u);
    const std::vector<NdRule> rules = testing::random_nd_rules(rng, u, u);
    const NdClosureOperator n(rules, universe);
    const testing::ForbiddenFamily family =
        testing::random_forbidden_family(rng, universe.ground(), 3);
    const Property phi = Property::from_predicate(family, universe);
    const FinSet a = testing::random_subset(rng, universe.ground(), 0.8);
    const FinSet required = testing::random_subset(rng, a, 0.2);
    std::optional<FinSet> expected;
    for (const FinSet& y : testing::all_subsets(a)) {
      if (!required.is_subset_of(y) || !testing::reference_nclosed(y, rules) ||
          !family(y)) {
        continue;
      }
      if (!expected || index_less(y, *expected)) expected = y;
    }
    std::uint64_t nodes = 0;
    EXPECT_EQ(least_closed_witness(required, a, phi, n, kDefaultSearchBudget,
                                   nodes),
              expected);
  }
}

TEST(NceMaximalTest, UpsetStartingAtTheTop) {
  const Universe universe(4);
  EXPECT_EQ(nce_maximal(universe.ground(), FinSet{3},
                        Property::always(universe), upset(3)),
            (FinSet{0, 1, 2, 3}));
}

TEST(NceMaximalTest, EmptyOperatorIsGreedy) {
  testing::Rng rng(testing::seed_from_environment());
  for (int trial = 0; trial < 50; ++trial) {
    const Nat u = testing::uniform(rng, 1, 10);
    const Universe universe(u);
    const Property phi = Property::from_formula(
        testing::random_fc_formula(rng, u), universe,
        testing::corpus_parameters());
    const FinSet a = testing::random_subset(rng, universe.ground());
    EXPECT_EQ(nce_maximal(a, FinSet{}, phi, NdClosureOperator({}, universe)),
              greedy_maximal(a, phi));
  }
}

TEST(NceMaximalTest, RandomInstancesPassTheOracle) {
  testing::Rng rng(testing::seed_from_environment());
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    const Nat u = testing::uniform(rng, 1, 9);
    const Universe universe(u);
    const std::vector<NdRule> rules = testing::random_nd_rules(rng, u, u);
    const NdClosureOperator n(rules, universe);
    const testing::ForbiddenFamily family =
        testing::random_forbidden_family(rng, universe.ground(), 3);
    const FinSet a = testing::random_subset(rng, universe.ground(), 0.8);
    std::vector<FinSet> starts;
    for (const FinSet& y : nclosed_family(n, a)) {
      if (family(y)) starts.push_back(y);
    }
    if (starts.empty()) continue;
    ++checked;
    const FinSet c = starts[testing::uniform(rng, 0, starts.size() - 1)];
    const FinSet b = nce_maximal(a, c, Property::from_predicate(family, universe), n);
    const auto admissible = [&](const FinSet& y) {
      return testing::reference_nclosed(y, rules) && family(y);
    };
    ASSERT_TRUE(c.is_subset_of(b) && b.is_subset_of(a));
    ASSERT_TRUE(admissible(b));
    ASSERT_TRUE(testing::reference_maximal(a, b, admissible)) << b;
  }
  EXPECT_EQ(checked, 100);
}

TEST(NceMaximalTest, PreconditionsAndBudget) {
  const Universe universe(4);
  const Property always = Property::always(universe);
  EXPECT_THROW(nce_maximal(universe.ground(), FinSet{}, always, upset(3)),
               PreconditionError);
  EXPECT_THROW(nce_maximal(FinSet{0, 1}, FinSet{3}, always, upset(3)),
               PreconditionError);
  EXPECT_THROW(nce_maximal(universe.ground(), FinSet{3},
                           Property::avoiding(FinSet{3}, universe), upset(3)),
               PreconditionError);
  EXPECT_THROW(nce_maximal(universe.ground(), FinSet{3}, always, upset(3), 1),
               BudgetError);
}

TEST(DeterminizeTest, LeastChoice) {
  const NdClosureOperator n({{FinSet{}, FinSet{3, 5}}}, Universe(6));
  const ClosureOperator d = determinize(n);
  ASSERT_EQ(d.rules().size(), 1u);
  EXPECT_EQ(d.rules()[0], (Rule{FinSet{}, 3}));

  const NdClosureOperator singletons(
      {{FinSet{1}, FinSet{2}}, {FinSet{0, 2}, FinSet{4}}}, Universe(5));
  const ClosureOperator same = determinize(singletons);
  ASSERT_EQ(same.rules().size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(same.rules()[i].premise, singletons.rules()[i].premise);
    EXPECT_EQ(FinSet{same.rules()[i].conclusion},
              singletons.rules()[i].choices);
  }
}

TEST(DeterminizeTest, ClosedUnderTheChoiceImpliesNclosed) {
  testing::Rng rng(testing::seed_from_environment());
  for (int trial = 0; trial < 100; ++trial) {
    const Nat u = testing::uniform(rng, 1, 10);
    const NdClosureOperator n(testing::random_nd_rules(rng, u, u), Universe(u));
    const ChoiceRule random_choice = [&](const FinSet& s) {
      return s.elements()[testing::uniform(rng, 0, s.size() - 1)];
    };
    for (const ClosureOperator& d :
         {determinize(n), determinize(n, random_choice)}) {
      for (const FinSet& x : testing::all_subsets(testing::ground(u))) {
        if (is_closed(x, d)) ASSERT_TRUE(is_nclosed(x, n)) << x;
      }
    }
  }
}

// A choice-based operator can lose every admissible set: the only rule
// demands 0 or 1, the least choice forces 0, and the property forbids 0.
TEST(DeterminizeTest, PitfallRegressionLeastChoiceLosesTheOnlyMaximalSet) {
  const Universe universe(2);
  const NdClosureOperator n({{FinSet{}, FinSet{0, 1}}}, universe);
  const ClosureOperator d = determinize(n);
  const Property phi = Property::avoiding(FinSet{0}, universe);
  const FinSet a{0, 1};

  for (const FinSet& y : testing::all_subsets(a)) {
    EXPECT_FALSE(is_closed(y, d) && phi(y)) << y;
  }
  EXPECT_THROW(ce_maximal(a, FinSet{}, phi, d), PreconditionError);

  const FinSet b = nce_maximal(a, FinSet{1}, phi, n);
  EXPECT_EQ(b, FinSet{1});
  EXPECT_TRUE(is_nclosed(b, n));
  EXPECT_TRUE(phi(b));
  EXPECT_TRUE(testing::reference_maximal(a, b, [&](const FinSet& y) {
    return is_nclosed(y, n) && phi(y);
  }));
}

TEST(NdRuleFileTest, ParseAndFormat) {
  const std::vector<NdRule> rules = parse_nd_rules(
      "# choices\n"
      "{1,2} -> {5,7,9}\n"
      "{} -> {0..3}\n");
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[1], (NdRule{FinSet{}, FinSet{0, 1, 2, 3}}));
  const NdClosureOperator n(rules, Universe(10));
  EXPECT_EQ(parse_nd_rules(format_nd_operator(n)), n.rules());
  EXPECT_THROW(parse_nd_rules("{1} -> 5"), ParseError);
  EXPECT_THROW(parse_nd_rules("{1} -> {}"), InputError);
}

}  // namespace
}  // namespace maxext
