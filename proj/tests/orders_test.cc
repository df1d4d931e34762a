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

#include "maxext/orders.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "generators.h"
#include "maxext/errors.h"
#include "reference.h"

namespace maxext {
namespace {

using Pairs = std::vector<std::pair<Nat, Nat>>;

JoinSemilattice chain3() {
  return JoinSemilattice::with_derived_joins(
      Poset::from_relations(3, Pairs{{0, 1}, {1, 2}}));
}

// Bottom 0, atoms 1 and 2, top 3.
JoinSemilattice diamond() {
  return JoinSemilattice::with_derived_joins(
      Poset::from_relations(4, Pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

// Bottom 0, three atoms 1, 2, 3, top 4.
JoinSemilattice m3() {
  return JoinSemilattice::with_derived_joins(Poset::from_relations(
      5, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

bool has_rule(const ClosureOperator& d, const FinSet& premise, Nat conclusion) {
  return std::find(d.rules().begin(), d.rules().end(),
                   Rule{premise, conclusion}) != d.rules().end();
}

bool has_rule(const NdClosureOperator& n, const FinSet& premise,
              const FinSet& choices) {
  return std::find(n.rules().begin(), n.rules().end(),
                   NdRule{premise, choices}) != n.rules().end();
}

TEST(PosetTest, ValidatesOrders) {
  using Matrix = testing::OrderMatrix;
  EXPECT_THROW(Poset(Matrix{{true, false}, {false}}), InputError);
  EXPECT_THROW(Poset(Matrix{{false}}), InputError);
  EXPECT_THROW(Poset(Matrix{{true, true}, {true, true}}), InputError);
  EXPECT_THROW(Poset(Matrix{{true, true, false},
                            {false, true, true},
                            {false, false, true}}),
               InputError);
  EXPECT_THROW(Poset::from_relations(2, Pairs{{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Poset::from_relations(2, Pairs{{0, 2}}), InputError);
  const Poset chain = Poset::from_relations(3, Pairs{{0, 1}, {1, 2}});
  EXPECT_TRUE(chain.leq(0, 2));
  EXPECT_FALSE(chain.leq(2, 0));
}

TEST(PosetTest, WithTop) {
  const Poset antichain = Poset::from_relations(2, Pairs{});
  const Poset hat = antichain.with_top();
  ASSERT_EQ(hat.size(), 3u);
  EXPECT_TRUE(hat.leq(0, 2));
  EXPECT_TRUE(hat.leq(1, 2));
  EXPECT_FALSE(hat.leq(0, 1));
  EXPECT_EQ(Poset(testing::OrderMatrix{}).with_top().size(), 1u);
}

TEST(JoinSemilatticeTest, ValidatesJoins) {
  const Poset chain = Poset::from_relations(2, Pairs{{0, 1}});
  EXPECT_NO_THROW(JoinSemilattice(chain, {{0, 1}, {1, 1}}));
  EXPECT_THROW(JoinSemilattice(chain, {{0, 0}, {1, 1}}), InputError);
  EXPECT_THROW(JoinSemilattice::with_derived_joins(
                   Poset::from_relations(2, Pairs{})),
               InputError);
  EXPECT_THROW(JoinSemilattice::with_derived_joins(Poset(testing::OrderMatrix{})), InputError);
  EXPECT_EQ(diamond().join(1, 2), 3u);
  EXPECT_EQ(diamond().top(), 3u);
  EXPECT_EQ(diamond().meet(1, 2), 0u);
}

TEST(SemilatticeIdealTest, Examples) {
  EXPECT_TRUE(is_semilattice_ideal(FinSet{}, chain3()));
  EXPECT_TRUE(is_semilattice_ideal(FinSet{0, 1}, chain3()));
  EXPECT_FALSE(is_semilattice_ideal(FinSet{1}, chain3()));
  EXPECT_FALSE(is_semilattice_ideal(FinSet{0, 1, 2}, diamond()));
}

TEST(SemilatticeOperatorTest, Examples) {
  const ClosureOperator chain = semilattice_ideal_operator(chain3());
  EXPECT_TRUE(has_rule(chain, FinSet{1}, 0));
  EXPECT_TRUE(has_rule(chain, FinSet{2}, 1));
  EXPECT_TRUE(has_rule(chain, FinSet{2}, 0));
  EXPECT_TRUE(has_rule(chain, FinSet{0, 2}, 2));

  const JoinSemilattice single = JoinSemilattice::with_derived_joins(
      Poset::from_relations(1, Pairs{}));
  const ClosureOperator trivial = semilattice_ideal_operator(single);
  for (const Rule& rule : trivial.rules()) {
    EXPECT_EQ(rule, (Rule{FinSet{0}, 0}));
  }
  EXPECT_TRUE(is_closed(FinSet{}, trivial));
  EXPECT_TRUE(is_closed(FinSet{0}, trivial));

  EXPECT_TRUE(has_rule(semilattice_ideal_operator(diamond()), FinSet{1, 2}, 3));
}

TEST(SemilatticeOperatorTest, ClosedSetsAreTheIdeals) {
  for (const testing::OrderMatrix& leq : testing::semilattice_orders(5)) {
    const JoinSemilattice l = JoinSemilattice::with_derived_joins(Poset(leq));
    const ClosureOperator d = semilattice_ideal_operator(l);
    for (const FinSet& x : testing::all_subsets(l.elements())) {
      ASSERT_EQ(is_closed(x, d), testing::reference_semilattice_ideal(x, leq));
      ASSERT_EQ(is_semilattice_ideal(x, l),
                testing::reference_semilattice_ideal(x, leq));
    }
  }
}

TEST(SemilatticeExtensionTest, Examples) {
  EXPECT_EQ(extend_to_maximal_ideal_semilattice(chain3(), FinSet{}),
            (FinSet{0, 1}));
  EXPECT_EQ(extend_to_maximal_ideal_semilattice(diamond(), FinSet{0, 1}),
            (FinSet{0, 1}));
}

TEST(SemilatticeExtensionTest, EverythingButTheTopIsKept) {
  EXPECT_EQ(extend_to_maximal_ideal_semilattice(chain3(), FinSet{0, 1}),
            (FinSet{0, 1}));
  EXPECT_EQ(extend_to_maximal_ideal_semilattice(diamond(), FinSet{0, 2}),
            (FinSet{0, 2}));
}

TEST(SemilatticeExtensionTest, RejectsNonIdeals) {
  EXPECT_THROW(extend_to_maximal_ideal_semilattice(chain3(), FinSet{1}),
               PreconditionError);
  EXPECT_THROW(extend_to_maximal_ideal_semilattice(chain3(), FinSet{0, 1, 2}),
               PreconditionError);
}

TEST(SemilatticeExtensionTest, MaximalIdealThatIsNotPrime) {
  const JoinSemilattice l = m3();
  const FinSet j = extend_to_maximal_ideal_semilattice(l, FinSet{});
  EXPECT_EQ(j, (FinSet{0, 1}));
  testing::OrderMatrix leq(5, std::vector<bool>(5));
  for (Nat a = 0; a < 5; ++a) {
    for (Nat b = 0; b < 5; ++b) leq[a][b] = l.leq(a, b);
  }
  EXPECT_TRUE(testing::reference_maximal(l.elements(), j, [&](const FinSet& y) {
    return !y.contains(l.top()) && testing::reference_semilattice_ideal(y, leq);
  }));
  EXPECT_FALSE(is_prime_ideal(j, l));
  // The atoms 2 and 3 meet at 0, which is inside, while neither is.
  EXPECT_EQ(l.meet(2, 3), 0u);
  EXPECT_TRUE(j.contains(0));
  EXPECT_FALSE(j.contains(2) || j.contains(3));
}

TEST(PrimeIdealTest, ChainIdealsArePrime) {
  EXPECT_TRUE(is_prime_ideal(FinSet{0, 1}, chain3()));
  EXPECT_TRUE(is_prime_ideal(FinSet{0}, chain3()));
  EXPECT_FALSE(is_prime_ideal(FinSet{0, 1, 2}, chain3()));
  EXPECT_FALSE(is_prime_ideal(FinSet{0}, diamond()));
}

TEST(PosetIdealTest, Examples) {
  const Poset antichain = Poset::from_relations(2, Pairs{});
  EXPECT_TRUE(is_poset_ideal(FinSet{}, antichain));
  EXPECT_TRUE(is_poset_ideal(FinSet{1}, antichain));
  EXPECT_FALSE(is_poset_ideal(FinSet{0, 1}, antichain));
  const Poset vee = Poset::from_relations(3, Pairs{{0, 2}, {1, 2}});
  EXPECT_TRUE(is_poset_ideal(FinSet{0, 1, 2}, vee));
  EXPECT_FALSE(is_poset_ideal(FinSet{2}, vee));
}

TEST(PosetOperatorTest, Examples) {
  const NdClosureOperator antichain =
      poset_ideal_operator(Poset::from_relations(2, Pairs{}));
  EXPECT_EQ(antichain.universe().size(), 3u);
  EXPECT_TRUE(has_rule(antichain, FinSet{0, 1}, FinSet{2}));

  const NdClosureOperator chain =
      poset_ideal_operator(Poset::from_relations(2, Pairs{{0, 1}}));
  EXPECT_TRUE(has_rule(chain, FinSet{1}, FinSet{0}));
  EXPECT_TRUE(has_rule(chain, FinSet{0, 1}, FinSet{1, 2}));

  const NdClosureOperator empty = poset_ideal_operator(Poset(testing::OrderMatrix{}));
  EXPECT_EQ(empty.universe().size(), 1u);
  for (const NdRule& rule : empty.rules()) {
    EXPECT_EQ(rule, (NdRule{FinSet{0}, FinSet{0}}));
  }
}

TEST(PosetOperatorTest, ClosedSetsAreTheIdealsOfTheExtension) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (const testing::OrderMatrix& leq : testing::natural_orders(m)) {
      const Poset p(leq);
      const Poset hat = p.with_top();
      const NdClosureOperator n = poset_ideal_operator(p);
      testing::OrderMatrix hat_leq(m + 1, std::vector<bool>(m + 1));
      for (Nat a = 0; a <= m; ++a) {
        for (Nat b = 0; b <= m; ++b) hat_leq[a][b] = hat.leq(a, b);
      }
      for (const FinSet& x : testing::all_subsets(hat.elements())) {
        ASSERT_EQ(is_nclosed(x, n), testing::reference_poset_ideal(x, hat_leq));
      }
    }
  }
}

TEST(PosetOperatorTest, EnumerationOnlyReordersRules) {
  const Poset p = Poset::from_relations(3, Pairs{{0, 2}});
  const std::vector<Nat> order{3, 1, 0, 2};
  const NdClosureOperator shuffled = poset_ideal_operator(p, order);
  const NdClosureOperator plain = poset_ideal_operator(p);
  EXPECT_EQ(shuffled.rules(), plain.rules());
  const std::vector<Nat> short_order{0, 1, 2};
  EXPECT_THROW(poset_ideal_operator(p, short_order), InputError);
}

TEST(PosetExtensionTest, Examples) {
  EXPECT_EQ(extend_to_maximal_ideal_poset(Poset::from_relations(2, Pairs{}),
                                          FinSet{}),
            FinSet{0});
  EXPECT_EQ(extend_to_maximal_ideal_poset(
                Poset::from_relations(3, Pairs{{0, 1}, {1, 2}}), FinSet{0}),
            (FinSet{0, 1, 2}));
  EXPECT_EQ(extend_to_maximal_ideal_poset(Poset(testing::OrderMatrix{}), FinSet{}), FinSet{});
  EXPECT_THROW(extend_to_maximal_ideal_poset(
                   Poset::from_relations(2, Pairs{}), FinSet{0, 1}),
               PreconditionError);
}

TEST(PosetExtensionTest, OutputsAreMaximalOnSmallCatalog) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (const testing::OrderMatrix& leq : testing::natural_orders(m)) {
      const Poset p(leq);
      for (const FinSet& start : testing::all_subsets(p.elements())) {
        if (!testing::reference_poset_ideal(start, leq)) continue;
        const FinSet j = extend_to_maximal_ideal_poset(p, start);
        ASSERT_TRUE(start.is_subset_of(j));
        ASSERT_TRUE(testing::reference_poset_ideal(j, leq));
        ASSERT_TRUE(testing::reference_maximal(
            p.elements(), j, [&](const FinSet& y) {
              return testing::reference_poset_ideal(y, leq);
            }));
      }
    }
  }
}

TEST(OrderFileTest, Poset) {
  const Poset p = parse_poset(
      "# a three-chain\n"
      "elements 3\n"
      "0 <= 1\n"
      "1 <= 2\n");
  EXPECT_EQ(p, Poset::from_relations(3, Pairs{{0, 1}, {1, 2}}));
  EXPECT_THROW(parse_poset("0 <= 1\n"), ParseError);
  EXPECT_THROW(parse_poset("elements 2\n0 <= 2\n"), ParseError);
  EXPECT_THROW(parse_poset("elements 2\n0 <= 1\n1 <= 0\n"), InputError);
  try {
    parse_poset("elements 2\n0 < 1\n");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_poset("elements 2\njoin auto\n"), ParseError);
}

TEST(OrderFileTest, Semilattice) {
  const JoinSemilattice l = parse_semilattice(
      "elements 4\n"
      "0 <= 1\n0 <= 2\n1 <= 3\n2 <= 3\n"
      "join 1 2 = 3\n");
  EXPECT_EQ(l.join(1, 2), 3u);
  EXPECT_EQ(l.top(), 3u);
  EXPECT_NO_THROW(parse_semilattice("elements 2\n0 <= 1\njoin auto\n"));
  EXPECT_THROW(parse_semilattice("elements 4\n0 <= 1\n0 <= 2\n1 <= 3\n"
                                 "2 <= 3\njoin 1 2 = 2\n"),
               InputError);
  EXPECT_THROW(parse_semilattice("elements 3\n0 <= 1\n0 <= 2\n"), InputError);
}

}  // namespace
}  // namespace maxext
