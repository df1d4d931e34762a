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

// Nondeterministic finitary closure operators: rules F -> S with S nonempty.
// A set X is closed when every rule with F inside X has X meeting S.
//
// Unlike the deterministic case there is no least closed superset in
// general, so extension to a maximal closed set is a search.

#ifndef MAXEXT_NDCLOSURE_H_
#define MAXEXT_NDCLOSURE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxext/closure.h"
#include "maxext/finset.h"
#include "maxext/property.h"

namespace maxext {

struct NdRule {
  FinSet premise;
  FinSet choices;

  friend bool operator==(const NdRule&, const NdRule&) = default;
};

bool operator<(const NdRule& a, const NdRule& b);
// "{1,2} -> {5,7}"
std::string to_string(const NdRule& rule);

class NdClosureOperator {
 public:
  // Sorts and deduplicates. Throws InputError if a choice set is empty or a
  // rule leaves the universe.
  NdClosureOperator(std::vector<NdRule> rules, Universe universe);

  // Truncates every choice set to the universe first; premises must still
  // lie inside it. Throws InputError if a choice set truncates to nothing.
  static NdClosureOperator truncated(std::vector<NdRule> rules,
                                     Universe universe);

  const std::vector<NdRule>& rules() const { return rules_; }
  const Universe& universe() const { return universe_; }

 private:
  std::vector<NdRule> rules_;
  Universe universe_;
};

bool is_nclosed(const FinSet& x, const NdClosureOperator& n);

// Every closed subset of `within`, in increasing canonical-index order.
// Throws BudgetError if |within| exceeds `cap`.
std::vector<FinSet> nclosed_family(const NdClosureOperator& n,
                                   const FinSet& within,
                                   std::size_t cap = kDefaultEnumerationCap);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// Least canonical index Y with `required` <= Y <= a, Y closed, phi(Y), or
// nothing. Backtracks over the elements of a outside `required`, from the
// largest down, trying exclusion first; the first complete solution found
// therefore has the least index. `nodes` accumulates visited search nodes;
// throws BudgetError once it passes `budget`.
std::optional<FinSet> least_closed_witness(const FinSet& required,
                                           const FinSet& a,
                                           const Property& phi,
                                           const NdClosureOperator& n,
                                           std::uint64_t budget,
                                           std::uint64_t& nodes);

// Maximal closed B with c <= B <= a and phi(B). B_0 = c; for i in a
// ascending, B_{i+1} is the least-index witness containing B_i + {i} when
// one exists and B_i otherwise. Throws PreconditionError on bad starts and
// BudgetError when the whole run visits more than `budget` nodes.
FinSet nce_maximal(const FinSet& a, const FinSet& c, const Property& phi,
                   const NdClosureOperator& n,
                   std::uint64_t budget = kDefaultSearchBudget);

// Picks one element of a nonempty choice set.
using ChoiceRule = std::function<Nat(const FinSet&)>;

Nat least_choice(const FinSet& choices);

// Replaces each rule F -> S by F -> choose(S). Every set closed under the
// result is closed under `n`; the converse fails in general.
ClosureOperator determinize(const NdClosureOperator& n,
                            const ChoiceRule& choose = least_choice);

// One `{1,2} -> {5,7,9}` rule per line, `#` comments. Throws ParseError.
std::vector<NdRule> parse_nd_rules(std::string_view text);

std::string format_nd_operator(const NdClosureOperator& n);

}  // namespace maxext

#endif  // MAXEXT_NDCLOSURE_H_
