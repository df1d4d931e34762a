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

#include <algorithm>
#include <sstream>

#include "maxext/errors.h"
#include "scanner.h"

namespace maxext {

bool operator<(const NdRule& a, const NdRule& b) {
  if (a.premise.elements() != b.premise.elements()) {
    return a.premise.elements() < b.premise.elements();
  }
  return a.choices.elements() < b.choices.elements();
}

std::string to_string(const NdRule& rule) {
  return to_string(rule.premise) + " -> " + to_string(rule.choices);
}

NdClosureOperator::NdClosureOperator(std::vector<NdRule> rules,
                                     Universe universe)
    : rules_(std::move(rules)), universe_(universe) {
  for (const NdRule& rule : rules_) {
    if (rule.choices.empty()) {
      throw InputError("rule " + to_string(rule) + " has no choices");
    }
    if (!universe_.contains(rule.premise) ||
        !universe_.contains(rule.choices)) {
      throw InputError("rule " + to_string(rule) + " leaves the universe {0.." +
                       std::to_string(universe_.size() - 1) + "}");
    }
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

NdClosureOperator NdClosureOperator::truncated(std::vector<NdRule> rules,
                                               Universe universe) {
  for (NdRule& rule : rules) {
    NdRule original = rule;
    rule.choices = rule.choices.below(universe.size());
    if (rule.choices.empty()) {
      throw InputError("rule " + to_string(original) +
                       " has no choices inside the universe");
    }
  }
  return NdClosureOperator(std::move(rules), universe);
}

bool is_nclosed(const FinSet& x, const NdClosureOperator& n) {
  return std::all_of(n.rules().begin(), n.rules().end(),
                     [&x](const NdRule& r) {
                       return !r.premise.is_subset_of(x) ||
                              !set_intersection(x, r.choices).empty();
                     });
}

std::vector<FinSet> nclosed_family(const NdClosureOperator& n,
                                   const FinSet& within, std::size_t cap) {
  std::vector<FinSet> family;
  for (const FinSet& x : subsets(within, cap)) {
    if (is_nclosed(x, n)) family.push_back(x);
  }
  return family;
}

namespace {

class WitnessSearch {
 public:
  enum State : unsigned char { kOut, kIn, kOpen };

  WitnessSearch(const FinSet& required, const FinSet& a, const Property& phi,
                const NdClosureOperator& n, std::uint64_t budget,
                std::uint64_t& nodes)
      : phi_(phi),
        n_(n),
        budget_(budget),
        nodes_(nodes),
        state_(static_cast<std::size_t>(n.universe().size()), kOut) {
    for (Nat e : a) state_[e] = kOpen;
    for (Nat e : required) state_[e] = kIn;
    const FinSet free = set_difference(a, required);
    order_.assign(free.elements().rbegin(), free.elements().rend());
  }

  std::optional<FinSet> run() {
    if (!search(0)) return std::nullopt;
    std::vector<Nat> out;
    for (std::size_t e = 0; e < state_.size(); ++e) {
      if (state_[e] == kIn) out.push_back(e);
    }
    return FinSet::from_sorted(std::move(out));
  }

 private:
  // Open elements are exactly order_[k..], all below the decided ones.
  bool search(std::size_t k) {
    if (++nodes_ > budget_) {
      throw BudgetError("witness search exceeded the budget of " +
                        std::to_string(budget_) + " nodes");
    }
    // The included elements are a subset of every completion, and phi is
    // downward closed.
    if (!phi_.holds_where([this](Nat e) { return state_[e] == kIn; })) {
      return false;
    }
    if (violates_some_rule()) return false;
    if (k == order_.size()) return true;
    const Nat e = order_[k];
    state_[e] = kOut;
    if (search(k + 1)) return true;
    state_[e] = kIn;
    if (search(k + 1)) return true;
    state_[e] = kOpen;
    return false;
  }

  // A rule whose premise is already included but whose choices are all
  // excluded cannot be satisfied by any completion.
  bool violates_some_rule() const {
    for (const NdRule& rule : n_.rules()) {
      const bool fires =
          std::all_of(rule.premise.begin(), rule.premise.end(),
                      [this](Nat p) { return state_[p] == kIn; });
      if (!fires) continue;
      const bool satisfiable =
          std::any_of(rule.choices.begin(), rule.choices.end(),
                      [this](Nat c) { return state_[c] != kOut; });
      if (!satisfiable) return true;
    }
    return false;
  }

  const Property& phi_;
  const NdClosureOperator& n_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<State> state_;
  std::vector<Nat> order_;
};

}  // namespace

std::optional<FinSet> least_closed_witness(const FinSet& required,
                                           const FinSet& a,
                                           const Property& phi,
                                           const NdClosureOperator& n,
                                           std::uint64_t budget,
                                           std::uint64_t& nodes) {
  n.universe().require(a, "ambient set");
  if (!required.is_subset_of(a)) return std::nullopt;
  return WitnessSearch(required, a, phi, n, budget, nodes).run();
}

FinSet nce_maximal(const FinSet& a, const FinSet& c, const Property& phi,
                   const NdClosureOperator& n, std::uint64_t budget) {
  using Kind = PreconditionError::Kind;
  n.universe().require(a, "ambient set");
  if (phi.universe() != n.universe()) {
    throw InputError("property and operator use different universes");
  }
  if (!c.is_subset_of(a)) {
    throw PreconditionError(Kind::kStartNotWithin,
                            "start set " + to_string(c) + " is not inside " +
                                to_string(a));
  }
  if (!is_nclosed(c, n)) {
    throw PreconditionError(Kind::kStartNotClosed,
                            "start set " + to_string(c) + " is not closed");
  }
  if (!phi.holds(c)) {
    throw PreconditionError(Kind::kStartFailsProperty,
                            "start set " + to_string(c) +
                                " does not satisfy the property");
  }

  FinSet b = c;
  std::uint64_t nodes = 0;
  for (Nat i : a) {
    // Any witness contains b, whose index is then least.
    if (b.contains(i)) continue;
    if (auto witness = least_closed_witness(b.with(i), a, phi, n, budget,
                                            nodes)) {
      b = std::move(*witness);
    }
  }
  return b;
}

Nat least_choice(const FinSet& choices) { return choices.elements().front(); }

ClosureOperator determinize(const NdClosureOperator& n,
                            const ChoiceRule& choose) {
  std::vector<Rule> rules;
  rules.reserve(n.rules().size());
  for (const NdRule& rule : n.rules()) {
    const Nat pick = choose(rule.choices);
    if (!rule.choices.contains(pick)) {
      throw InputError("choice rule picked " + std::to_string(pick) +
                       " outside " + to_string(rule.choices));
    }
    rules.push_back({rule.premise, pick});
  }
  return ClosureOperator(std::move(rules), n.universe());
}

std::vector<NdRule> parse_nd_rules(std::string_view text) {
  std::vector<NdRule> rules;
  for (const internal::SourceLine& line : internal::content_lines(text)) {
    internal::Scanner scanner(line.text, line.number);
    NdRule rule;
    rule.premise = scanner.set_literal();
    scanner.expect("->");
    rule.choices = scanner.set_literal();
    if (rule.choices.empty()) scanner.fail("choice set must be nonempty");
    scanner.expect_end();
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string format_nd_operator(const NdClosureOperator& n) {
  std::ostringstream os;
  for (const NdRule& rule : n.rules()) os << to_string(rule) << '\n';
  return os.str();
}

}  // namespace maxext
