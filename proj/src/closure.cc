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

#include "maxext/closure.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "maxext/errors.h"
#include "scanner.h"

namespace maxext {
namespace {

// A closed set held as a membership vector, extended in place by forward
// chaining and rolled back when an extension is rejected.
class ClosureState {
 public:
  ClosureState(const ClosureOperator& d, const FinSet& start)
      : d_(d), member_(static_cast<std::size_t>(d.universe().size()), false) {
    for (Nat e : start) member_[e] = true;
  }

  bool contains(Nat e) const { return e < member_.size() && member_[e]; }

  // Adds the seeds and everything they force. Assumes the current set is
  // closed, so only rules touching a new element can fire. Stops early,
  // returning false, once an element outside `allowed` would be added; the
  // elements added so far are still reported in `added`.
  bool extend(const std::vector<Nat>& seeds, const FinSet* allowed,
              std::vector<Nat>& added) {
    std::vector<Nat> work;
    auto add = [&](Nat e) {
      if (member_[e]) return true;
      if (allowed != nullptr && !allowed->contains(e)) return false;
      member_[e] = true;
      added.push_back(e);
      work.push_back(e);
      return true;
    };
    for (Nat s : seeds) {
      if (!add(s)) return false;
    }
    while (!work.empty()) {
      const Nat e = work.back();
      work.pop_back();
      for (std::size_t r : d_.rules_with(e)) {
        const Rule& rule = d_.rules()[r];
        if (member_[rule.conclusion]) continue;
        const bool fires =
            std::all_of(rule.premise.begin(), rule.premise.end(),
                        [this](Nat p) { return member_[p]; });
        if (fires && !add(rule.conclusion)) return false;
      }
    }
    return true;
  }

  void rollback(const std::vector<Nat>& added) {
    for (Nat e : added) member_[e] = false;
  }

  FinSet set() const {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < member_.size(); ++i) {
      if (member_[i]) out.push_back(i);
    }
    return FinSet::from_sorted(std::move(out));
  }

 private:
  const ClosureOperator& d_;
  std::vector<bool> member_;
};

}  // namespace

bool operator<(const Rule& a, const Rule& b) {
  if (a.premise.elements() != b.premise.elements()) {
    return a.premise.elements() < b.premise.elements();
  }
  return a.conclusion < b.conclusion;
}

std::string to_string(const Rule& rule) {
  return to_string(rule.premise) + " -> " + std::to_string(rule.conclusion);
}

ClosureOperator::ClosureOperator(std::vector<Rule> rules, Universe universe)
    : rules_(std::move(rules)), universe_(universe) {
  for (const Rule& rule : rules_) {
    if (!universe_.contains(rule.premise) ||
        !universe_.contains(rule.conclusion)) {
      throw InputError("rule " + to_string(rule) + " leaves the universe {0.." +
                       std::to_string(universe_.size() - 1) + "}");
    }
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (rules_[r].premise.empty()) unconditional_.push_back(r);
    for (Nat e : rules_[r].premise) by_element_[e].push_back(r);
  }
}

const std::vector<std::size_t>& ClosureOperator::rules_with(Nat element) const {
  static const std::vector<std::size_t> kNone;
  auto found = by_element_.find(element);
  return found == by_element_.end() ? kNone : found->second;
}

bool is_closed(const FinSet& x, const ClosureOperator& d) {
  return std::all_of(d.rules().begin(), d.rules().end(), [&x](const Rule& r) {
    return !r.premise.is_subset_of(x) || x.contains(r.conclusion);
  });
}

FinSet cl(const FinSet& x, const ClosureOperator& d) {
  d.universe().require(x, "set");
  ClosureState state(d, FinSet{});
  std::vector<Nat> seeds = x.elements();
  for (std::size_t r : d.unconditional()) {
    seeds.push_back(d.rules()[r].conclusion);
  }
  std::vector<Nat> added;
  state.extend(seeds, nullptr, added);
  return state.set();
}

std::vector<FinSet> closure_stages(const FinSet& x, const ClosureOperator& d) {
  d.universe().require(x, "set");
  std::vector<FinSet> stages{x};
  while (true) {
    const FinSet& current = stages.back();
    std::vector<Nat> next = current.elements();
    for (const Rule& rule : d.rules()) {
      if (rule.premise.is_subset_of(current)) next.push_back(rule.conclusion);
    }
    FinSet following = FinSet::from_unsorted(std::move(next));
    const bool fixed = following == current;
    stages.push_back(std::move(following));
    if (fixed) return stages;
  }
}

FinSet ce_maximal(const FinSet& a, const FinSet& c, const Property& phi,
                  const ClosureOperator& d) {
  using Kind = PreconditionError::Kind;
  d.universe().require(a, "ambient set");
  if (phi.universe() != d.universe()) {
    throw InputError("property and operator use different universes");
  }
  if (!c.is_subset_of(a)) {
    throw PreconditionError(Kind::kStartNotWithin,
                            "start set " + to_string(c) + " is not inside " +
                                to_string(a));
  }
  if (!is_closed(c, d)) {
    throw PreconditionError(Kind::kStartNotClosed,
                            "start set " + to_string(c) + " is not closed");
  }
  if (!phi.holds(c)) {
    throw PreconditionError(Kind::kStartFailsProperty,
                            "start set " + to_string(c) +
                                " does not satisfy the property");
  }

  ClosureState state(d, c);
  std::vector<Nat> added;
  for (Nat i : a) {
    if (state.contains(i)) continue;
    added.clear();
    const bool inside = state.extend({i}, &a, added);
    const bool accepted =
        inside && phi.holds_where([&state](Nat e) { return state.contains(e); });
    if (!accepted) state.rollback(added);
  }
  return state.set();
}

std::vector<Nat> primes_below(Nat bound) {
  std::vector<Nat> primes;
  if (bound < 3) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound), false);
  for (Nat p = 2; p < bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (Nat q = p * p; q < bound; q += p) composite[q] = true;
  }
  return primes;
}

namespace {

// p^k, or 0 if it reaches `bound`.
Nat power_below(Nat p, Nat k, Nat bound) {
  Nat value = 1;
  for (Nat j = 0; j < k; ++j) {
    if (value >= (bound + p - 1) / p) return 0;
    value *= p;
  }
  return value < bound ? value : 0;
}

}  // namespace

ClosureOperator range_gadget_operator(const FiniteFunction& f,
                                      const Universe& universe) {
  const Nat u = universe.size();
  const std::vector<Nat> primes = primes_below(u);
  std::vector<Rule> rules;
  for (Nat p : primes) {
    for (Nat lower = p; lower * p < u; lower *= p) {
      rules.push_back({FinSet{lower}, lower * p});
      rules.push_back({FinSet{lower * p}, lower});
    }
  }
  std::set<Nat> domain;
  for (const auto& [n, i] : f) {
    if (!domain.insert(n).second) {
      throw InputError("function lists argument " + std::to_string(n) +
                       " twice");
    }
    const Nat power =
        i < primes.size() ? power_below(primes[i], n + 1, u) : 0;
    if (power == 0) {
      throw InputError("universe of size " + std::to_string(u) +
                       " is too small for p_" + std::to_string(i) + "^" +
                       std::to_string(n + 1));
    }
    rules.push_back({FinSet{power}, 0});
  }
  return ClosureOperator(std::move(rules), universe);
}

bool range_reduction_holds(const FiniteFunction& f, const FinSet& b,
                           const Universe& universe) {
  const std::vector<Nat> primes = primes_below(universe.size());
  std::set<Nat> range;
  for (const auto& pair : f) range.insert(pair.second);
  for (Nat i = 0; i < primes.size(); ++i) {
    if ((range.count(i) != 0) == b.contains(primes[i])) return false;
  }
  return true;
}

std::vector<Rule> parse_rules(std::string_view text) {
  std::vector<Rule> rules;
  for (const internal::SourceLine& line : internal::content_lines(text)) {
    internal::Scanner scanner(line.text, line.number);
    Rule rule;
    rule.premise = scanner.set_literal();
    scanner.expect("->");
    rule.conclusion = scanner.natural();
    scanner.expect_end();
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string format_operator(const ClosureOperator& d) {
  std::ostringstream os;
  for (const Rule& rule : d.rules()) os << to_string(rule) << '\n';
  return os.str();
}

}  // namespace maxext
