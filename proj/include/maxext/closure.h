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

// Deterministic finitary closure operators.
//
// An operator is a finite list of rules F -> n. A set is closed when every
// rule whose premise it contains also has its conclusion in it.

#ifndef MAXEXT_CLOSURE_H_
#define MAXEXT_CLOSURE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "maxext/fcp.h"
#include "maxext/finset.h"
#include "maxext/property.h"

namespace maxext {

struct Rule {
  FinSet premise;
  Nat conclusion = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

bool operator<(const Rule& a, const Rule& b);
// "{1,2} -> 5"
std::string to_string(const Rule& rule);

class ClosureOperator {
 public:
  // Sorts the rules and drops duplicates. Throws InputError if a rule
  // mentions an element outside the universe.
  ClosureOperator(std::vector<Rule> rules, Universe universe);

  const std::vector<Rule>& rules() const { return rules_; }
  const Universe& universe() const { return universe_; }

  // Rules whose premise contains `element`.
  const std::vector<std::size_t>& rules_with(Nat element) const;
  // Rules with an empty premise.
  const std::vector<std::size_t>& unconditional() const {
    return unconditional_;
  }

 private:
  std::vector<Rule> rules_;
  Universe universe_;
  std::unordered_map<Nat, std::vector<std::size_t>> by_element_;
  std::vector<std::size_t> unconditional_;
};

bool is_closed(const FinSet& x, const ClosureOperator& d);

// Least closed superset of `x`, by forward chaining from a worklist.
FinSet cl(const FinSet& x, const ClosureOperator& d);

// The stages X_0 = x, X_{i+1} = X_i plus every conclusion whose premise lies
// in X_i, up to and including the first repeated stage.
std::vector<FinSet> closure_stages(const FinSet& x, const ClosureOperator& d);

// Maximal closed B with c <= B <= a and phi(B). Scans i in a ascending and
// accepts i when cl(B + {i}) stays inside `a` and satisfies phi, replacing B
// by that closure. Throws PreconditionError if c is not inside a, not
// closed, or fails phi.
FinSet ce_maximal(const FinSet& a, const FinSet& c, const Property& phi,
                  const ClosureOperator& d);

// Primes below the universe size in increasing order: p_0 = 2, p_1 = 3, ...
std::vector<Nat> primes_below(Nat bound);

// Rules {p^(n+1)} -> p^(n+2) and {p^(n+2)} -> p^(n+1) for every prime p with
// both powers in the universe, and {p_i^(n+1)} -> 0 whenever f(n) = i.
// Throws InputError if f repeats an argument or some p_i^(n+1) with
// f(n) = i falls outside the universe.
ClosureOperator range_gadget_operator(const FiniteFunction& f,
                                      const Universe& universe);

// For every i with p_i in the universe: i is in the range of f iff p_i is
// not in b.
bool range_reduction_holds(const FiniteFunction& f, const FinSet& b,
                           const Universe& universe);

// One `{1,2} -> 5` rule per line, `{} -> 5` for an empty premise, `#`
// comments. Throws ParseError.
std::vector<Rule> parse_rules(std::string_view text);

// Inverse of parse_rules.
std::string format_operator(const ClosureOperator& d);

}  // namespace maxext

#endif  // MAXEXT_CLOSURE_H_
