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

// Maximal subsets satisfying a property of finite character.

#ifndef MAXEXT_FCP_H_
#define MAXEXT_FCP_H_

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "maxext/finset.h"
#include "maxext/formula.h"
#include "maxext/property.h"

namespace maxext {

// Greedy scan of `a` in the given order (ascending when `order` is empty):
// a_i joins iff the set built so far plus a_i satisfies `phi`. Returns the
// stages B_0 = {}, B_1, ..., B_|a|; the last one is maximal in `a`.
// Throws InputError if `order` is not a permutation of `a`.
std::vector<FinSet> greedy_stages(const FinSet& a, const Property& phi,
                                  std::span<const Nat> order = {});

// A subset of `a` satisfying `phi` to which no element of `a` can be added.
FinSet greedy_maximal(const FinSet& a, const Property& phi,
                      std::span<const Nat> order = {});

// A characteristic prefix X[m]: bit i tells whether i is in X, for i < m.
using Prefix = std::vector<bool>;
// A decidable predicate on prefixes; phi(X) is "some prefix of X satisfies
// it".
using PrefixPredicate = std::function<bool(const Prefix&)>;

Prefix characteristic_prefix(const FinSet& x, std::size_t length);

// Some m <= search_cap has rho(X[m]). Witnesses beyond the cap are not
// looked for, so a false answer means "none found within the cap".
bool sigma1_holds(const PrefixPredicate& rho, const FinSet& x, Nat search_cap);

struct Sigma1Result {
  FinSet result;
  // Least c with rho({}[c]); every set missing {0..c} satisfies phi.
  Nat c_phi = 0;
};

// Maximal subset of `a` for phi(X) = exists m. rho(X[m]): the part of `a`
// above c_phi is kept whole, and below it the qualifying subset of largest
// cardinality is chosen (least canonical index among ties).
// Throws BudgetError if no c_phi <= search_cap exists, and if a |a & {0..c}|
// exceeds `enumeration_cap`.
Sigma1Result sigma1_maximal(const FinSet& a, const PrefixPredicate& rho,
                            Nat search_cap,
                            std::size_t enumeration_cap =
                                kDefaultEnumerationCap);

// rho(s) is the formula read with X as the positions of s that are set and
// the number variable `m` bound to the length of s.
PrefixPredicate prefix_predicate(Formula formula, ParameterTable params = {},
                                 Environment env = {});

// Finite partial function as (argument, value) pairs.
using FiniteFunction = std::vector<std::pair<Nat, Nat>>;

// For each i < u, the maximal subset B_i of {i} satisfying
// phi(X, i) = exists y. (i in X -> f(y) = i), with y ranging over the domain
// of f. Then i is in the range of f iff B_i = {i} iff i is in B_i.
// Throws InputError if f repeats an argument or has a value >= u.
std::vector<FinSet> range_gadget_fcp(const FiniteFunction& f,
                                     const Universe& universe);

}  // namespace maxext

#endif  // MAXEXT_FCP_H_
