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

// Test-only reference implementations, written directly from the
// definitions with ordered std::set containers and no shared code paths
// with the library beyond the AST accessors and the FinSet value type.

#ifndef MAXEXT_TESTS_SUPPORT_REFERENCE_H_
#define MAXEXT_TESTS_SUPPORT_REFERENCE_H_

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "maxext/closure.h"
#include "maxext/finset.h"
#include "maxext/formula.h"
#include "maxext/ndclosure.h"

namespace maxext::testing {

using StdSet = std::set<Nat>;

StdSet to_std(const FinSet& set);
FinSet from_std(const StdSet& set);

// Interprets X as the explicit set `x`. Arithmetic is done in 128 bits, so
// it only agrees with the library while values stay below 2^64.
bool reference_holds(const Formula& formula, const StdSet& x,
                     const Environment& env, const ParameterTable& params);

// The subset of {0..63} whose bits are set in n, decoded with shifts.
StdSet decode_index(std::uint64_t n);

// Every subset of `base`, in no particular order.
std::vector<FinSet> all_subsets(const FinSet& base);

bool reference_closed(const FinSet& x, const std::vector<Rule>& rules);
bool reference_nclosed(const FinSet& x, const std::vector<NdRule>& rules);

// Intersection of every closed superset of x inside {0..u-1}.
FinSet reference_closure(const FinSet& x, const std::vector<Rule>& rules,
                         Nat u);

// No Y with W strictly inside Y and Y inside A has admissible(Y).
bool reference_maximal(const FinSet& a, const FinSet& w,
                       const std::function<bool(const FinSet&)>& admissible);

// leq[a][b] means a <= b.
using OrderMatrix = std::vector<std::vector<bool>>;

bool reference_poset_ideal(const FinSet& x, const OrderMatrix& leq);
bool reference_semilattice_ideal(const FinSet& x, const OrderMatrix& leq);

}  // namespace maxext::testing

#endif  // MAXEXT_TESTS_SUPPORT_REFERENCE_H_
