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

// Brute-force checks for the sets the constructions produce. Each verifier
// returns one named check per invariant so callers can report them
// individually.

#ifndef MAXEXT_ORACLE_H_
#define MAXEXT_ORACLE_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "maxext/closure.h"
#include "maxext/finset.h"
#include "maxext/ndclosure.h"
#include "maxext/orders.h"

namespace maxext {

struct Check {
  std::string name;
  bool passed = false;
};

using Report = std::vector<Check>;

bool all_passed(const Report& report);

using SetPredicate = std::function<bool(const FinSet&)>;

// W <= A, phi(W), and no W + {a} with a in A \ W satisfies phi. For a
// downward closed phi the last check rules out every strict superset.
Report verify_fcp(const FinSet& a, const SetPredicate& phi, const FinSet& w);

// C <= W <= A, W closed, phi(W), and no closed phi-set Y with W < Y <= A.
// The last check enumerates every superset; throws BudgetError if
// |A \ W| exceeds `cap`.
Report verify_ce(const FinSet& a, const FinSet& c, const SetPredicate& phi,
                 const ClosureOperator& d, const FinSet& w,
                 std::size_t cap = kDefaultEnumerationCap);

// As verify_ce, with closedness under a nondeterministic operator.
Report verify_nce(const FinSet& a, const FinSet& c, const SetPredicate& phi,
                  const NdClosureOperator& n, const FinSet& w,
                  std::size_t cap = kDefaultEnumerationCap);

// W is the least closed superset of X: it contains X, is closed, and lies
// inside every closed superset of X in the universe.
Report verify_closure(const ClosureOperator& d, const FinSet& x,
                      const FinSet& w, std::size_t cap = kDefaultEnumerationCap);

// W is a proper ideal containing I and no proper ideal strictly contains it.
Report verify_semilattice_ideal(const JoinSemilattice& l, const FinSet& i,
                                const FinSet& w);

// W is an ideal containing I and no ideal strictly contains it.
Report verify_poset_ideal(const Poset& p, const FinSet& i, const FinSet& w);

}  // namespace maxext

#endif  // MAXEXT_ORACLE_H_
