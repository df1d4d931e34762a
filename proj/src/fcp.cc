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

#include "maxext/fcp.h"

#include <algorithm>
#include <cassert>
#include <set>

#include "maxext/errors.h"

namespace maxext {

std::vector<FinSet> greedy_stages(const FinSet& a, const Property& phi,
                                  std::span<const Nat> order) {
  phi.universe().require(a, "set");
  std::vector<Nat> sequence(order.begin(), order.end());
  if (sequence.empty()) {
    sequence = a.elements();
  } else if (FinSet::from_unsorted(sequence) != a ||
             sequence.size() != a.size()) {
    throw InputError("enumeration order is not a permutation of " +
                     to_string(a));
  }

  std::vector<FinSet> stages;
  stages.reserve(sequence.size() + 1);
  stages.emplace_back();
  assert(phi.holds(stages.back()));
  for (Nat element : sequence) {
    FinSet candidate = stages.back().with(element);
    stages.push_back(phi.holds(candidate) ? std::move(candidate)
                                          : stages.back());
    assert(phi.holds(stages.back()));
  }
  return stages;
}

FinSet greedy_maximal(const FinSet& a, const Property& phi,
                      std::span<const Nat> order) {
  return greedy_stages(a, phi, order).back();
}

Prefix characteristic_prefix(const FinSet& x, std::size_t length) {
  Prefix prefix(length, false);
  for (Nat e : x) {
    if (e >= length) break;
    prefix[static_cast<std::size_t>(e)] = true;
  }
  return prefix;
}

bool sigma1_holds(const PrefixPredicate& rho, const FinSet& x,
                  Nat search_cap) {
  Prefix prefix;
  for (Nat m = 0;; ++m) {
    if (rho(prefix)) return true;
    if (m == search_cap) return false;
    prefix.push_back(x.contains(m));
  }
}

Sigma1Result sigma1_maximal(const FinSet& a, const PrefixPredicate& rho,
                            Nat search_cap, std::size_t enumeration_cap) {
  Sigma1Result out;
  bool found = false;
  Prefix empty_prefix;
  for (Nat c = 0;; ++c) {
    if (rho(empty_prefix)) {
      out.c_phi = c;
      found = true;
      break;
    }
    if (c == search_cap) break;
    empty_prefix.push_back(false);
  }
  if (!found) {
    throw BudgetError("no c <= " + std::to_string(search_cap) +
                      " with rho holding of the empty prefix of length c");
  }

  // {0..c} inclusive.
  const FinSet low = a.below(out.c_phi + 1);
  const FinSet high = set_difference(a, low);
  bool have_best = false;
  for (const FinSet& d : subsets(low, enumeration_cap)) {
    if (have_best && d.size() <= out.result.size() - high.size()) continue;
    FinSet candidate = set_union(d, high);
    if (sigma1_holds(rho, candidate, search_cap)) {
      out.result = std::move(candidate);
      have_best = true;
    }
  }
  // The empty choice below c always qualifies, since its prefix of length c
  // is the empty prefix.
  assert(have_best);
  return out;
}

PrefixPredicate prefix_predicate(Formula formula, ParameterTable params,
                                 Environment env) {
  return [formula = std::move(formula), params = std::move(params),
          env = std::move(env)](const Prefix& prefix) {
    std::vector<Nat> set;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i]) set.push_back(i);
    }
    Environment local = env;
    local["m"] = prefix.size();
    return holds(formula, FinSet::from_sorted(std::move(set)), local, params);
  };
}

std::vector<FinSet> range_gadget_fcp(const FiniteFunction& f,
                                     const Universe& universe) {
  std::set<Nat> domain;
  for (const auto& [argument, value] : f) {
    if (!domain.insert(argument).second) {
      throw InputError("function lists argument " + std::to_string(argument) +
                       " twice");
    }
    if (!universe.contains(value)) {
      throw InputError("function value " + std::to_string(value) +
                       " leaves the universe");
    }
  }

  std::vector<FinSet> family;
  family.reserve(universe.size());
  for (Nat i = 0; i < universe.size(); ++i) {
    // Bounded search over the listed domain for a y with f(y) = i.
    auto phi_i = [&f, i](const FinSet& x) {
      if (!x.contains(i)) return true;
      return std::any_of(f.begin(), f.end(),
                         [i](const auto& pair) { return pair.second == i; });
    };
    const Property phi = Property::from_predicate(phi_i, universe, FinSet{i});
    family.push_back(greedy_maximal(FinSet{i}, phi));
  }
  return family;
}

}  // namespace maxext
