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

#include "maxext/property.h"

#include "maxext/errors.h"

namespace maxext {
namespace {

[[noreturn]] void reject(const std::string& what,
                         const FiniteCharacterReport& report) {
  std::string message = what + " is not of finite character: ";
  if (!report.holds_on_empty) {
    message += "it fails on {}";
  } else {
    message += "it holds on " + to_string(report.counterexample->first) +
               " but fails on the subset " +
               to_string(report.counterexample->second);
  }
  throw PreconditionError(PreconditionError::Kind::kNotFiniteCharacter,
                          message);
}

}  // namespace

Property Property::from_formula(const Formula& formula,
                                const Universe& universe,
                                const ParameterTable& params,
                                const Environment& env, std::size_t cap) {
  FiniteCharacterReport report =
      check_finite_character(formula, universe, params, env, cap);
  const std::string text = to_string(formula);
  if (!report.finite_character()) reject("formula '" + text + "'", report);
  return Property(universe, FinSet::interval(0, report.support_bound),
                  std::make_shared<const std::vector<bool>>(
                      std::move(report.table)),
                  text);
}

Property Property::from_predicate(std::function<bool(const FinSet&)> predicate,
                                  const Universe& universe,
                                  std::optional<FinSet> support,
                                  std::size_t cap) {
  FinSet base = support.value_or(universe.ground());
  universe.require(base, "property support");
  std::vector<bool> table;
  for (const FinSet& x : subsets(base, cap)) table.push_back(predicate(x));
  FiniteCharacterReport report;
  certify_table(table, report, base);
  if (!report.finite_character()) reject("predicate", report);
  return Property(universe, std::move(base),
                  std::make_shared<const std::vector<bool>>(std::move(table)),
                  "predicate");
}

Property Property::avoiding(const FinSet& excluded, const Universe& universe) {
  Property property = from_predicate(
      [&excluded](const FinSet& x) {
        return set_intersection(x, excluded).empty();
      },
      universe, excluded);
  property.description_ = "avoids " + to_string(excluded);
  return property;
}

Property Property::always(const Universe& universe) {
  return from_formula(Formula::truth(), universe);
}

bool Property::holds(const FinSet& x) const {
  // Merge walk over the two sorted sequences.
  Nat mask = 0;
  auto xi = x.begin();
  std::size_t bit = 0;
  for (auto si = support_.begin(); si != support_.end(); ++si, ++bit) {
    while (xi != x.end() && *xi < *si) ++xi;
    if (xi == x.end()) break;
    if (*xi == *si) mask |= Nat{1} << bit;
  }
  return (*table_)[mask];
}

}  // namespace maxext
