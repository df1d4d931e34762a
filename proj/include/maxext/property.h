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

#ifndef MAXEXT_PROPERTY_H_
#define MAXEXT_PROPERTY_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxext/finset.h"
#include "maxext/formula.h"

namespace maxext {

// A predicate on subsets of a universe that has been certified to be of
// finite character there: it holds of the empty set and is downward closed.
//
// Every property has a finite support S: its value on X depends only on X
// intersected with S. The certificate is the full truth table W over the
// subsets of S, so evaluating X is a single lookup.
class Property {
 public:
  // Throws PreconditionError(kNotFiniteCharacter) if the check fails and
  // BudgetError if the support is too large to enumerate.
  static Property from_formula(const Formula& formula, const Universe& universe,
                               const ParameterTable& params = {},
                               const Environment& env = {},
                               std::size_t cap = kDefaultEnumerationCap);

  // Certifies an opaque predicate by evaluating it on every subset of
  // `support` (default: the whole universe). The caller asserts that the
  // predicate ignores elements outside the support.
  static Property from_predicate(std::function<bool(const FinSet&)> predicate,
                                 const Universe& universe,
                                 std::optional<FinSet> support = std::nullopt,
                                 std::size_t cap = kDefaultEnumerationCap);

  // X contains none of `excluded`.
  static Property avoiding(const FinSet& excluded, const Universe& universe);
  static Property always(const Universe& universe);

  bool holds(const FinSet& x) const;
  bool operator()(const FinSet& x) const { return holds(x); }
  // Same, for a set given by a membership test; only the support is probed.
  template <typename Contains>
  bool holds_where(Contains&& contains) const {
    Nat mask = 0;
    std::size_t bit = 0;
    for (Nat e : support_) {
      if (contains(e)) mask |= Nat{1} << bit;
      ++bit;
    }
    return (*table_)[mask];
  }

  const Universe& universe() const { return universe_; }
  const FinSet& support() const { return support_; }
  // Readable origin, e.g. the formula text.
  const std::string& description() const { return description_; }

 private:
  Property(Universe universe, FinSet support,
           std::shared_ptr<const std::vector<bool>> table,
           std::string description)
      : universe_(universe),
        support_(std::move(support)),
        table_(std::move(table)),
        description_(std::move(description)) {}

  Universe universe_;
  FinSet support_;
  std::shared_ptr<const std::vector<bool>> table_;
  std::string description_;
};

}  // namespace maxext

#endif  // MAXEXT_PROPERTY_H_
