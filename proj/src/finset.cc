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

#include "maxext/finset.h"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

#include "maxext/errors.h"
#include "scanner.h"

namespace maxext {

FinSet::FinSet(std::initializer_list<Nat> elements)
    : FinSet(from_unsorted(std::vector<Nat>(elements))) {}

FinSet FinSet::from_unsorted(std::vector<Nat> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  FinSet set;
  set.elements_ = std::move(elements);
  return set;
}

FinSet FinSet::from_sorted(std::vector<Nat> elements) {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1] >= elements[i]) {
      throw InputError("set elements must be strictly increasing");
    }
  }
  FinSet set;
  set.elements_ = std::move(elements);
  return set;
}

FinSet FinSet::interval(Nat lo, Nat hi) {
  FinSet set;
  for (Nat x = lo; x < hi; ++x) set.elements_.push_back(x);
  return set;
}

bool FinSet::contains(Nat element) const {
  return std::binary_search(elements_.begin(), elements_.end(), element);
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

FinSet FinSet::with(Nat element) const {
  FinSet result = *this;
  auto it = std::lower_bound(result.elements_.begin(), result.elements_.end(),
                             element);
  if (it == result.elements_.end() || *it != element) {
    result.elements_.insert(it, element);
  }
  return result;
}

FinSet FinSet::without(Nat element) const {
  FinSet result = *this;
  auto it = std::lower_bound(result.elements_.begin(), result.elements_.end(),
                             element);
  if (it != result.elements_.end() && *it == element) {
    result.elements_.erase(it);
  }
  return result;
}

FinSet FinSet::below(Nat bound) const {
  FinSet result;
  auto end = std::lower_bound(elements_.begin(), elements_.end(), bound);
  result.elements_.assign(elements_.begin(), end);
  return result;
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Nat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

bool index_less(const FinSet& a, const FinSet& b) {
  // Walk both from the top; the first disagreement decides.
  auto ia = a.elements().rbegin();
  auto ib = b.elements().rbegin();
  for (; ia != a.elements().rend() && ib != b.elements().rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.elements().rend() && ib != b.elements().rend();
}

Nat index_of(const FinSet& set) {
  Nat n = 0;
  for (Nat i : set) {
    if (i >= kIndexBits) {
      throw RangeError("element " + std::to_string(i) +
                       " exceeds the 64-bit canonical index");
    }
    n |= Nat{1} << i;
  }
  return n;
}

FinSet members(Nat n) {
  std::vector<Nat> out;
  while (n != 0) {
    out.push_back(static_cast<Nat>(std::countr_zero(n)));
    n &= n - 1;
  }
  return FinSet::from_sorted(std::move(out));
}

Universe::Universe(Nat size) : size_(size) {
  if (size == 0) throw InputError("universe size must be at least 1");
}

void Universe::require(const FinSet& set, std::string_view what) const {
  if (!contains(set)) {
    throw InputError(std::string(what) + " " + to_string(set) +
                     " leaves the universe {0.." + std::to_string(size_ - 1) +
                     "}");
  }
}

FinSet SubsetRange::iterator::operator*() const {
  std::vector<Nat> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back((*base_)[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return FinSet::from_sorted(std::move(out));
}

SubsetRange subsets(const FinSet& base, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxEnumerationCap);
  if (base.size() > limit) {
    throw BudgetError("subset enumeration over " +
                      std::to_string(base.size()) +
                      " elements exceeds the cap of " + std::to_string(limit));
  }
  return SubsetRange(base);
}

std::string to_string(const FinSet& set) {
  std::ostringstream os;
  os << set;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinSet& set) {
  os << '{';
  bool first = true;
  for (Nat x : set) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os << '}';
}

FinSet parse_set(std::string_view text) {
  internal::Scanner scanner(text);
  FinSet set = scanner.set_literal();
  scanner.expect_end();
  return set;
}

}  // namespace maxext
