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

// Finite sets of naturals and their canonical indices.
//
// A finite set F is coded by the natural  n = sum_{i in F} 2^i,  so the
// membership test "i is in the set coded by n" is a single bit test and every
// natural is the code of exactly one finite set.

#ifndef MAXEXT_FINSET_H_
#define MAXEXT_FINSET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace maxext {

using Nat = std::uint64_t;

// Number of bits available to a canonical index.
inline constexpr Nat kIndexBits = 64;

// Largest base a subset enumeration accepts unless told otherwise.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

// Hard ceiling for any enumeration cap; masks are 64-bit.
inline constexpr std::size_t kMaxEnumerationCap = 62;

// An immutable finite set of naturals, stored as a strictly increasing
// sequence.
class FinSet {
 public:
  using const_iterator = std::vector<Nat>::const_iterator;

  FinSet() = default;
  // Duplicates are merged; order does not matter.
  FinSet(std::initializer_list<Nat> elements);

  // Sorts and removes duplicates.
  static FinSet from_unsorted(std::vector<Nat> elements);
  // Throws InputError unless `elements` is strictly increasing.
  static FinSet from_sorted(std::vector<Nat> elements);
  // {lo, ..., hi - 1}
  static FinSet interval(Nat lo, Nat hi);

  const std::vector<Nat>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  // Precondition: !empty().
  Nat max() const { return elements_.back(); }

  bool contains(Nat element) const;
  bool is_subset_of(const FinSet& other) const;

  FinSet with(Nat element) const;
  FinSet without(Nat element) const;
  // Elements strictly below `bound`.
  FinSet below(Nat bound) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Nat> elements_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);

// Strict order of canonical indices, defined for sets of any size: a < b
// iff the largest element of the symmetric difference belongs to b.
bool index_less(const FinSet& a, const FinSet& b);

// Canonical index sum 2^i. Throws RangeError if an element is >= 64.
Nat index_of(const FinSet& set);
// The set whose canonical index is n.
FinSet members(Nat n);
// i is in the set coded by n.
constexpr bool contains(Nat i, Nat n) {
  return i < kIndexBits && ((n >> i) & 1U) != 0;
}

// The finite ground segment {0, ..., size - 1}.
class Universe {
 public:
  // Throws InputError for size 0.
  explicit Universe(Nat size);

  Nat size() const { return size_; }
  FinSet ground() const { return FinSet::interval(0, size_); }
  bool contains(Nat element) const { return element < size_; }
  bool contains(const FinSet& set) const {
    return set.empty() || set.max() < size_;
  }
  // Throws InputError naming `what` if `set` leaves the universe.
  void require(const FinSet& set, std::string_view what) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  Nat size_;
};

// Lazily enumerates every subset of a base set. Subsets appear in order of
// the characteristic vector over the base, which is also canonical-index
// order.
class SubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FinSet;
    using difference_type = std::ptrdiff_t;
    using pointer = const FinSet*;
    using reference = FinSet;

    iterator() = default;
    iterator(const std::vector<Nat>* base, std::uint64_t mask)
        : base_(base), mask_(mask) {}

    FinSet operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    // Position in the enumeration, which is the mask over the base.
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    const std::vector<Nat>* base_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  explicit SubsetRange(FinSet base) : base_(std::move(base)) {}

  iterator begin() const { return iterator(&base_.elements(), 0); }
  iterator end() const {
    return iterator(&base_.elements(), std::uint64_t{1} << base_.size());
  }
  std::uint64_t count() const { return std::uint64_t{1} << base_.size(); }
  const FinSet& base() const { return base_; }

 private:
  FinSet base_;
};

// All 2^|base| subsets of `base`. Throws BudgetError if |base| > cap.
SubsetRange subsets(const FinSet& base,
                    std::size_t cap = kDefaultEnumerationCap);

// "{a,b,c}" with ascending elements; "{}" for the empty set.
std::string to_string(const FinSet& set);
std::ostream& operator<<(std::ostream& os, const FinSet& set);

// Parses "{}", "{1,2,5}", and inclusive ranges "{0..27}", which may be mixed
// with plain elements. Duplicates are rejected. Throws ParseError.
FinSet parse_set(std::string_view text);

}  // namespace maxext

#endif  // MAXEXT_FINSET_H_
