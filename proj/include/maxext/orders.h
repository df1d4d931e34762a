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

// Finite posets and join-semilattices on elements 0..m-1, and the closure
// operators whose closed sets are exactly their ideals.

#ifndef MAXEXT_ORDERS_H_
#define MAXEXT_ORDERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "maxext/closure.h"
#include "maxext/finset.h"
#include "maxext/ndclosure.h"

namespace maxext {

class Poset {
 public:
  // leq[a][b] is a <= b. Throws InputError unless the relation is a partial
  // order on a square matrix.
  explicit Poset(std::vector<std::vector<bool>> leq);

  // Reflexive-transitive closure of `pairs` (a, b) meaning a <= b. Throws
  // InputError on out-of-range elements or a cycle.
  static Poset from_relations(std::size_t size,
                              std::span<const std::pair<Nat, Nat>> pairs);

  std::size_t size() const { return leq_.size(); }
  bool leq(Nat a, Nat b) const { return leq_[a][b]; }
  FinSet elements() const { return FinSet::interval(0, size()); }

  // The poset with a new element t = size() above everything.
  Poset with_top() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::vector<bool>> leq_;
};

class JoinSemilattice {
 public:
  // Throws InputError unless `join` is the least upper bound table of
  // `order` and the order has a maximum.
  JoinSemilattice(Poset order, std::vector<std::vector<Nat>> join);

  // Computes every join. Throws InputError if some pair has no least upper
  // bound or the poset is empty.
  static JoinSemilattice with_derived_joins(Poset order);

  const Poset& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool leq(Nat a, Nat b) const { return order_.leq(a, b); }
  Nat join(Nat a, Nat b) const { return join_[a][b]; }
  Nat top() const { return top_; }
  FinSet elements() const { return order_.elements(); }

  // Greatest lower bound, when one exists.
  std::optional<Nat> meet(Nat a, Nat b) const;

 private:
  Poset order_;
  std::vector<std::vector<Nat>> join_;
  Nat top_ = 0;
};

// Downward closed and closed under joins.
bool is_semilattice_ideal(const FinSet& i, const JoinSemilattice& l);

// Proper ideal such that meet(a, b) in I forces a or b into I, over pairs
// that have a meet.
bool is_prime_ideal(const FinSet& i, const JoinSemilattice& l);

// Rules {a,b} -> a v b and {a} -> b for b <= a. Closed sets are exactly
// the ideals.
ClosureOperator semilattice_ideal_operator(const JoinSemilattice& l);

// A maximal proper ideal containing `i`, found as the maximal closed
// extension avoiding the top. Throws PreconditionError(kNotAnIdeal) unless
// `i` is a proper ideal.
FinSet extend_to_maximal_ideal_semilattice(const JoinSemilattice& l,
                                           const FinSet& i);

// Downward closed and directed: any two members have an upper bound inside.
// The empty set counts.
bool is_poset_ideal(const FinSet& i, const Poset& p);

// Operator over the extended poset (elements 0..m, top t = m) whose closed
// sets are exactly its ideals. With p_0, p_1, ... the given enumeration
// (identity by default):
//   {p_k} -> {p_j}                        whenever p_j <= p_k
//   {p_j, p_k} -> {p_n : p_j, p_k <= p_n} for every pair (some upper bound
//                                          always exists, namely t)
//   {p_i} -> {p_i}                        for every i
// Throws InputError if `enumeration` is not a permutation of 0..m.
NdClosureOperator poset_ideal_operator(const Poset& p,
                                       std::span<const Nat> enumeration = {});

// A maximal ideal of `p` containing `i`: the maximal closed extension in the
// extended poset that avoids t. Throws PreconditionError(kNotAnIdeal)
// unless `i` is an ideal of `p`.
FinSet extend_to_maximal_ideal_poset(
    const Poset& p, const FinSet& i,
    std::uint64_t budget = kDefaultSearchBudget);

// `elements m` then `a <= b` lines. Throws ParseError / InputError.
Poset parse_poset(std::string_view text);

// A poset file plus `join a b = c` lines (checked) or `join auto`; joins
// not listed are derived.
JoinSemilattice parse_semilattice(std::string_view text);

}  // namespace maxext

#endif  // MAXEXT_ORDERS_H_
