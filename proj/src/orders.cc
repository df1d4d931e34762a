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

#include "maxext/orders.h"

#include <algorithm>
#include <map>
#include <string>

#include "maxext/errors.h"
#include "maxext/property.h"
#include "scanner.h"

namespace maxext {

Poset::Poset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t m = leq_.size();
  for (const auto& row : leq_) {
    if (row.size() != m) throw InputError("order matrix is not square");
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!leq_[a][a]) {
      throw InputError("order is not reflexive at " + std::to_string(a));
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) {
        throw InputError("order is not antisymmetric: " + std::to_string(a) +
                         " and " + std::to_string(b));
      }
      for (std::size_t c = 0; c < m; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
          throw InputError("order is not transitive at " + std::to_string(a) +
                           " <= " + std::to_string(b) +
                           " <= " + std::to_string(c));
        }
      }
    }
  }
}

Poset Poset::from_relations(std::size_t size,
                            std::span<const std::pair<Nat, Nat>> pairs) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) leq[a][a] = true;
  for (const auto& [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw InputError("relation " + std::to_string(a) + " <= " +
                       std::to_string(b) + " mentions an element >= " +
                       std::to_string(size));
    }
    leq[a][b] = true;
  }
  // Warshall.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t a = 0; a < size; ++a) {
      if (!leq[a][k]) continue;
      for (std::size_t b = 0; b < size; ++b) {
        if (leq[k][b]) leq[a][b] = true;
      }
    }
  }
  return Poset(std::move(leq));
}

Poset Poset::with_top() const {
  const std::size_t m = size();
  std::vector<std::vector<bool>> leq(m + 1, std::vector<bool>(m + 1, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = leq_[a][b];
    leq[a][m] = true;
  }
  leq[m][m] = true;
  return Poset(std::move(leq));
}

namespace {

std::optional<Nat> least_upper_bound(const Poset& p, Nat a, Nat b) {
  std::optional<Nat> best;
  for (Nat c = 0; c < p.size(); ++c) {
    if (!p.leq(a, c) || !p.leq(b, c)) continue;
    if (!best || p.leq(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  // The candidate must sit below every upper bound.
  for (Nat c = 0; c < p.size(); ++c) {
    if (p.leq(a, c) && p.leq(b, c) && !p.leq(*best, c)) return std::nullopt;
  }
  return best;
}

}  // namespace

JoinSemilattice::JoinSemilattice(Poset order,
                                 std::vector<std::vector<Nat>> join)
    : order_(std::move(order)), join_(std::move(join)) {
  const std::size_t m = order_.size();
  if (m == 0) throw InputError("a join-semilattice needs a top element");
  if (join_.size() != m) throw InputError("join table has the wrong size");
  for (Nat a = 0; a < m; ++a) {
    if (join_[a].size() != m) throw InputError("join table is not square");
    for (Nat b = 0; b < m; ++b) {
      const std::optional<Nat> lub = least_upper_bound(order_, a, b);
      if (!lub || *lub != join_[a][b]) {
        throw InputError("join " + std::to_string(a) + " v " +
                         std::to_string(b) + " = " +
                         std::to_string(join_[a][b]) +
                         " is not the least upper bound");
      }
    }
  }
  top_ = 0;
  for (Nat a = 0; a < m; ++a) top_ = join_[top_][a];
  for (Nat a = 0; a < m; ++a) {
    if (!order_.leq(a, top_)) throw InputError("order has no maximum");
  }
}

JoinSemilattice JoinSemilattice::with_derived_joins(Poset order) {
  const std::size_t m = order.size();
  std::vector<std::vector<Nat>> join(m, std::vector<Nat>(m, 0));
  for (Nat a = 0; a < m; ++a) {
    for (Nat b = 0; b < m; ++b) {
      const std::optional<Nat> lub = least_upper_bound(order, a, b);
      if (!lub) {
        throw InputError(std::to_string(a) + " and " + std::to_string(b) +
                         " have no least upper bound");
      }
      join[a][b] = *lub;
    }
  }
  return JoinSemilattice(std::move(order), std::move(join));
}

std::optional<Nat> JoinSemilattice::meet(Nat a, Nat b) const {
  std::optional<Nat> best;
  for (Nat c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (!best || leq(*best, c)) best = c;
  }
  if (!best) return std::nullopt;
  for (Nat c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b) && !leq(c, *best)) return std::nullopt;
  }
  return best;
}

namespace {

void require_elements(const FinSet& i, std::size_t size) {
  if (!i.empty() && i.max() >= size) {
    throw InputError("set " + to_string(i) + " mentions a non-element");
  }
}

bool downward_closed(const FinSet& i, const Poset& p) {
  for (Nat a : i) {
    for (Nat b = 0; b < p.size(); ++b) {
      if (p.leq(b, a) && !i.contains(b)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_semilattice_ideal(const FinSet& i, const JoinSemilattice& l) {
  require_elements(i, l.size());
  if (!downward_closed(i, l.order())) return false;
  for (Nat a : i) {
    for (Nat b : i) {
      if (!i.contains(l.join(a, b))) return false;
    }
  }
  return true;
}

bool is_prime_ideal(const FinSet& i, const JoinSemilattice& l) {
  if (!is_semilattice_ideal(i, l) || i.contains(l.top())) return false;
  for (Nat a = 0; a < l.size(); ++a) {
    for (Nat b = 0; b < l.size(); ++b) {
      const std::optional<Nat> m = l.meet(a, b);
      if (m && i.contains(*m) && !i.contains(a) && !i.contains(b)) {
        return false;
      }
    }
  }
  return true;
}

ClosureOperator semilattice_ideal_operator(const JoinSemilattice& l) {
  std::vector<Rule> rules;
  for (Nat a = 0; a < l.size(); ++a) {
    for (Nat b = a; b < l.size(); ++b) {
      rules.push_back({FinSet{a, b}, l.join(a, b)});
    }
    for (Nat b = 0; b < l.size(); ++b) {
      if (l.leq(b, a)) rules.push_back({FinSet{a}, b});
    }
  }
  return ClosureOperator(std::move(rules), Universe(l.size()));
}

FinSet extend_to_maximal_ideal_semilattice(const JoinSemilattice& l,
                                           const FinSet& i) {
  require_elements(i, l.size());
  if (!is_semilattice_ideal(i, l) || i.contains(l.top())) {
    throw PreconditionError(PreconditionError::Kind::kNotAnIdeal,
                            to_string(i) + " is not a proper ideal");
  }
  const Universe universe(l.size());
  return ce_maximal(l.elements(), i,
                    Property::avoiding(FinSet{l.top()}, universe),
                    semilattice_ideal_operator(l));
}

bool is_poset_ideal(const FinSet& i, const Poset& p) {
  require_elements(i, p.size());
  if (!downward_closed(i, p)) return false;
  for (Nat a : i) {
    for (Nat b : i) {
      const bool bounded = std::any_of(i.begin(), i.end(), [&](Nat c) {
        return p.leq(a, c) && p.leq(b, c);
      });
      if (!bounded) return false;
    }
  }
  return true;
}

NdClosureOperator poset_ideal_operator(const Poset& p,
                                       std::span<const Nat> enumeration) {
  const Poset hat = p.with_top();
  const std::size_t m = hat.size();
  std::vector<Nat> order(enumeration.begin(), enumeration.end());
  if (order.empty()) {
    order = hat.elements().elements();
  } else if (order.size() != m ||
             FinSet::from_unsorted(order) != hat.elements()) {
    throw InputError("enumeration is not a permutation of the extended poset");
  }

  std::vector<NdRule> rules;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const Nat pj = order[j];
      const Nat pk = order[k];
      if (hat.leq(pj, pk)) rules.push_back({FinSet{pk}, FinSet{pj}});
      std::vector<Nat> bounds;
      for (Nat pn : order) {
        if (hat.leq(pj, pn) && hat.leq(pk, pn)) bounds.push_back(pn);
      }
      rules.push_back({FinSet{pj, pk}, FinSet::from_unsorted(bounds)});
    }
    rules.push_back({FinSet{order[j]}, FinSet{order[j]}});
  }
  return NdClosureOperator(std::move(rules), Universe(m));
}

FinSet extend_to_maximal_ideal_poset(const Poset& p, const FinSet& i,
                                     std::uint64_t budget) {
  require_elements(i, p.size());
  if (!is_poset_ideal(i, p)) {
    throw PreconditionError(PreconditionError::Kind::kNotAnIdeal,
                            to_string(i) + " is not an ideal");
  }
  const Nat top = p.size();
  const Universe universe(top + 1);
  FinSet j = nce_maximal(universe.ground(), i,
                         Property::avoiding(FinSet{top}, universe),
                         poset_ideal_operator(p), budget);
  return j.without(top);
}

namespace {

struct OrderFile {
  std::size_t size = 0;
  std::vector<std::pair<Nat, Nat>> relations;
  std::vector<std::pair<std::pair<Nat, Nat>, Nat>> joins;
  bool join_auto = false;
};

OrderFile read_order_file(std::string_view text, bool allow_joins) {
  OrderFile file;
  bool have_header = false;
  for (const internal::SourceLine& line : internal::content_lines(text)) {
    internal::Scanner scanner(line.text, line.number);
    if (!have_header) {
      if (scanner.identifier() != "elements") {
        scanner.fail("expected 'elements m' header");
      }
      file.size = static_cast<std::size_t>(scanner.natural());
      scanner.expect_end();
      have_header = true;
      continue;
    }
    if (allow_joins && scanner.consume("join")) {
      if (scanner.consume("auto")) {
        file.join_auto = true;
      } else {
        const Nat a = scanner.natural();
        const Nat b = scanner.natural();
        scanner.expect("=");
        const Nat c = scanner.natural();
        if (a >= file.size || b >= file.size || c >= file.size) {
          scanner.fail("join mentions a non-element");
        }
        file.joins.push_back({{a, b}, c});
      }
      scanner.expect_end();
      continue;
    }
    const Nat a = scanner.natural();
    scanner.expect("<=");
    const Nat b = scanner.natural();
    scanner.expect_end();
    if (a >= file.size || b >= file.size) {
      scanner.fail("relation mentions a non-element");
    }
    file.relations.emplace_back(a, b);
  }
  if (!have_header) throw ParseError(1, 1, "missing 'elements m' header");
  return file;
}

}  // namespace

Poset parse_poset(std::string_view text) {
  const OrderFile file = read_order_file(text, false);
  return Poset::from_relations(file.size, file.relations);
}

JoinSemilattice parse_semilattice(std::string_view text) {
  const OrderFile file = read_order_file(text, true);
  JoinSemilattice derived = JoinSemilattice::with_derived_joins(
      Poset::from_relations(file.size, file.relations));
  for (const auto& [pair, c] : file.joins) {
    const auto [a, b] = pair;
    if (derived.join(a, b) != c) {
      throw InputError("join " + std::to_string(a) + " v " +
                       std::to_string(b) + " = " + std::to_string(c) +
                       " is not the least upper bound (expected " +
                       std::to_string(derived.join(a, b)) + ")");
    }
  }
  return derived;
}

}  // namespace maxext
