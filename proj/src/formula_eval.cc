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

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>
#include <vector>

#include "maxext/errors.h"
#include "maxext/formula.h"

namespace maxext {
namespace {

constexpr Nat kNatMax = std::numeric_limits<Nat>::max();

// Arithmetic saturates at the top of the representation.
Nat saturating_add(Nat a, Nat b) { return a > kNatMax - b ? kNatMax : a + b; }

Nat saturating_mul(Nat a, Nat b) {
  if (a == 0 || b == 0) return 0;
  return a > kNatMax / b ? kNatMax : a * b;
}

// Number variables in scope, innermost last, falling back to `env`.
class Scope {
 public:
  explicit Scope(const Environment& env) : env_(env) {}

  Nat lookup(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it->first == name) return it->second;
    }
    auto found = env_.find(name);
    if (found == env_.end()) {
      throw InputError("number variable '" + name + "' is unassigned");
    }
    return found->second;
  }

  void push(const std::string& name, Nat value) {
    bound_.emplace_back(&name, value);
  }
  void set_top(Nat value) { bound_.back().second = value; }
  void pop() { bound_.pop_back(); }

  Nat term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::kConstant:
        return t.value();
      case Term::Kind::kVariable:
        return lookup(t.name());
      case Term::Kind::kSum:
        return saturating_add(term(t.left()), term(t.right()));
      case Term::Kind::kProduct:
        return saturating_mul(term(t.left()), term(t.right()));
    }
    return 0;
  }

 private:
  const Environment& env_;
  std::vector<std::pair<const std::string*, Nat>> bound_;
};

// One recursive evaluator; `InX` decides membership in the set variable.
template <typename InX>
class Evaluator {
 public:
  Evaluator(InX in_x, const Environment& env, const ParameterTable& params)
      : in_x_(std::move(in_x)), scope_(env), params_(params) {}

  bool eval(const Formula& f) {
    using Kind = Formula::Kind;
    switch (f.kind()) {
      case Kind::kTrue:
        return true;
      case Kind::kFalse:
        return false;
      case Kind::kInSet:
        return in_x_(scope_.term(f.lhs()));
      case Kind::kInParam: {
        auto found = params_.find(f.name());
        if (found == params_.end()) {
          throw InputError("set parameter '" + f.name() + "' has no value");
        }
        return found->second.contains(scope_.term(f.lhs()));
      }
      case Kind::kEqual:
        return scope_.term(f.lhs()) == scope_.term(f.rhs());
      case Kind::kLess:
        return scope_.term(f.lhs()) < scope_.term(f.rhs());
      case Kind::kNot:
        return !eval(f.operand());
      case Kind::kAnd:
        return eval(f.left()) && eval(f.right());
      case Kind::kOr:
        return eval(f.left()) || eval(f.right());
      case Kind::kImplies:
        return !eval(f.left()) || eval(f.right());
      case Kind::kIff:
        return eval(f.left()) == eval(f.right());
      case Kind::kForall:
      case Kind::kExists: {
        const bool universal = f.kind() == Kind::kForall;
        const Nat bound = scope_.term(f.bound());
        bool result = universal;
        scope_.push(f.name(), 0);
        for (Nat v = 0; v < bound; ++v) {
          scope_.set_top(v);
          if (eval(f.operand()) != universal) {
            result = !universal;
            break;
          }
        }
        scope_.pop();
        return result;
      }
    }
    return false;
  }

 private:
  InX in_x_;
  Scope scope_;
  const ParameterTable& params_;
};

template <typename InX>
Evaluator(InX, const Environment&, const ParameterTable&) -> Evaluator<InX>;

// Largest value each term can take when every variable ranges over its
// bound. Terms are monotone in their variables, so substituting maxima
// suffices.
Nat max_term(const Term& t, const Scope& maxima) { return maxima.term(t); }

Nat bound_of(const Formula& f, Scope& maxima) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kInSet:
      return saturating_add(max_term(f.lhs(), maxima), 1);
    case Kind::kNot:
      return bound_of(f.operand(), maxima);
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return std::max(bound_of(f.left(), maxima), bound_of(f.right(), maxima));
    case Kind::kForall:
    case Kind::kExists: {
      const Nat limit = max_term(f.bound(), maxima);
      if (limit == 0) return 0;  // body never evaluated
      maxima.push(f.name(), limit - 1);
      const Nat inner = bound_of(f.operand(), maxima);
      maxima.pop();
      return inner;
    }
    default:
      return 0;
  }
}

}  // namespace

Nat eval_term(const Term& term, const Environment& env) {
  return Scope(env).term(term);
}

bool eval_hat(const Formula& formula, Nat n, const Environment& env,
              const ParameterTable& params) {
  Evaluator evaluator([n](Nat t) { return contains(t, n); }, env, params);
  return evaluator.eval(formula);
}

bool holds(const Formula& formula, const FinSet& x, const Environment& env,
           const ParameterTable& params) {
  Evaluator evaluator([&x](Nat t) { return x.contains(t); }, env, params);
  return evaluator.eval(formula);
}

Nat membership_bound(const Formula& formula, const Environment& env) {
  Scope maxima(env);
  return bound_of(formula, maxima);
}

void certify_table(const std::vector<bool>& table,
                   FiniteCharacterReport& report, const FinSet& support) {
  auto subset_of_support = [&support](Nat mask) {
    std::vector<Nat> out;
    for (; mask != 0; mask &= mask - 1) {
      out.push_back(support.elements()[static_cast<std::size_t>(
          std::countr_zero(mask))]);
    }
    return FinSet::from_sorted(std::move(out));
  };
  report.holds_on_empty = table[0];
  report.downward_closed = true;
  report.counterexample.reset();
  // Removing one element at a time suffices: any subset of A is reached from
  // A by single removals, and a failure along that chain is a failure of
  // some single removal.
  for (Nat n = 1; n < table.size(); ++n) {
    if (!table[n]) continue;
    for (Nat rest = n; rest != 0; rest &= rest - 1) {
      const Nat smaller = n & ~(rest & (~rest + 1));
      if (!table[smaller]) {
        report.downward_closed = false;
        report.counterexample.emplace(subset_of_support(n),
                                      subset_of_support(smaller));
        return;
      }
    }
  }
}

FiniteCharacterReport check_finite_character(const Formula& formula,
                                             const Universe& universe,
                                             const ParameterTable& params,
                                             const Environment& env,
                                             std::size_t cap) {
  Environment full_env = env;
  full_env.emplace(std::string(kUniverseVariable), universe.size());

  FiniteCharacterReport report;
  report.support_bound =
      std::min(membership_bound(formula, full_env), universe.size());
  const std::size_t limit = std::min(cap, kMaxEnumerationCap);
  if (report.support_bound > limit) {
    throw BudgetError("finite-character check needs 2^" +
                      std::to_string(report.support_bound) +
                      " subsets, above the enumeration cap of 2^" +
                      std::to_string(limit));
  }

  const Nat count = Nat{1} << report.support_bound;
  report.table.resize(count);
  for (Nat n = 0; n < count; ++n) {
    report.table[n] = eval_hat(formula, n, full_env, params);
  }
  certify_table(report.table, report,
                FinSet::interval(0, report.support_bound));
  return report;
}

}  // namespace maxext
