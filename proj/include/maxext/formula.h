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

// A bounded-quantifier formula language with one free set variable X.
//
//   formula  := imp ('<->' imp)*
//   imp      := or ('->' imp)?
//   or       := and ('or' and)*
//   and      := unary ('and' unary)*
//   unary    := 'not' unary | quant | 'true' | 'false' | '(' formula ')'
//             | term ('in' SET | '=' term | '<' term)
//   quant    := ('forall' | 'exists') VAR '<' term '.' '(' formula ')'
//   term     := prod ('+' prod)*
//   prod     := atom ('*' atom)*
//   atom     := NUMBER | VAR | '(' term ')'
//
// SET is X or a declared parameter P0, P1, .... Terms never mention X, so
// every term evaluates to a natural once its variables are assigned.

#ifndef MAXEXT_FORMULA_H_
#define MAXEXT_FORMULA_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxext/finset.h"

namespace maxext {

// Name of the free number variable bound to the universe size.
inline constexpr std::string_view kUniverseVariable = "u";

class Term {
 public:
  enum class Kind { kConstant, kVariable, kSum, kProduct };

  Term();  // the constant 0

  static Term constant(Nat value);
  static Term variable(std::string name);
  static Term sum(Term left, Term right);
  static Term product(Term left, Term right);

  Kind kind() const;
  Nat value() const;                // kConstant
  const std::string& name() const;  // kVariable
  const Term& left() const;         // kSum, kProduct
  const Term& right() const;        // kSum, kProduct

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind {
    kTrue,
    kFalse,
    kInSet,    // t in X
    kInParam,  // t in P
    kEqual,
    kLess,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kForall,  // forall v < t . (body)
    kExists,
  };

  Formula();  // true

  static Formula truth();
  static Formula falsity();
  static Formula in_set(Term element);
  static Formula in_param(Term element, std::string parameter);
  static Formula equal(Term left, Term right);
  static Formula less(Term left, Term right);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula equivalence(Formula left, Formula right);
  static Formula forall(std::string variable, Term bound, Formula body);
  static Formula exists(std::string variable, Term bound, Formula body);

  Kind kind() const;
  // Atoms: the element term, or the left side of = and <.
  const Term& lhs() const;
  // = and <.
  const Term& rhs() const;
  // kInParam: the parameter; quantifiers: the bound variable.
  const std::string& name() const;
  // Quantifiers.
  const Term& bound() const;
  // kNot and quantifiers.
  const Formula& operand() const;
  // Binary connectives.
  const Formula& left() const;
  const Formula& right() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  static Formula binary(Kind kind, Formula left, Formula right);
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Finite truncations of set parameters, by name.
using ParameterTable = std::map<std::string, FinSet>;
// Assignment of free number variables.
using Environment = std::map<std::string, Nat>;

// Names a formula may mention without binding them.
struct Declarations {
  std::vector<std::string> free_variables{std::string(kUniverseVariable)};
  std::vector<std::string> parameters;
};

// Throws ParseError (with position) on syntax errors and on unbound
// variables or undeclared parameters.
Formula parse_formula(std::string_view text, const Declarations& decls = {});

// Checks the scoping rules that parse_formula enforces, for formulas built
// in code. Throws InputError.
void validate(const Formula& formula, const Declarations& decls);

// Contents of a formula file: `param P0 = {1,2}` and `var x` header lines,
// then one formula. `#` starts a comment.
struct FormulaSource {
  Formula formula;
  ParameterTable params;
  std::vector<std::string> free_variables;

  Declarations declarations() const;
};

// `implicit` names free variables that need no `var` line.
FormulaSource parse_formula_file(
    std::string_view text,
    const std::vector<std::string>& implicit = {
        std::string(kUniverseVariable)});

// Minimal-parenthesis rendering that parse_formula reads back to an equal
// AST.
std::string to_string(const Term& term);
std::string to_string(const Formula& formula);

// Throws InputError if a variable is unassigned.
Nat eval_term(const Term& term, const Environment& env);

// The formula read with X interpreted as the set whose canonical index is
// n; membership in X is the bit test contains(t, n).
bool eval_hat(const Formula& formula, Nat n, const Environment& env,
              const ParameterTable& params);

// The formula read with X interpreted as the explicit set `x`.
bool holds(const Formula& formula, const FinSet& x, const Environment& env,
           const ParameterTable& params);

// Least s such that the truth value depends only on X intersected with
// {0..s-1}: one more than the largest value any `t in X` atom can take,
// given the quantifier bounds. 0 when X is never consulted.
Nat membership_bound(const Formula& formula, const Environment& env);

struct FiniteCharacterReport {
  bool holds_on_empty = false;
  bool downward_closed = false;
  // A pair (larger, smaller) with smaller a subset of larger, the formula
  // true of larger and false of smaller.
  std::optional<std::pair<FinSet, FinSet>> counterexample;
  // Elements at or above this bound do not affect the truth value.
  Nat support_bound = 0;
  // Truth table over the canonical indices of subsets of
  // {0..support_bound-1}.
  std::vector<bool> table;

  bool finite_character() const { return holds_on_empty && downward_closed; }
};

// Decides finite character on the universe exhaustively. Only subsets of
// {0..min(u, membership_bound)-1} are enumerated, since larger elements
// cannot change the truth value. `u` is bound to the universe size unless
// `env` assigns it. Throws BudgetError if the enumeration exceeds `cap`.
// Fills the verdict fields of `report` from a truth table indexed by masks
// over some support set.
void certify_table(const std::vector<bool>& table,
                   FiniteCharacterReport& report, const FinSet& support);

FiniteCharacterReport check_finite_character(
    const Formula& formula, const Universe& universe,
    const ParameterTable& params, const Environment& env = {},
    std::size_t cap = kDefaultEnumerationCap);

}  // namespace maxext

#endif  // MAXEXT_FORMULA_H_
