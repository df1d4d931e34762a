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

#include "maxext/formula.h"

#include <optional>
#include <sstream>

namespace maxext {

struct Term::Node {
  Kind kind = Kind::kConstant;
  Nat value = 0;
  std::string name;
  std::optional<Term> left;
  std::optional<Term> right;
};

Term::Term() : node_(std::make_shared<const Node>()) {}

Term Term::constant(Nat value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kConstant;
  node->value = value;
  return Term(std::move(node));
}

Term Term::variable(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVariable;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::sum(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSum;
  node->left = std::move(left);
  node->right = std::move(right);
  return Term(std::move(node));
}

Term Term::product(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kProduct;
  node->left = std::move(left);
  node->right = std::move(right);
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }
Nat Term::value() const { return node_->value; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::left() const { return *node_->left; }
const Term& Term::right() const { return *node_->right; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kConstant:
      return a.value() == b.value();
    case Term::Kind::kVariable:
      return a.name() == b.name();
    case Term::Kind::kSum:
    case Term::Kind::kProduct:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

struct Formula::Node {
  Kind kind = Kind::kTrue;
  Term lhs;
  Term rhs;
  std::string name;
  Term bound;
  std::optional<Formula> left;
  std::optional<Formula> right;
};

Formula::Formula() : node_(std::make_shared<const Node>()) {}

Formula Formula::truth() { return Formula(); }

Formula Formula::falsity() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kFalse;
  return Formula(std::move(node));
}

Formula Formula::in_set(Term element) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kInSet;
  node->lhs = std::move(element);
  return Formula(std::move(node));
}

Formula Formula::in_param(Term element, std::string parameter) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kInParam;
  node->lhs = std::move(element);
  node->name = std::move(parameter);
  return Formula(std::move(node));
}

Formula Formula::equal(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kEqual;
  node->lhs = std::move(left);
  node->rhs = std::move(right);
  return Formula(std::move(node));
}

Formula Formula::less(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kLess;
  node->lhs = std::move(left);
  node->rhs = std::move(right);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->left = std::move(operand);
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Kind::kAnd, std::move(left), std::move(right));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Kind::kOr, std::move(left), std::move(right));
}

Formula Formula::implication(Formula left, Formula right) {
  return binary(Kind::kImplies, std::move(left), std::move(right));
}

Formula Formula::equivalence(Formula left, Formula right) {
  return binary(Kind::kIff, std::move(left), std::move(right));
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->left = std::move(left);
  node->right = std::move(right);
  return Formula(std::move(node));
}

Formula Formula::forall(std::string variable, Term bound, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kForall;
  node->name = std::move(variable);
  node->bound = std::move(bound);
  node->left = std::move(body);
  return Formula(std::move(node));
}

Formula Formula::exists(std::string variable, Term bound, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kExists;
  node->name = std::move(variable);
  node->bound = std::move(bound);
  node->left = std::move(body);
  return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Term& Formula::lhs() const { return node_->lhs; }
const Term& Formula::rhs() const { return node_->rhs; }
const std::string& Formula::name() const { return node_->name; }
const Term& Formula::bound() const { return node_->bound; }

const Formula& Formula::operand() const { return *node_->left; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using Kind = Formula::Kind;
  switch (a.kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
      return true;
    case Kind::kInSet:
      return a.lhs() == b.lhs();
    case Kind::kInParam:
      return a.lhs() == b.lhs() && a.name() == b.name();
    case Kind::kEqual:
    case Kind::kLess:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Kind::kNot:
      return a.operand() == b.operand();
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return a.left() == b.left() && a.right() == b.right();
    case Kind::kForall:
    case Kind::kExists:
      return a.name() == b.name() && a.bound() == b.bound() &&
             a.operand() == b.operand();
  }
  return false;
}

namespace {

// Term levels: 1 sum, 2 product, 3 atom.
int level(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kSum:
      return 1;
    case Term::Kind::kProduct:
      return 2;
    default:
      return 3;
  }
}

void print(std::ostream& os, const Term& t, int min_level) {
  const bool wrap = level(t) < min_level;
  if (wrap) os << '(';
  switch (t.kind()) {
    case Term::Kind::kConstant:
      os << t.value();
      break;
    case Term::Kind::kVariable:
      os << t.name();
      break;
    case Term::Kind::kSum:
      print(os, t.left(), 1);
      os << " + ";
      print(os, t.right(), 2);
      break;
    case Term::Kind::kProduct:
      print(os, t.left(), 2);
      os << " * ";
      print(os, t.right(), 3);
      break;
  }
  if (wrap) os << ')';
}

// Formula levels: 1 iff, 2 implies, 3 or, 4 and, 5 unary and atoms.
int level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kIff:
      return 1;
    case Formula::Kind::kImplies:
      return 2;
    case Formula::Kind::kOr:
      return 3;
    case Formula::Kind::kAnd:
      return 4;
    default:
      return 5;
  }
}

void print(std::ostream& os, const Formula& f, int min_level) {
  using Kind = Formula::Kind;
  const bool wrap = level(f) < min_level;
  if (wrap) os << '(';
  switch (f.kind()) {
    case Kind::kTrue:
      os << "true";
      break;
    case Kind::kFalse:
      os << "false";
      break;
    case Kind::kInSet:
      print(os, f.lhs(), 1);
      os << " in X";
      break;
    case Kind::kInParam:
      print(os, f.lhs(), 1);
      os << " in " << f.name();
      break;
    case Kind::kEqual:
      print(os, f.lhs(), 1);
      os << " = ";
      print(os, f.rhs(), 1);
      break;
    case Kind::kLess:
      print(os, f.lhs(), 1);
      os << " < ";
      print(os, f.rhs(), 1);
      break;
    case Kind::kNot:
      os << "not ";
      print(os, f.operand(), 5);
      break;
    case Kind::kAnd:
      print(os, f.left(), 4);
      os << " and ";
      print(os, f.right(), 5);
      break;
    case Kind::kOr:
      print(os, f.left(), 3);
      os << " or ";
      print(os, f.right(), 4);
      break;
    case Kind::kImplies:
      print(os, f.left(), 3);
      os << " -> ";
      print(os, f.right(), 2);
      break;
    case Kind::kIff:
      print(os, f.left(), 1);
      os << " <-> ";
      print(os, f.right(), 2);
      break;
    case Kind::kForall:
    case Kind::kExists:
      os << (f.kind() == Kind::kForall ? "forall " : "exists ") << f.name()
         << " < ";
      print(os, f.bound(), 1);
      os << " . (";
      print(os, f.operand(), 1);
      os << ')';
      break;
  }
  if (wrap) os << ')';
}

}  // namespace

std::string to_string(const Term& term) {
  std::ostringstream os;
  print(os, term, 1);
  return os.str();
}

std::string to_string(const Formula& formula) {
  std::ostringstream os;
  print(os, formula, 1);
  return os.str();
}

Declarations FormulaSource::declarations() const {
  Declarations decls;
  decls.free_variables = free_variables;
  for (const auto& [name, set] : params) decls.parameters.push_back(name);
  return decls;
}

}  // namespace maxext
