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
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "maxext/errors.h"
#include "maxext/formula.h"
#include "scanner.h"

namespace maxext {
namespace {

constexpr std::string_view kKeywords[] = {"forall", "exists", "in",  "true",
                                          "false",  "and",    "or",  "not"};

bool is_keyword(std::string_view word) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), word) !=
         std::end(kKeywords);
}

// P followed by one or more digits.
bool is_parameter_name(std::string_view word) {
  return word.size() >= 2 && word[0] == 'P' &&
         std::all_of(word.begin() + 1, word.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c));
         });
}

bool is_set_name(std::string_view word) {
  return word == "X" || is_parameter_name(word);
}

bool is_variable_name(std::string_view word) {
  if (word.empty() || is_keyword(word) || is_set_name(word)) return false;
  if (!std::isalpha(static_cast<unsigned char>(word[0])) && word[0] != '_') {
    return false;
  }
  return std::all_of(word.begin(), word.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool contains_name(const std::vector<std::string>& names,
                   std::string_view name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

struct Token {
  enum class Kind { kNumber, kWord, kSymbol, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  Nat value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string describe(const Token& token) {
  return token.kind == Token::Kind::kEnd ? "end of input"
                                         : "'" + token.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& message) {
    throw ParseError(line, i - line_start + 1, message);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    Token token;
    token.line = line;
    token.column = i - line_start + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token.kind = Token::Kind::kNumber;
      const std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        const Nat digit = static_cast<Nat>(text[i] - '0');
        if (token.value > (std::numeric_limits<Nat>::max() - digit) / 10) {
          fail("number too large");
        }
        token.value = token.value * 10 + digit;
        ++i;
      }
      token.text = std::string(text.substr(start, i - start));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      token.kind = Token::Kind::kWord;
      const std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        ++i;
      }
      token.text = std::string(text.substr(start, i - start));
    } else {
      token.kind = Token::Kind::kSymbol;
      if (text.substr(i, 3) == "<->") {
        token.text = "<->";
      } else if (text.substr(i, 2) == "->") {
        token.text = "->";
      } else if (std::string_view("().+*=<").find(c) !=
                 std::string_view::npos) {
        token.text = std::string(1, c);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      i += token.text.size();
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.line = line;
  end.column = i - line_start + 1;
  tokens.push_back(end);
  return tokens;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Declarations& decls)
      : tokens_(std::move(tokens)), decls_(decls) {}

  Formula parse() {
    Formula f = formula();
    if (peek().kind != Token::Kind::kEnd) {
      fail("expected end of input, found " + describe(peek()));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool at(std::string_view text) const {
    const Token& t = peek();
    return t.kind != Token::Kind::kEnd && t.kind != Token::Kind::kNumber &&
           t.text == text;
  }

  bool accept(std::string_view text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
  }

  void expect(std::string_view text) {
    if (!accept(text)) {
      fail("expected '" + std::string(text) + "', found " + describe(peek()));
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(peek().line, peek().column, message);
  }

  Formula formula() {
    Formula f = implication();
    while (accept("<->")) f = Formula::equivalence(f, implication());
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (accept("->")) return Formula::implication(f, implication());
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("or")) f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("and")) f = Formula::conjunction(f, unary());
    return f;
  }

  Formula unary() {
    if (accept("not")) return Formula::negation(unary());
    if (at("forall") || at("exists")) return quantifier();
    if (accept("true")) return Formula::truth();
    if (accept("false")) return Formula::falsity();
    if (at("(")) {
      // Either a parenthesized formula or an atom whose first term is
      // parenthesized; try the formula reading first.
      const std::size_t saved_pos = pos_;
      const std::size_t saved_scope = scope_.size();
      try {
        ++pos_;
        Formula f = formula();
        expect(")");
        return f;
      } catch (const ParseError& as_formula) {
        pos_ = saved_pos;
        scope_.resize(saved_scope);
        try {
          return atom();
        } catch (const ParseError& as_atom) {
          const bool formula_went_further =
              std::pair(as_formula.line(), as_formula.column()) >
              std::pair(as_atom.line(), as_atom.column());
          if (formula_went_further) throw as_formula;
          throw;
        }
      }
    }
    return atom();
  }

  Formula quantifier() {
    const bool universal = accept("forall");
    if (!universal) expect("exists");
    const Token& name_token = peek();
    if (name_token.kind != Token::Kind::kWord ||
        !is_variable_name(name_token.text)) {
      fail("expected a variable name, found " + describe(name_token));
    }
    std::string name = name_token.text;
    if (in_scope(name)) fail("variable '" + name + "' is already bound");
    ++pos_;
    expect("<");
    Term bound = term();
    expect(".");
    expect("(");
    scope_.push_back(name);
    Formula body = formula();
    scope_.pop_back();
    expect(")");
    return universal ? Formula::forall(std::move(name), std::move(bound),
                                       std::move(body))
                     : Formula::exists(std::move(name), std::move(bound),
                                       std::move(body));
  }

  Formula atom() {
    Term left = term();
    if (accept("in")) {
      const Token& set = peek();
      if (set.kind != Token::Kind::kWord || !is_set_name(set.text)) {
        fail("expected a set name, found " + describe(set));
      }
      if (set.text == "X") {
        ++pos_;
        return Formula::in_set(std::move(left));
      }
      if (!contains_name(decls_.parameters, set.text)) {
        fail("undeclared set parameter '" + set.text + "'");
      }
      std::string name = set.text;
      ++pos_;
      return Formula::in_param(std::move(left), std::move(name));
    }
    if (accept("=")) return Formula::equal(std::move(left), term());
    if (accept("<")) return Formula::less(std::move(left), term());
    fail("expected 'in', '=', or '<', found " + describe(peek()));
  }

  Term term() {
    Term t = product();
    while (accept("+")) t = Term::sum(t, product());
    return t;
  }

  Term product() {
    Term t = primary_term();
    while (accept("*")) t = Term::product(t, primary_term());
    return t;
  }

  Term primary_term() {
    const Token& token = peek();
    if (token.kind == Token::Kind::kNumber) {
      ++pos_;
      return Term::constant(token.value);
    }
    if (accept("(")) {
      Term t = term();
      expect(")");
      return t;
    }
    if (token.kind == Token::Kind::kWord && is_variable_name(token.text)) {
      if (!in_scope(token.text)) {
        fail("unbound variable '" + token.text + "'");
      }
      ++pos_;
      return Term::variable(token.text);
    }
    fail("expected a term, found " + describe(token));
  }

  bool in_scope(std::string_view name) const {
    return contains_name(scope_, name) ||
           contains_name(decls_.free_variables, name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Declarations& decls_;
  std::vector<std::string> scope_;
};

void validate_term(const Term& t, const std::vector<std::string>& scope,
                   const Declarations& decls) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      return;
    case Term::Kind::kVariable:
      if (!contains_name(scope, t.name()) &&
          !contains_name(decls.free_variables, t.name())) {
        throw InputError("unbound variable '" + t.name() + "'");
      }
      return;
    case Term::Kind::kSum:
    case Term::Kind::kProduct:
      validate_term(t.left(), scope, decls);
      validate_term(t.right(), scope, decls);
      return;
  }
}

void validate_formula(const Formula& f, std::vector<std::string>& scope,
                      const Declarations& decls) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::kTrue:
    case Kind::kFalse:
      return;
    case Kind::kInSet:
      validate_term(f.lhs(), scope, decls);
      return;
    case Kind::kInParam:
      if (!contains_name(decls.parameters, f.name())) {
        throw InputError("undeclared set parameter '" + f.name() + "'");
      }
      validate_term(f.lhs(), scope, decls);
      return;
    case Kind::kEqual:
    case Kind::kLess:
      validate_term(f.lhs(), scope, decls);
      validate_term(f.rhs(), scope, decls);
      return;
    case Kind::kNot:
      validate_formula(f.operand(), scope, decls);
      return;
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      validate_formula(f.left(), scope, decls);
      validate_formula(f.right(), scope, decls);
      return;
    case Kind::kForall:
    case Kind::kExists:
      if (!is_variable_name(f.name())) {
        throw InputError("invalid variable name '" + f.name() + "'");
      }
      if (contains_name(scope, f.name()) ||
          contains_name(decls.free_variables, f.name())) {
        throw InputError("variable '" + f.name() + "' is already bound");
      }
      validate_term(f.bound(), scope, decls);
      scope.push_back(f.name());
      validate_formula(f.operand(), scope, decls);
      scope.pop_back();
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text, const Declarations& decls) {
  return Parser(tokenize(text), decls).parse();
}

void validate(const Formula& formula, const Declarations& decls) {
  std::vector<std::string> scope;
  validate_formula(formula, scope, decls);
}

FormulaSource parse_formula_file(std::string_view text,
                                 const std::vector<std::string>& implicit) {
  FormulaSource source;
  source.free_variables = implicit;
  // Header lines are blanked so formula diagnostics keep file positions.
  std::string body(text);
  for (const internal::SourceLine& line : internal::content_lines(text)) {
    internal::Scanner scanner(line.text, line.number);
    std::string keyword;
    {
      internal::Scanner probe(line.text, line.number);
      try {
        keyword = probe.identifier();
      } catch (const ParseError&) {
      }
    }
    if (keyword == "param") {
      scanner.expect("param");
      const std::string name = scanner.identifier();
      if (!is_parameter_name(name)) {
        scanner.fail("parameter names have the form P0, P1, ...");
      }
      if (source.params.count(name) != 0) {
        scanner.fail("duplicate parameter '" + name + "'");
      }
      scanner.expect("=");
      source.params.emplace(name, scanner.set_literal());
      scanner.expect_end();
    } else if (keyword == "var") {
      scanner.expect("var");
      const std::string name = scanner.identifier();
      if (!is_variable_name(name)) scanner.fail("invalid variable name");
      if (contains_name(source.free_variables, name)) {
        scanner.fail("duplicate variable '" + name + "'");
      }
      source.free_variables.push_back(name);
      scanner.expect_end();
    } else {
      break;
    }
    const std::size_t offset =
        static_cast<std::size_t>(line.text.data() - text.data());
    std::fill(body.begin() + static_cast<std::ptrdiff_t>(offset),
              body.begin() + static_cast<std::ptrdiff_t>(offset +
                                                         line.text.size()),
              ' ');
  }
  source.formula = parse_formula(body, source.declarations());
  return source;
}

}  // namespace maxext
