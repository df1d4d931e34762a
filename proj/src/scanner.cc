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

#include "scanner.h"

#include <cctype>
#include <limits>

#include "maxext/errors.h"

namespace maxext::internal {
namespace {

constexpr Nat kMaxRangeLength = Nat{1} << 24;

}  // namespace

void Scanner::skip_space() {
  while (pos_ < text_.size() &&
         std::isspace(static_cast<unsigned char>(text_[pos_]))) {
    ++pos_;
  }
}

bool Scanner::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

bool Scanner::peek(std::string_view token) {
  skip_space();
  return text_.substr(pos_, token.size()) == token;
}

bool Scanner::consume(std::string_view token) {
  if (!peek(token)) return false;
  pos_ += token.size();
  return true;
}

void Scanner::expect(std::string_view token) {
  if (!consume(token)) fail("expected '" + std::string(token) + "'");
}

Nat Scanner::natural() {
  skip_space();
  if (pos_ >= text_.size() ||
      !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    fail("expected a natural number");
  }
  Nat value = 0;
  while (pos_ < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
    const Nat digit = static_cast<Nat>(text_[pos_] - '0');
    if (value > (std::numeric_limits<Nat>::max() - digit) / 10) {
      fail("number too large");
    }
    value = value * 10 + digit;
    ++pos_;
  }
  return value;
}

std::string Scanner::identifier() {
  skip_space();
  const std::size_t start = pos_;
  if (pos_ < text_.size() &&
      (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
       text_[pos_] == '_')) {
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
  }
  if (start == pos_) fail("expected an identifier");
  return std::string(text_.substr(start, pos_ - start));
}

FinSet Scanner::set_literal() {
  expect("{");
  std::vector<Nat> elements;
  if (!consume("}")) {
    do {
      const Nat lo = natural();
      if (consume("..")) {
        const Nat hi = natural();
        if (hi < lo) fail("empty range");
        if (hi - lo >= kMaxRangeLength) fail("range too long");
        for (Nat x = lo;; ++x) {
          elements.push_back(x);
          if (x == hi) break;
        }
      } else {
        elements.push_back(lo);
      }
    } while (consume(","));
    expect("}");
  }
  const std::size_t count = elements.size();
  FinSet set = FinSet::from_unsorted(std::move(elements));
  if (set.size() != count) fail("duplicate element in set literal");
  return set;
}

void Scanner::expect_end() {
  if (!at_end()) fail("unexpected trailing input");
}

void Scanner::fail(const std::string& message) const {
  throw ParseError(line_, pos_ + 1, message);
}

std::vector<SourceLine> content_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const std::size_t newline = text.find('\n');
    std::string_view line = text.substr(0, newline);
    text = newline == std::string_view::npos ? std::string_view{}
                                             : text.substr(newline + 1);
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) lines.push_back({number, line});
    ++number;
  }
  return lines;
}

}  // namespace maxext::internal
