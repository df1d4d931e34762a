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

// Line-oriented scanning shared by the plain-text file formats.

#ifndef MAXEXT_SRC_SCANNER_H_
#define MAXEXT_SRC_SCANNER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "maxext/finset.h"

namespace maxext::internal {

class Scanner {
 public:
  explicit Scanner(std::string_view text, std::size_t line = 1)
      : text_(text), line_(line) {}

  void skip_space();
  // True once only whitespace remains.
  bool at_end();
  bool peek(std::string_view token);
  bool consume(std::string_view token);
  void expect(std::string_view token);
  Nat natural();
  // [A-Za-z_][A-Za-z0-9_]*
  std::string identifier();
  FinSet set_literal();
  // Throws ParseError unless only whitespace remains.
  void expect_end();

  [[noreturn]] void fail(const std::string& message) const;

  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct SourceLine {
  std::size_t number;
  std::string_view text;
};

// Splits into lines, drops `#` comments, and skips blank lines.
std::vector<SourceLine> content_lines(std::string_view text);

}  // namespace maxext::internal

#endif  // MAXEXT_SRC_SCANNER_H_
