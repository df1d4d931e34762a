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

#ifndef MAXEXT_ERRORS_H_
#define MAXEXT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxext {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition. The CLI maps these to exit 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// A value does not fit the fixed-width index representation.
class RangeError : public InputError {
 public:
  using InputError::InputError;
};

// Syntax error in one of the text formats, with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError(std::to_string(line) + ":" + std::to_string(column) +
                   ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An operation's documented precondition does not hold.
class PreconditionError : public InputError {
 public:
  enum class Kind {
    kStartNotWithin,
    kStartNotClosed,
    kStartFailsProperty,
    kNotAnIdeal,
    kNotFiniteCharacter,
    kOther,
  };

  PreconditionError(Kind kind, const std::string& message)
      : InputError(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An enumeration cap, search cap, or node limit was exhausted before the
// answer was decided. The CLI maps these to exit 2.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxext

#endif  // MAXEXT_ERRORS_H_
