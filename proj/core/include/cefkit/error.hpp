// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEFKIT_ERROR_HPP
#define CEFKIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cefkit {

/// A value violates a documented precondition (gain <= 0, efficiency > 1, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input could not be evaluated (empty cascade, unphysical link).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input rejected by the scenario or chain parsers. Line and column are
/// 1-based; column 0 means "whole line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace cefkit

#endif  // CEFKIT_ERROR_HPP
