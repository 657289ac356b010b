// Copyright 2026 The LINE Embedding Authors.
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

#ifndef LINE_ERRORS_H_
#define LINE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace line {

// Caller violated an operation's contract (wrong order, unknown id, bad flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. line_number is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line_number)
      : std::runtime_error(line_number == 0
                               ? what
                               : "line " + std::to_string(line_number) + ": " +
                                     what),
        line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

// Well-formed input whose values are outside the model's domain
// (non-positive weights, self-loops, empty graphs, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The request is well-formed but the method has no answer for it.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace line

#endif  // LINE_ERRORS_H_
