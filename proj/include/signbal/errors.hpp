// Copyright 2026 The signbal Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace signbal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input line. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally invalid input, e.g. a non-square matrix.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Unknown node id or index.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Operation called outside its precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A ratio over an empty set was requested.
class UndefinedResultError : public Error {
 public:
  using Error::Error;
};

/// Input too large for the requested operation.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace signbal
