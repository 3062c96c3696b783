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

#ifndef MATROIDS_ERRORS_H_
#define MATROIDS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matroids {

// Domain errors: the input is well-formed but not a valid object, or a
// configured resource cap was exceeded.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCopoints : DomainError {
  using DomainError::DomainError;
};
struct NotSimple : DomainError {
  using DomainError::DomainError;
};
struct RankOutOfRange : DomainError {
  using DomainError::DomainError;
};
struct EnumerationCapExceeded : DomainError {
  using DomainError::DomainError;
};
struct InvalidClutter : DomainError {
  using DomainError::DomainError;
};
struct ExactCapExceeded : DomainError {
  using DomainError::DomainError;
};
struct SubsetCapExceeded : DomainError {
  using DomainError::DomainError;
};
struct RankMismatch : DomainError {
  using DomainError::DomainError;
};
struct PropertyBetaRequired : DomainError {
  using DomainError::DomainError;
};
struct NoColineContained : DomainError {
  using DomainError::DomainError;
};

// Input-text errors (CLI exit code 2).
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

struct ElementOutOfRange : ParseError {
  using ParseError::ParseError;
};
struct CompactTokenWithLargeN : ParseError {
  using ParseError::ParseError;
};

}  // namespace matroids

#endif  // MATROIDS_ERRORS_H_
