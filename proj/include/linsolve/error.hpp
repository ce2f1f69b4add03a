// Copyright 2026 The linsolve Authors
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
#include <string_view>

namespace linsolve {

enum class ErrorCode {
  EmptyInput,
  RaggedRows,
  BadNumber,
  NonFiniteEntry,
  NotSquare,
  IndexOutOfRange,
  LengthMismatch,
  ZeroScaleFactor,
  Singular,
  ZeroDiagonal,
  NonFiniteIterate,
  InvalidConfig,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the matrix-string parser. Row and column are zero-based and point
/// at the offending entry (column is 0 for row-level failures).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t row,
             std::size_t column)
      : Error(code, message), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace linsolve
