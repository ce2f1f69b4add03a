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

// Thin RAII layer over the C interface. The CLI talks to the library only
// through linsolve.h.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "linsolve/linsolve.h"

namespace linsolve::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitSolved = 0,
  kExitIterationFailed = 2,
  kExitNoUniqueSolution = 3,
  kExitUsage = 4,
};

/// Raised for anything that should end a command with a one-line diagnostic.
class CliError : public std::runtime_error {
 public:
  explicit CliError(const std::string& message, int exit_code = kExitUsage)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct MatrixDeleter {
  void operator()(ls_matrix* m) const noexcept { ls_matrix_free(m); }
};
struct TraceDeleter {
  void operator()(ls_trace* t) const noexcept { ls_trace_free(t); }
};

using MatrixHandle = std::unique_ptr<ls_matrix, MatrixDeleter>;
using TraceHandle = std::unique_ptr<ls_trace, TraceDeleter>;

/// Throws CliError carrying the library's last error message.
inline void check(ls_error err, const std::string& context) {
  if (err == LS_OK) return;
  std::string msg = context + ": ";
  const std::string detail = ls_last_error_message();
  msg += detail.empty() ? ls_error_name(err) : detail;
  throw CliError(msg);
}

inline MatrixHandle parse_matrix(const std::string& text, const std::string& context) {
  ls_matrix* raw = nullptr;
  check(ls_matrix_parse(text.c_str(), &raw), context);
  return MatrixHandle(raw);
}

inline MatrixHandle create_matrix(std::size_t rows, std::size_t cols,
                                  const std::vector<double>& entries) {
  ls_matrix* raw = nullptr;
  check(ls_matrix_create(rows, cols, entries.data(), &raw), "matrix");
  return MatrixHandle(raw);
}

inline std::string format_double(double v) {
  char buf[64];
  check(ls_format_double(v, buf, sizeof buf, nullptr), "format");
  return buf;
}

inline std::string format_vector(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace linsolve::cli
