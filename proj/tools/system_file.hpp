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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capi.hpp"

namespace linsolve::cli {

/// A linear system read from a `.sys` file:
///
///     # comment
///     A: 2, 3, -1 ; 4, 4, -3 ; -2, 3, -1
///     b: 5; 3; 1
///     guess: 0; 0; 0
///
/// Labels may appear in any order; each at most once. `guess` is optional.
struct SystemFile {
  MatrixHandle a;
  std::vector<double> b;
  std::optional<std::vector<double>> guess;

  std::size_t rows() const { return ls_matrix_rows(a.get()); }
  std::size_t cols() const { return ls_matrix_cols(a.get()); }
};

/// Throws CliError (exit code 4) on malformed content.
SystemFile parse_system(std::string_view text);
SystemFile load_system(const std::string& path);

/// "v1;v2;..." as used by the b and guess lines and the --guess flag.
std::vector<double> parse_vector(const std::string& text, const std::string& context);

}  // namespace linsolve::cli
