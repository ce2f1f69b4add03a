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
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "linsolve/linsolve.h"

namespace linsolve::cli {

struct SolveOptions {
  std::string input;
  ls_method method = LS_METHOD_GAUSS_JORDAN;
  ls_config config{};  // filled by ls_config_default
  std::optional<std::vector<double>> guess;
  std::optional<std::string> trace_path;
};

struct CompareOptions {
  std::string input;
  ls_config config{};
  std::optional<std::vector<double>> guess;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 42;
  std::size_t repeats = 3;
};

/// One row of the bench table.
struct BenchRow {
  std::size_t n;
  ls_method method;
  double milliseconds;  // best of `repeats`
  ls_status status;
  std::size_t iterations;  // 0 for direct methods
};

/// Strictly diagonally dominant n×n system, reproducible from `seed`:
/// off-diagonals uniform in [-1, 1], a_ii = sum_{j != i} |a_ij| + 1 + U[0, 1],
/// b = A · x with x uniform in [-1, 1]. Row-major A, then b.
struct GeneratedSystem {
  std::size_t n;
  std::vector<double> a;
  std::vector<double> b;
};
GeneratedSystem generate_dominant_system(std::size_t n, std::uint64_t seed);

std::vector<BenchRow> run_benchmark(const BenchOptions& options);

/// "10,50,100" → {10, 50, 100}; throws CliError for empty, zero or junk.
std::vector<std::size_t> parse_sizes(const std::string& text);

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] included) → exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linsolve::cli
