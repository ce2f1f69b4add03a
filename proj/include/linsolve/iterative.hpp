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
#include <vector>

#include "linsolve/solver.hpp"

namespace linsolve {

struct SweepResult {
  Vector x;
  Vector deltas;  // |x_i' - x_i|
};

/// One Gauss-Seidel sweep (successive displacement): components are updated
/// in index order and each new value is used immediately for the rest of the
/// sweep. Throws ZeroDiagonal, LengthMismatch, NotSquare, NonFiniteIterate.
SweepResult gauss_seidel_sweep(const DenseMatrix& a, std::span<const double> b,
                               std::span<const double> x);

/// One Jacobi sweep (simultaneous displacement): every update reads only the
/// previous iterate. Same errors as gauss_seidel_sweep.
SweepResult jacobi_sweep(const DenseMatrix& a, std::span<const double> b,
                         std::span<const double> x);

struct IterationRecord {
  std::size_t iteration;  // 1-based
  Vector x;
  Vector deltas;  // absolute or relative, per SolverConfig::criterion
  double max_delta;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  SolutionStatus final_status = SolutionStatus::MaxIterations;
  std::size_t iterations_used = 0;
};

struct IterativeResult {
  Solution solution;
  IterationTrace trace;
};

/// Sweeps from `guess` (zero vector when absent) until the convergence
/// measure is below cfg.epsilon for every unknown (Converged), exceeds
/// cfg.divergence_threshold or produces a non-finite iterate (Diverged), or
/// cfg.max_iterations sweeps have run (MaxIterations). A sweep that overflows
/// is not recorded in the trace.
///
/// Throws NotSquare, ZeroDiagonal, LengthMismatch, InvalidConfig, and
/// InvalidArgument for a non-iterative method.
IterativeResult solve_iterative(const LinearSystem& system,
                                const std::optional<Vector>& guess,
                                Method method, const SolverConfig& cfg = {});

/// Row indices whose diagonal magnitude is at or below `pivot_tolerance`.
/// Throws NotSquare.
std::vector<std::size_t> check_diagonal(
    const DenseMatrix& a, double pivot_tolerance = kDefaultPivotTolerance);

enum class Dominance { StrictlyDominant, WeaklyDominant, NotDominant };

std::string_view to_string(Dominance d) noexcept;

struct DominanceReport {
  Dominance classification;
  std::vector<std::size_t> zero_diagonal_indices;  // exact zeros
};

/// Row-wise comparison of |a_ii| against sum_{j != i} |a_ij|.
/// Throws NotSquare.
DominanceReport classify_dominance(const DenseMatrix& a);

}  // namespace linsolve
