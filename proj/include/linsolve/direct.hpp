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
#include <vector>

#include "linsolve/solver.hpp"

namespace linsolve {

struct RrefResult {
  AugmentedMatrix rref;
  std::vector<RowOp> ops;  // in application order
  std::size_t rank_a = 0;
  std::size_t rank_augmented = 0;
};

/// Cramer's rule: x_i = det(A_i) / det(A), A_i being A with column i replaced
/// by b. Returns status Singular when |det(A)| <= cfg.singular_tolerance.
/// Throws NotSquare.
Solution solve_cramer(const LinearSystem& system, const SolverConfig& cfg = {});

/// Gauss-Jordan reduction to the unique reduced row-echelon form.
///
/// Zero rows are first moved to the bottom by row interchanges. Columns are
/// then processed left to right: the candidate with the largest magnitude
/// (lowest row on ties) is swapped up and used to clear the entries below it.
/// Finally each pivot row is scaled to a leading 1 and the entries above it
/// are cleared. Operations that would leave the matrix unchanged are not
/// performed or logged, so an input already in RREF yields an empty log.
///
/// Entries at or below cfg.pivot_tolerance are flushed to exact zero (see
/// apply_row_op); replaying `ops` with replay_row_ops reproduces `rref`
/// bit for bit.
RrefResult to_reduced_row_echelon(const AugmentedMatrix& aug,
                                  const SolverConfig& cfg = {});

/// Folds `ops` over `m` exactly as to_reduced_row_echelon applies them
/// (initial flush plus per-operation cleanup at `cleanup_tolerance`).
DenseMatrix replay_row_ops(const DenseMatrix& m, const std::vector<RowOp>& ops,
                           double cleanup_tolerance);

/// Reads the solution out of the RREF of [A | b]. Non-square systems are
/// allowed; rank deficiency is reported as Inconsistent or Underdetermined.
Solution solve_gauss_jordan(const LinearSystem& system,
                            const SolverConfig& cfg = {});

}  // namespace linsolve
