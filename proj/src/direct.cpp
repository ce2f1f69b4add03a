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

#include "linsolve/direct.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "row_ops.hpp"
#include "scaled_determinant.hpp"

namespace linsolve {

struct RrefAccess {
  static AugmentedMatrix wrap(DenseMatrix body) {
    return AugmentedMatrix(std::move(body));
  }
};

namespace {

// Works on a raw buffer; each step goes through the same kernel as
// apply_row_op so replaying the log is bit-identical.
class Reducer {
 public:
  Reducer(const DenseMatrix& start, double tol)
      : rows_(start.rows()), cols_(start.cols()), tol_(tol) {
    const DenseMatrix flushed = flush_small_entries(start, tol);
    e_.assign(flushed.entries().begin(), flushed.entries().end());
  }

  void apply(const RowOp& op) {
    detail::apply_row_op_in_place(e_, rows_, cols_, op, tol_);
    ops_.push_back(op);
  }

  double at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j) != 0.0) return false;
    }
    return true;
  }

  // Zero rows to the bottom: each zero row trades places with the lowest
  // nonzero row beneath it.
  void sink_zero_rows() {
    std::size_t limit = rows_;
    for (std::size_t i = 0; i < limit; ++i) {
      if (!is_zero_row(i)) continue;
      std::size_t j = limit;
      while (j > i + 1 && is_zero_row(j - 1)) --j;
      if (j == i + 1) break;  // nothing nonzero below
      apply(Swap{i, j - 1});
      limit = j - 1;
    }
  }

  // Row-echelon form with partial pivoting; returns the pivot columns.
  std::vector<std::size_t> forward() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t best_row = r;
      double best = std::abs(at(r, c));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const double cand = std::abs(at(i, c));
        if (cand > best) {  // strict: lowest row wins ties
          best = cand;
          best_row = i;
        }
      }
      if (best <= tol_) continue;
      if (best_row != r) apply(Swap{r, best_row});
      const double pivot = at(r, c);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const double v = at(i, c);
        if (v != 0.0) apply(AddScaled{i, r, -v / pivot});
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  // Leading ones and zeros above each pivot, bottom pivot first.
  void backward(const std::vector<std::size_t>& pivots) {
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t c = pivots[r];
      const double pivot = at(r, c);
      if (pivot != 1.0) apply(Scale{r, 1.0 / pivot});
      for (std::size_t i = 0; i < r; ++i) {
        const double v = at(i, c);
        if (v != 0.0) apply(AddScaled{i, r, -v});
      }
    }
  }

  // Validates finiteness on the way out.
  DenseMatrix take_matrix() { return DenseMatrix(rows_, cols_, std::move(e_)); }
  std::vector<RowOp> take_ops() { return std::move(ops_); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> e_;
  double tol_;
  std::vector<RowOp> ops_;
};

}  // namespace

Solution solve_cramer(const LinearSystem& system, const SolverConfig& cfg) {
  cfg.validate();
  const DenseMatrix& a = system.a();
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, "Cramer's rule requires a square system");
  }
  const auto det = detail::scaled_determinant(a, cfg.pivot_tolerance);
  const bool singular =
      det.is_zero() || (std::abs(det.mantissa) * std::exp2(static_cast<double>(det.exponent)) <=
                        cfg.singular_tolerance);
  if (singular) return {{}, Method::Cramer, SolutionStatus::Singular};

  const std::size_t n = a.cols();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto det_i =
        detail::scaled_determinant(replace_column(a, i, system.b()), cfg.pivot_tolerance);
    x[i] = detail::ratio(det_i, det);
  }
  if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::NonFiniteEntry, "Cramer quotient overflows double precision");
  }
  return {std::move(x), Method::Cramer, SolutionStatus::Exact};
}

RrefResult to_reduced_row_echelon(const AugmentedMatrix& aug, const SolverConfig& cfg) {
  cfg.validate();
  Reducer reducer(aug.body(), cfg.pivot_tolerance);
  reducer.sink_zero_rows();
  const auto pivots = reducer.forward();
  reducer.backward(pivots);

  const std::size_t n = aug.unknowns();
  std::size_t rank_a = 0;
  for (std::size_t c : pivots) rank_a += c < n ? 1 : 0;

  return {RrefAccess::wrap(reducer.take_matrix()), reducer.take_ops(), rank_a,
          pivots.size()};
}

DenseMatrix replay_row_ops(const DenseMatrix& m, const std::vector<RowOp>& ops,
                           double cleanup_tolerance) {
  DenseMatrix out = flush_small_entries(m, cleanup_tolerance);
  for (const RowOp& op : ops) out = apply_row_op(out, op, cleanup_tolerance);
  return out;
}

Solution solve_gauss_jordan(const LinearSystem& system, const SolverConfig& cfg) {
  const RrefResult r = to_reduced_row_echelon(AugmentedMatrix(system), cfg);
  const std::size_t n = system.unknowns();
  if (r.rank_augmented > r.rank_a) {
    return {{}, Method::GaussJordan, SolutionStatus::Inconsistent};
  }
  if (r.rank_a < n) {
    return {{}, Method::GaussJordan, SolutionStatus::Underdetermined};
  }
  // Full column rank: pivot i sits at (i, i).
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r.rref.body()(i, n);
  return {std::move(x), Method::GaussJordan, SolutionStatus::Exact};
}

}  // namespace linsolve
