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

#include "linsolve/iterative.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace linsolve {

namespace {

constexpr double kRelativeFloor = 1e-30;

void require_square(const DenseMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, std::string(what) + " requires a square matrix");
  }
}

void require_nonzero_diagonal(const DenseMatrix& a) {
  const auto zeros = check_diagonal(a);
  if (!zeros.empty()) {
    std::ostringstream msg;
    msg << "zero diagonal entry in row " << zeros.front()
        << "; no solution without pivoting";
    throw Error(ErrorCode::ZeroDiagonal, msg.str());
  }
}

void require_length(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    std::ostringstream msg;
    msg << what << " has " << v.size() << " entries, expected " << n;
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
}

void validate_sweep_inputs(const DenseMatrix& a, std::span<const double> b,
                           std::span<const double> x) {
  require_square(a, "a sweep");
  require_length(b, a.rows(), "right-hand side");
  require_length(x, a.rows(), "iterate");
  require_finite(b, "right-hand side");
  require_finite(x, "iterate");
  require_nonzero_diagonal(a);
}

// Unchecked kernels. `next` may alias nothing; Gauss-Seidel reads its own
// partially updated output, Jacobi reads only `prev`.
void gauss_seidel_into(const DenseMatrix& a, std::span<const double> b,
                       std::span<const double> prev, Vector& next) {
  const std::size_t n = a.rows();
  next.assign(prev.begin(), prev.end());
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s += a(i, j) * next[j];
    }
    next[i] = (b[i] - s) / a(i, i);
  }
}

void jacobi_into(const DenseMatrix& a, std::span<const double> b,
                 std::span<const double> prev, Vector& next) {
  const std::size_t n = a.rows();
  next.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s += a(i, j) * prev[j];
    }
    next[i] = (b[i] - s) / a(i, i);
  }
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double e) { return std::isfinite(e); });
}

Vector absolute_deltas(std::span<const double> prev, std::span<const double> next) {
  Vector d(next.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::abs(next[i] - prev[i]);
  return d;
}

template <class Kernel>
SweepResult checked_sweep(const DenseMatrix& a, std::span<const double> b,
                          std::span<const double> x, Kernel kernel) {
  validate_sweep_inputs(a, b, x);
  Vector next;
  kernel(a, b, x, next);
  if (!all_finite(next)) {
    throw Error(ErrorCode::NonFiniteIterate, "sweep produced a non-finite iterate");
  }
  Vector deltas = absolute_deltas(x, next);
  return {std::move(next), std::move(deltas)};
}

}  // namespace

SweepResult gauss_seidel_sweep(const DenseMatrix& a, std::span<const double> b,
                               std::span<const double> x) {
  return checked_sweep(a, b, x, gauss_seidel_into);
}

SweepResult jacobi_sweep(const DenseMatrix& a, std::span<const double> b,
                         std::span<const double> x) {
  return checked_sweep(a, b, x, jacobi_into);
}

IterativeResult solve_iterative(const LinearSystem& system,
                                const std::optional<Vector>& guess, Method method,
                                const SolverConfig& cfg) {
  cfg.validate();
  if (method != Method::GaussSeidel && method != Method::Jacobi) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(method)) + " is not an iterative method");
  }
  const DenseMatrix& a = system.a();
  require_square(a, "an iterative solve");
  const std::size_t n = a.rows();
  Vector x = guess.value_or(Vector(n, 0.0));
  validate_sweep_inputs(a, system.b(), x);

  const auto kernel = method == Method::GaussSeidel ? gauss_seidel_into : jacobi_into;
  IterativeResult result{{{}, method, SolutionStatus::MaxIterations}, {}};
  IterationTrace& trace = result.trace;
  Vector next;

  for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
    kernel(a, system.b(), x, next);
    if (!all_finite(next)) {
      trace.final_status = SolutionStatus::Diverged;
      break;
    }
    Vector deltas = absolute_deltas(x, next);
    if (cfg.criterion == Criterion::RelativeError) {
      for (std::size_t i = 0; i < n; ++i) {
        deltas[i] /= std::max(std::abs(next[i]), kRelativeFloor);
      }
    }
    const double measure = inf_norm(deltas);
    x.swap(next);
    trace.records.push_back({k, x, std::move(deltas), measure});

    if (measure < cfg.epsilon) {
      trace.final_status = SolutionStatus::Converged;
      break;
    }
    if (measure > cfg.divergence_threshold || !std::isfinite(measure)) {
      trace.final_status = SolutionStatus::Diverged;
      break;
    }
  }

  trace.iterations_used = trace.records.size();
  result.solution.status = trace.final_status;
  if (trace.final_status == SolutionStatus::Converged) result.solution.x = x;
  return result;
}

std::vector<std::size_t> check_diagonal(const DenseMatrix& a, double pivot_tolerance) {
  require_square(a, "a diagonal check");
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (std::abs(a(i, i)) <= pivot_tolerance) zeros.push_back(i);
  }
  return zeros;
}

DominanceReport classify_dominance(const DenseMatrix& a) {
  require_square(a, "dominance classification");
  DominanceReport report{Dominance::StrictlyDominant, {}};
  bool any_equal = false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double diag = std::abs(a(i, i));
    if (a(i, i) == 0.0) report.zero_diagonal_indices.push_back(i);
    double off = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != i) off += std::abs(a(i, j));
    }
    if (diag < off) {
      report.classification = Dominance::NotDominant;
    } else if (diag == off) {
      any_equal = true;
    }
  }
  if (report.classification != Dominance::NotDominant && any_equal) {
    report.classification = Dominance::WeaklyDominant;
  }
  return report;
}

}  // namespace linsolve
