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

#include "linsolve/solver.hpp"

#include <cmath>
#include <sstream>

#include "linsolve/iterative.hpp"

namespace linsolve {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Cramer: return "cramer";
    case Method::GaussJordan: return "gauss-jordan";
    case Method::GaussSeidel: return "gauss-seidel";
    case Method::Jacobi: return "jacobi";
  }
  return "unknown";
}

std::string_view to_string(SolutionStatus status) noexcept {
  switch (status) {
    case SolutionStatus::Exact: return "exact";
    case SolutionStatus::Converged: return "converged";
    case SolutionStatus::Diverged: return "diverged";
    case SolutionStatus::MaxIterations: return "max-iterations";
    case SolutionStatus::Singular: return "singular";
    case SolutionStatus::Inconsistent: return "inconsistent";
    case SolutionStatus::Underdetermined: return "underdetermined";
  }
  return "unknown";
}

std::string_view to_string(Criterion criterion) noexcept {
  switch (criterion) {
    case Criterion::AbsoluteDelta: return "abs";
    case Criterion::RelativeError: return "rel";
  }
  return "unknown";
}

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::StrictlyDominant: return "strictly-dominant";
    case Dominance::WeaklyDominant: return "weakly-dominant";
    case Dominance::NotDominant: return "not-dominant";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  const char* problem = nullptr;
  if (!positive(epsilon)) {
    problem = "epsilon must be positive";
  } else if (max_iterations < 1) {
    problem = "max_iterations must be at least 1";
  } else if (!(divergence_threshold > epsilon)) {
    problem = "divergence_threshold must exceed epsilon";
  } else if (!positive(pivot_tolerance)) {
    problem = "pivot_tolerance must be positive";
  } else if (!positive(singular_tolerance)) {
    problem = "singular_tolerance must be positive";
  }
  if (problem != nullptr) throw Error(ErrorCode::InvalidConfig, problem);
}

LinearSystem::LinearSystem(DenseMatrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_.size() != a_.rows()) {
    std::ostringstream msg;
    msg << "right-hand side has " << b_.size() << " entries but the matrix has "
        << a_.rows() << " rows";
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
  require_finite(b_, "right-hand side");
}

namespace {

DenseMatrix augment(const LinearSystem& s) {
  const std::size_t m = s.equations();
  const std::size_t n = s.unknowns();
  std::vector<double> e;
  e.reserve(m * (n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = s.a().row(i);
    e.insert(e.end(), row.begin(), row.end());
    e.push_back(s.b()[i]);
  }
  return DenseMatrix(m, n + 1, std::move(e));
}

}  // namespace

AugmentedMatrix::AugmentedMatrix(const LinearSystem& system) : body_(augment(system)) {}

}  // namespace linsolve
