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
#include <string_view>
#include <utility>

#include "linsolve/matrix.hpp"

namespace linsolve {

enum class Method { Cramer, GaussJordan, GaussSeidel, Jacobi };

enum class SolutionStatus {
  Exact,
  Converged,
  Diverged,
  MaxIterations,
  Singular,
  Inconsistent,
  Underdetermined,
};

enum class Criterion {
  AbsoluteDelta,  // max_i |x_i' - x_i|
  RelativeError,  // max_i |x_i' - x_i| / max(|x_i'|, 1e-30)
};

std::string_view to_string(Method method) noexcept;
/// Lower-case, hyphenated: "exact", "max-iterations", ...
std::string_view to_string(SolutionStatus status) noexcept;
std::string_view to_string(Criterion criterion) noexcept;

/// True for Exact and Converged, the only statuses that carry a solution.
constexpr bool has_solution(SolutionStatus s) noexcept {
  return s == SolutionStatus::Exact || s == SolutionStatus::Converged;
}

struct SolverConfig {
  double epsilon = 0.01;
  std::size_t max_iterations = 1000;
  Criterion criterion = Criterion::AbsoluteDelta;
  double divergence_threshold = 1e12;
  double pivot_tolerance = kDefaultPivotTolerance;
  double singular_tolerance = 1e-12;

  /// Throws InvalidConfig unless epsilon > 0, max_iterations >= 1,
  /// divergence_threshold > epsilon and both tolerances > 0.
  void validate() const;
};

/// A coefficient matrix paired with its right-hand side; b.size() == A.rows().
class LinearSystem {
 public:
  LinearSystem(DenseMatrix a, Vector b);

  const DenseMatrix& a() const noexcept { return a_; }
  const Vector& b() const noexcept { return b_; }
  std::size_t equations() const noexcept { return a_.rows(); }
  std::size_t unknowns() const noexcept { return a_.cols(); }

 private:
  DenseMatrix a_;
  Vector b_;
};

/// [A | b], m × (n + 1).
class AugmentedMatrix {
 public:
  explicit AugmentedMatrix(const LinearSystem& system);

  const DenseMatrix& body() const noexcept { return body_; }
  std::size_t unknowns() const noexcept { return body_.cols() - 1; }

  friend bool operator==(const AugmentedMatrix&,
                         const AugmentedMatrix&) = default;

 private:
  friend struct RrefAccess;
  explicit AugmentedMatrix(DenseMatrix body) : body_(std::move(body)) {}
  DenseMatrix body_;
};

struct Solution {
  Vector x;  // empty unless has_solution(status)
  Method method;
  SolutionStatus status;
};

}  // namespace linsolve
