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

#include <gtest/gtest.h>

#include "linsolve/direct.hpp"
#include "linsolve/iterative.hpp"
#include "support/oracles.hpp"

namespace linsolve {
namespace {

using testing::inf_distance;
using testing::Rng;

const DenseMatrix kExampleA = DenseMatrix::from_rows({{2, 3, -1}, {4, 4, -3}, {-2, 3, -1}});
const Vector kExampleB{5, 3, 1};
const DenseMatrix kDominant = DenseMatrix::from_rows({{4, 1, 1}, {1, 5, 2}, {0, 1, 3}});
const Vector kDominantB{6, 8, 4};  // solution (1, 1, 1)
const DenseMatrix kTwoByTwo = DenseMatrix::from_rows({{4, 1}, {1, 3}});
const Vector kTwoByTwoB{9, 5};  // solution (2, 1)

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return ErrorCode::InvalidArgument;
}

// ---- sweeps -------------------------------------------------------------------

TEST(GaussSeidelSweep, HandEvaluatedTwoByTwo) {
  // x0 = (9 - 0)/4 = 2.25; x1 = (5 - 2.25)/3 = 0.91666...
  const SweepResult r = gauss_seidel_sweep(kTwoByTwo, kTwoByTwoB, Vector{0, 0});
  EXPECT_EQ(r.x[0], 2.25);
  EXPECT_DOUBLE_EQ(r.x[1], 11.0 / 12.0);
  EXPECT_EQ(r.deltas[0], 2.25);
  EXPECT_DOUBLE_EQ(r.deltas[1], 11.0 / 12.0);
}

TEST(GaussSeidelSweep, ExampleSystemFirstSweeps) {
  // 5/2, then (3 - 10)/4, then (1 + 5 + 5.25)/(-1).
  const SweepResult first = gauss_seidel_sweep(kExampleA, kExampleB, Vector{0, 0, 0});
  EXPECT_EQ(first.x, (Vector{2.5, -1.75, -11.25}));
  const SweepResult second = gauss_seidel_sweep(kExampleA, kExampleB, first.x);
  EXPECT_EQ(second.x, (Vector{-0.5, -7.1875, -21.5625}));
}

TEST(GaussSeidelSweep, InputUnmodified) {
  const Vector x{0.5, 0.5};
  (void)gauss_seidel_sweep(kTwoByTwo, kTwoByTwoB, x);
  EXPECT_EQ(x, (Vector{0.5, 0.5}));
}

TEST(JacobiSweep, HandEvaluatedTwoByTwo) {
  // Both components read the old iterate: 9/4 and 5/3.
  const SweepResult r = jacobi_sweep(kTwoByTwo, kTwoByTwoB, Vector{0, 0});
  EXPECT_EQ(r.x[0], 2.25);
  EXPECT_DOUBLE_EQ(r.x[1], 5.0 / 3.0);
}

TEST(JacobiSweep, DiagonalSystemSolvesInOneSweep) {
  const DenseMatrix d = DenseMatrix::from_rows({{2, 0, 0}, {0, -4, 0}, {0, 0, 0.5}});
  const SweepResult r = jacobi_sweep(d, Vector{1, 2, 3}, Vector{17, -3, 8});
  EXPECT_EQ(r.x, (Vector{0.5, -0.5, 6}));
}

TEST(Sweeps, FixedPointOnRandomSystems) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 8);
    const DenseMatrix a = testing::random_dominant(rng, n);
    const Vector b = testing::random_vector(rng, n, -5, 5);
    const Solution exact = solve_gauss_jordan(LinearSystem(a, b));
    ASSERT_EQ(exact.status, SolutionStatus::Exact);
    for (const auto sweep : {gauss_seidel_sweep, jacobi_sweep}) {
      const SweepResult r = sweep(a, b, exact.x);
      EXPECT_LE(inf_distance(r.x, exact.x), 1e-12);
      EXPECT_LE(inf_norm(r.deltas), 1e-12);
    }
  }
}

TEST(Sweeps, MatchesReferenceFormula) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = rng.index(1, 6);
    const DenseMatrix a = testing::random_dominant(rng, n);
    const Vector b = testing::random_vector(rng, n, -5, 5);
    const Vector x = testing::random_vector(rng, n, -5, 5);
    EXPECT_EQ(gauss_seidel_sweep(a, b, x).x, testing::reference_gauss_seidel(a, b, x));
  }
}

TEST(Sweeps, Errors) {
  const DenseMatrix zero_diag = DenseMatrix::from_rows({{0, 1}, {1, 1}});
  EXPECT_EQ(code_of([&] { gauss_seidel_sweep(zero_diag, Vector{1, 1}, Vector{0, 0}); }),
            ErrorCode::ZeroDiagonal);
  EXPECT_EQ(code_of([&] { jacobi_sweep(kTwoByTwo, Vector{1}, Vector{0, 0}); }),
            ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { jacobi_sweep(DenseMatrix(2, 3), Vector{1, 1}, Vector{0, 0}); }),
            ErrorCode::NotSquare);
  const DenseMatrix tiny_diag = DenseMatrix::from_rows({{1e-300, 1e300}, {1e300, 1e-300}});
  EXPECT_EQ(code_of([&] { gauss_seidel_sweep(tiny_diag, Vector{1, 1}, Vector{1, 1}); }),
            ErrorCode::ZeroDiagonal);
  const DenseMatrix explosive = DenseMatrix::from_rows({{1e-10, 1e300}, {1e300, 1e-10}});
  EXPECT_EQ(code_of([&] { gauss_seidel_sweep(explosive, Vector{1, 1}, Vector{1e300, 1}); }),
            ErrorCode::NonFiniteIterate);
}

// ---- solve_iterative ------------------------------------------------------------------

TEST(SolveIterative, TwoByTwoConvergesToDirectSolution) {
  const LinearSystem sys(kTwoByTwo, kTwoByTwoB);
  const Solution direct = solve_gauss_jordan(sys);
  ASSERT_EQ(direct.status, SolutionStatus::Exact);
  EXPECT_NEAR(direct.x[0], 2.0, 1e-14);
  EXPECT_NEAR(direct.x[1], 1.0, 1e-14);

  const IterativeResult r = solve_iterative(sys, std::nullopt, Method::GaussSeidel);
  ASSERT_EQ(r.solution.status, SolutionStatus::Converged);
  EXPECT_LE(inf_distance(r.solution.x, direct.x), 0.01);
}

TEST(SolveIterative, IdentityConvergesOnSecondSweep) {
  const LinearSystem sys(DenseMatrix::identity(3), {4, -2, 7});
  for (const Method m : {Method::GaussSeidel, Method::Jacobi}) {
    const IterativeResult r = solve_iterative(sys, Vector{9, 9, 9}, m);
    EXPECT_EQ(r.solution.status, SolutionStatus::Converged);
    EXPECT_EQ(r.trace.iterations_used, 2u);
    EXPECT_EQ(r.trace.records[0].x, (Vector{4, -2, 7}));
    EXPECT_EQ(r.trace.records[1].max_delta, 0.0);
  }
}

TEST(SolveIterative, ExampleSystemDiverges) {
  const IterativeResult r =
      solve_iterative(LinearSystem(kExampleA, kExampleB), std::nullopt, Method::GaussSeidel);
  EXPECT_EQ(r.solution.status, SolutionStatus::Diverged);
  EXPECT_TRUE(r.solution.x.empty());
  ASSERT_FALSE(r.trace.records.empty());
  EXPECT_EQ(r.trace.records[0].x, (Vector{2.5, -1.75, -11.25}));
  EXPECT_EQ(r.trace.records[1].x, (Vector{-0.5, -7.1875, -21.5625}));
  EXPECT_GT(r.trace.records.back().max_delta, SolverConfig{}.divergence_threshold);
  EXPECT_LE(r.trace.iterations_used, 100u);
}

TEST(SolveIterative, MaxIterationsStatus) {
  SolverConfig cfg;
  cfg.epsilon = 1e-300;
  cfg.max_iterations = 7;
  cfg.divergence_threshold = 10.0;
  // Slow but bounded rotation: measure stays well below the threshold.
  const LinearSystem sys(DenseMatrix::from_rows({{1, 0.99}, {0.99, 1}}), {1, 1});
  const IterativeResult r = solve_iterative(sys, std::nullopt, Method::Jacobi, cfg);
  EXPECT_EQ(r.solution.status, SolutionStatus::MaxIterations);
  EXPECT_EQ(r.trace.iterations_used, 7u);
}

TEST(SolveIterative, NonFiniteIterateIsDivergedNotRecorded) {
  const LinearSystem sys(DenseMatrix::from_rows({{1e-10, 1e300}, {1e300, 1e-10}}), {1, 1});
  SolverConfig cfg;
  cfg.divergence_threshold = 1e308;
  const IterativeResult r = solve_iterative(sys, Vector{1e300, 1}, Method::GaussSeidel, cfg);
  EXPECT_EQ(r.solution.status, SolutionStatus::Diverged);
  EXPECT_EQ(r.trace.iterations_used, r.trace.records.size());
  for (const auto& rec : r.trace.records) {
    for (double v : rec.x) EXPECT_TRUE(std::isfinite(v));
  }
}

TEST(SolveIterative, RelativeCriterion) {
  SolverConfig cfg;
  cfg.criterion = Criterion::RelativeError;
  cfg.epsilon = 1e-10;
  const LinearSystem sys(kDominant, kDominantB);
  const IterativeResult r = solve_iterative(sys, std::nullopt, Method::GaussSeidel, cfg);
  ASSERT_EQ(r.solution.status, SolutionStatus::Converged);
  const auto& rec = r.trace.records[0];
  // Every component moves away from zero, so each relative delta is exactly 1.
  EXPECT_EQ(rec.deltas, (Vector{1, 1, 1}));
  EXPECT_LE(inf_distance(r.solution.x, {1, 1, 1}), 1e-9);
}

TEST(SolveIterative, RelativeCriterionZeroComponentUsesFloor) {
  SolverConfig cfg;
  cfg.criterion = Criterion::RelativeError;
  // x1 is exactly 0 at the solution and after the first sweep.
  const LinearSystem sys(DenseMatrix::from_rows({{2, 0}, {0, 3}}), {4, 0});
  const IterativeResult r = solve_iterative(sys, Vector{0, 0}, Method::Jacobi, cfg);
  EXPECT_EQ(r.trace.records[0].deltas[1], 0.0);
  EXPECT_EQ(r.solution.status, SolutionStatus::Converged);
}

TEST(SolveIterative, Errors) {
  const LinearSystem zero_diag(DenseMatrix::from_rows({{0, 1}, {1, 1}}), {1, 1});
  EXPECT_EQ(code_of([&] { solve_iterative(zero_diag, std::nullopt, Method::GaussSeidel); }),
            ErrorCode::ZeroDiagonal);
  const LinearSystem sys(kTwoByTwo, kTwoByTwoB);
  EXPECT_EQ(code_of([&] { solve_iterative(sys, Vector{1}, Method::GaussSeidel); }),
            ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([&] { solve_iterative(sys, std::nullopt, Method::Cramer); }),
            ErrorCode::InvalidArgument);
  SolverConfig bad;
  bad.epsilon = 0;
  EXPECT_EQ(code_of([&] { solve_iterative(sys, std::nullopt, Method::Jacobi, bad); }),
            ErrorCode::InvalidConfig);
  bad = {};
  bad.max_iterations = 0;
  EXPECT_EQ(code_of([&] { bad.validate(); }), ErrorCode::InvalidConfig);
  bad = {};
  bad.divergence_threshold = bad.epsilon;
  EXPECT_EQ(code_of([&] { bad.validate(); }), ErrorCode::InvalidConfig);
  bad = {};
  bad.singular_tolerance = -1;
  EXPECT_EQ(code_of([&] { bad.validate(); }), ErrorCode::InvalidConfig);
}

TEST(SolveIterative, TraceReplayAndStatusSoundness) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = rng.index(1, 6);
    // Half dominant (converging), half arbitrary (often diverging).
    const DenseMatrix a = trial % 2 == 0 ? testing::random_dominant(rng, n)
                                         : testing::random_matrix(rng, n, n, 0.5, 3);
    const Vector b = testing::random_vector(rng, n, -5, 5);
    SolverConfig cfg;
    cfg.epsilon = 1e-6;
    cfg.max_iterations = 200;
    const IterativeResult r = solve_iterative(LinearSystem(a, b), std::nullopt,
                                              Method::GaussSeidel, cfg);
    const IterationTrace& t = r.trace;
    ASSERT_EQ(t.records.size(), t.iterations_used);
    EXPECT_EQ(t.final_status, r.solution.status);

    Vector x(n, 0.0);
    for (std::size_t k = 0; k < t.records.size(); ++k) {
      const auto& rec = t.records[k];
      const SweepResult s = gauss_seidel_sweep(a, b, x);
      EXPECT_EQ(rec.iteration, k + 1);
      EXPECT_EQ(rec.x, s.x);
      EXPECT_EQ(rec.deltas, s.deltas);
      EXPECT_EQ(rec.max_delta, inf_norm(rec.deltas));
      x = s.x;
    }
    switch (t.final_status) {
      case SolutionStatus::Converged:
        EXPECT_LT(t.records.back().max_delta, cfg.epsilon);
        EXPECT_EQ(r.solution.x, t.records.back().x);
        break;
      case SolutionStatus::Diverged:
        EXPECT_TRUE(t.records.back().max_delta > cfg.divergence_threshold ||
                    t.records.size() < cfg.max_iterations);
        break;
      case SolutionStatus::MaxIterations:
        EXPECT_EQ(t.iterations_used, cfg.max_iterations);
        break;
      default:
        ADD_FAILURE() << "unexpected status";
    }
  }
}

TEST(SolveIterative, ConvergesUnderStrictDominance) {
  Rng rng(2024);
  SolverConfig cfg;
  cfg.epsilon = 1e-8;
  cfg.max_iterations = 10000;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = rng.index(1, 10);
    const DenseMatrix a = testing::random_dominant(rng, n);
    const LinearSystem sys(a, testing::random_vector(rng, n, -5, 5));
    ASSERT_EQ(classify_dominance(a).classification, Dominance::StrictlyDominant);
    const IterativeResult r = solve_iterative(sys, std::nullopt, Method::GaussSeidel, cfg);
    ASSERT_EQ(r.solution.status, SolutionStatus::Converged);
    EXPECT_LE(inf_distance(r.solution.x, solve_gauss_jordan(sys).x), 1e-6);
  }
}

TEST(SolveIterative, GaussSeidelNoSlowerThanJacobiOnDominantInstance) {
  SolverConfig cfg;
  cfg.epsilon = 1e-8;
  const LinearSystem sys(kDominant, kDominantB);
  const auto gs = solve_iterative(sys, std::nullopt, Method::GaussSeidel, cfg);
  const auto jac = solve_iterative(sys, std::nullopt, Method::Jacobi, cfg);
  ASSERT_EQ(gs.solution.status, SolutionStatus::Converged);
  ASSERT_EQ(jac.solution.status, SolutionStatus::Converged);
  EXPECT_LE(gs.trace.iterations_used, jac.trace.iterations_used);
}

// ---- diagnostics -----------------------------------------------------------------------

TEST(CheckDiagonal, Examples) {
  EXPECT_TRUE(check_diagonal(DenseMatrix::identity(3)).empty());
  EXPECT_EQ(check_diagonal(DenseMatrix::from_rows({{0, 1}, {1, 1}})),
            (std::vector<std::size_t>{0}));
  EXPECT_TRUE(check_diagonal(kExampleA).empty());
  EXPECT_THROW(check_diagonal(DenseMatrix(2, 3)), Error);
}

TEST(ClassifyDominance, Examples) {
  EXPECT_EQ(classify_dominance(kDominant).classification, Dominance::StrictlyDominant);
  EXPECT_EQ(classify_dominance(DenseMatrix::from_rows({{2, 2}, {1, 3}})).classification,
            Dominance::WeaklyDominant);
  // Row 0: |2| < |3| + |-1|.
  EXPECT_EQ(classify_dominance(kExampleA).classification, Dominance::NotDominant);
  const DominanceReport r = classify_dominance(DenseMatrix::from_rows({{0, 0}, {0, 5}}));
  EXPECT_EQ(r.classification, Dominance::WeaklyDominant);
  EXPECT_EQ(r.zero_diagonal_indices, (std::vector<std::size_t>{0}));
}

TEST(ClassifyDominance, InvariantUnderPositiveRowScaling) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.index(1, 6);
    // Small integers keep row sums exact, so equality rows stay equal.
    std::vector<double> e(n * n);
    for (double& v : e) v = rng.integer(-4, 4);
    if (trial % 2 == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        double off = 0;
        for (std::size_t j = 0; j < n; ++j) off += j == i ? 0 : std::abs(e[i * n + j]);
        e[i * n + i] = off + rng.integer(0, 1);
      }
    }
    const DenseMatrix a(n, n, e);
    const Dominance before = classify_dominance(a).classification;
    const std::size_t row = rng.index(0, n - 1);
    const double scale = std::ldexp(1.0, rng.integer(-20, 20));
    EXPECT_EQ(classify_dominance(apply_row_op(a, Scale{row, scale})).classification, before);
  }
}

}  // namespace
}  // namespace linsolve
