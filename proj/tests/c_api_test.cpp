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

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "linsolve/linsolve.h"

namespace {

struct MatrixDeleter {
  void operator()(ls_matrix* m) const { ls_matrix_free(m); }
};
using Matrix = std::unique_ptr<ls_matrix, MatrixDeleter>;

Matrix parse(const char* text) {
  ls_matrix* m = nullptr;
  EXPECT_EQ(ls_matrix_parse(text, &m), LS_OK) << ls_last_error_message();
  return Matrix(m);
}

std::string format(const ls_matrix* m) {
  size_t needed = 0;
  EXPECT_EQ(ls_matrix_format(m, nullptr, 0, &needed), LS_ERR_BUFFER_TOO_SMALL);
  std::string s(needed + 1, '\0');
  EXPECT_EQ(ls_matrix_format(m, s.data(), s.size(), &needed), LS_OK);
  s.resize(needed);
  return s;
}

const double kB[] = {5, 3, 1};

TEST(CApi, VersionAndNames) {
  EXPECT_STRNE(ls_version(), "");
  EXPECT_STREQ(ls_status_name(LS_STATUS_EXACT), "exact");
  EXPECT_STREQ(ls_status_name(LS_STATUS_MAX_ITERATIONS), "max-iterations");
  EXPECT_STREQ(ls_method_name(LS_METHOD_GAUSS_SEIDEL), "gauss-seidel");
  EXPECT_STREQ(ls_dominance_name(LS_DOMINANCE_STRICT), "strictly-dominant");
  EXPECT_STREQ(ls_error_name(LS_ERR_BUFFER_TOO_SMALL), "buffer too small");
}

TEST(CApi, DefaultConfig) {
  ls_config cfg;
  ls_config_default(&cfg);
  EXPECT_EQ(cfg.epsilon, 0.01);
  EXPECT_EQ(cfg.max_iterations, 1000u);
  EXPECT_EQ(cfg.criterion, LS_CRITERION_ABSOLUTE_DELTA);
  EXPECT_EQ(cfg.divergence_threshold, 1e12);
  EXPECT_EQ(cfg.pivot_tolerance, 1e-12);
  EXPECT_EQ(cfg.singular_tolerance, 1e-12);
}

TEST(CApi, ParseFormatRoundTrip) {
  const Matrix m = parse(" 2, 3, -1 ; 4, 4, -3 ; -2, 3, -1 ");
  EXPECT_EQ(ls_matrix_rows(m.get()), 3u);
  EXPECT_EQ(ls_matrix_cols(m.get()), 3u);
  double v = 0;
  EXPECT_EQ(ls_matrix_get(m.get(), 1, 2, &v), LS_OK);
  EXPECT_EQ(v, -3);
  EXPECT_EQ(ls_matrix_get(m.get(), 3, 0, &v), LS_ERR_INDEX_OUT_OF_RANGE);
  EXPECT_EQ(format(m.get()), "2,3,-1;4,4,-3;-2,3,-1");
  std::vector<double> e(9);
  EXPECT_EQ(ls_matrix_entries(m.get(), e.data(), 8), LS_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(ls_matrix_entries(m.get(), e.data(), e.size()), LS_OK);
  EXPECT_EQ(e, (std::vector<double>{2, 3, -1, 4, 4, -3, -2, 3, -1}));
}

TEST(CApi, ParseErrorsSetMessage) {
  ls_matrix* m = nullptr;
  EXPECT_EQ(ls_matrix_parse("1,2;3", &m), LS_ERR_RAGGED_ROWS);
  EXPECT_EQ(m, nullptr);
  EXPECT_STRNE(ls_last_error_message(), "");
  EXPECT_EQ(ls_matrix_parse("1,x", &m), LS_ERR_BAD_NUMBER);
  EXPECT_EQ(ls_matrix_parse("   ", &m), LS_ERR_EMPTY_INPUT);
  EXPECT_EQ(ls_matrix_parse("1e999", &m), LS_ERR_NON_FINITE_ENTRY);
  EXPECT_EQ(ls_matrix_parse(nullptr, &m), LS_ERR_INVALID_ARGUMENT);
  // A successful call clears the message.
  const Matrix ok = parse("1");
  EXPECT_STREQ(ls_last_error_message(), "");
}

TEST(CApi, CreateAndClone) {
  const double e[] = {1, 2, 3, 4};
  ls_matrix* m = nullptr;
  ASSERT_EQ(ls_matrix_create(2, 2, e, &m), LS_OK);
  Matrix owned(m);
  ls_matrix* c = nullptr;
  ASSERT_EQ(ls_matrix_clone(m, &c), LS_OK);
  Matrix clone(c);
  EXPECT_EQ(format(clone.get()), "1,2;3,4");
  const double bad[] = {1, NAN};
  ls_matrix* n = nullptr;
  EXPECT_EQ(ls_matrix_create(1, 2, bad, &n), LS_ERR_NON_FINITE_ENTRY);
  ls_matrix_free(nullptr);
}

TEST(CApi, FormatDouble) {
  char buf[32];
  size_t needed = 0;
  ASSERT_EQ(ls_format_double(0.1, buf, sizeof buf, &needed), LS_OK);
  EXPECT_STREQ(buf, "0.1");
  EXPECT_EQ(needed, 3u);
  EXPECT_EQ(ls_format_double(0.1, buf, 3, &needed), LS_ERR_BUFFER_TOO_SMALL);
}

TEST(CApi, DeterminantAndColumnReplacement) {
  const Matrix a = parse("2,3,-1;4,4,-3;-2,3,-1");
  double det = 0;
  ASSERT_EQ(ls_determinant(a.get(), 1e-12, &det), LS_OK);
  EXPECT_NEAR(det, 20, 1e-12);
  ls_matrix* r = nullptr;
  ASSERT_EQ(ls_replace_column(a.get(), 1, kB, 3, &r), LS_OK);
  Matrix replaced(r);
  ASSERT_EQ(ls_determinant(replaced.get(), 1e-12, &det), LS_OK);
  EXPECT_NEAR(det, 40, 1e-12);
  EXPECT_EQ(ls_replace_column(a.get(), 3, kB, 3, &r), LS_ERR_INDEX_OUT_OF_RANGE);
  EXPECT_EQ(ls_replace_column(a.get(), 0, kB, 2, &r), LS_ERR_LENGTH_MISMATCH);
  const Matrix rect = parse("1,2,3");
  EXPECT_EQ(ls_determinant(rect.get(), 1e-12, &det), LS_ERR_NOT_SQUARE);
}

TEST(CApi, RowOps) {
  const Matrix a = parse("1,2;3,4");
  ls_matrix* out = nullptr;
  const ls_row_op add{LS_ROW_OP_ADD_SCALED, 1, 0, -3};
  ASSERT_EQ(ls_apply_row_op(a.get(), &add, 0, &out), LS_OK);
  Matrix r(out);
  EXPECT_EQ(format(r.get()), "1,2;0,-2");
  const ls_row_op zero{LS_ROW_OP_SCALE, 0, 0, 0};
  EXPECT_EQ(ls_apply_row_op(a.get(), &zero, 0, &out), LS_ERR_ZERO_SCALE_FACTOR);
  const ls_row_op far{LS_ROW_OP_SWAP, 0, 5, 0};
  EXPECT_EQ(ls_apply_row_op(a.get(), &far, 0, &out), LS_ERR_INDEX_OUT_OF_RANGE);
  ls_row_op bogus{};
  bogus.kind = static_cast<ls_row_op_kind>(42);
  EXPECT_EQ(ls_apply_row_op(a.get(), &bogus, 0, &out), LS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, SolveDirect) {
  const Matrix a = parse("2,3,-1;4,4,-3;-2,3,-1");
  for (const ls_method m : {LS_METHOD_CRAMER, LS_METHOD_GAUSS_JORDAN}) {
    double x[3] = {};
    ls_status status = LS_STATUS_DIVERGED;
    ASSERT_EQ(ls_solve_direct(a.get(), kB, 3, m, nullptr, x, 3, &status), LS_OK);
    EXPECT_EQ(status, LS_STATUS_EXACT);
    EXPECT_NEAR(x[0], 1, 1e-12);
    EXPECT_NEAR(x[1], 2, 1e-12);
    EXPECT_NEAR(x[2], 3, 1e-12);
    EXPECT_EQ(ls_solve_direct(a.get(), kB, 3, m, nullptr, x, 2, &status),
              LS_ERR_BUFFER_TOO_SMALL);
  }
  ls_status status;
  double x[3];
  EXPECT_EQ(ls_solve_direct(a.get(), kB, 3, LS_METHOD_JACOBI, nullptr, x, 3, &status),
            LS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ls_solve_direct(a.get(), kB, 2, LS_METHOD_CRAMER, nullptr, x, 3, &status),
            LS_ERR_LENGTH_MISMATCH);
}

TEST(CApi, SolveDirectStatuses) {
  const Matrix singular = parse("1,2;2,4");
  const double b[] = {1, 1};
  double x[2] = {7, 7};
  ls_status status;
  ASSERT_EQ(ls_solve_direct(singular.get(), b, 2, LS_METHOD_CRAMER, nullptr, x, 2, &status),
            LS_OK);
  EXPECT_EQ(status, LS_STATUS_SINGULAR);
  EXPECT_EQ(x[0], 7);  // untouched
  ASSERT_EQ(ls_solve_direct(singular.get(), b, 2, LS_METHOD_GAUSS_JORDAN, nullptr, x, 2,
                            &status),
            LS_OK);
  EXPECT_EQ(status, LS_STATUS_INCONSISTENT);
  const double consistent[] = {1, 2};
  ASSERT_EQ(ls_solve_direct(singular.get(), consistent, 2, LS_METHOD_GAUSS_JORDAN, nullptr,
                            x, 2, &status),
            LS_OK);
  EXPECT_EQ(status, LS_STATUS_UNDERDETERMINED);
}

TEST(CApi, Rref) {
  const Matrix a = parse("2,3,-1;4,4,-3;-2,3,-1");
  ls_rref* r = nullptr;
  ASSERT_EQ(ls_rref_compute(a.get(), kB, 3, nullptr, &r), LS_OK);
  EXPECT_EQ(ls_rref_rank_a(r), 3u);
  EXPECT_EQ(ls_rref_rank_augmented(r), 3u);
  ls_matrix* body = nullptr;
  ASSERT_EQ(ls_rref_matrix(r, &body), LS_OK);
  Matrix reduced(body);
  EXPECT_EQ(ls_matrix_cols(reduced.get()), 4u);

  // Replaying the logged ops through the public row-op entry point with the
  // same cleanup tolerance reproduces the reduced matrix.
  ls_matrix* cur = nullptr;
  const double aug[] = {2, 3, -1, 5, 4, 4, -3, 3, -2, 3, -1, 1};
  ASSERT_EQ(ls_matrix_create(3, 4, aug, &cur), LS_OK);
  for (size_t k = 0; k < ls_rref_op_count(r); ++k) {
    ls_row_op op;
    ASSERT_EQ(ls_rref_op(r, k, &op), LS_OK);
    ls_matrix* next = nullptr;
    ASSERT_EQ(ls_apply_row_op(cur, &op, 1e-12, &next), LS_OK);
    ls_matrix_free(cur);
    cur = next;
  }
  Matrix replayed(cur);
  EXPECT_EQ(format(replayed.get()), format(reduced.get()));
  ls_row_op op;
  EXPECT_EQ(ls_rref_op(r, ls_rref_op_count(r), &op), LS_ERR_INDEX_OUT_OF_RANGE);
  ls_rref_free(r);
}

TEST(CApi, SolveIterativeWithTrace) {
  const Matrix a = parse("4,1,1;1,5,2;0,1,3");
  const double b[] = {6, 8, 4};
  ls_config cfg;
  ls_config_default(&cfg);
  cfg.epsilon = 1e-10;
  double x[3] = {};
  ls_status status;
  size_t iterations = 0;
  ls_trace* trace = nullptr;
  ASSERT_EQ(ls_solve_iterative(a.get(), b, 3, nullptr, 0, LS_METHOD_GAUSS_SEIDEL, &cfg, x, 3,
                               &status, &iterations, &trace),
            LS_OK);
  EXPECT_EQ(status, LS_STATUS_CONVERGED);
  for (double v : x) EXPECT_NEAR(v, 1, 1e-9);
  ASSERT_NE(trace, nullptr);
  EXPECT_EQ(ls_trace_length(trace), iterations);
  EXPECT_EQ(ls_trace_dimension(trace), 3u);
  EXPECT_EQ(ls_trace_final_status(trace), LS_STATUS_CONVERGED);

  double prev[3] = {0, 0, 0};
  for (size_t k = 0; k < iterations; ++k) {
    size_t it = 0;
    double rx[3], rd[3], md = 0;
    ASSERT_EQ(ls_trace_record(trace, k, &it, rx, rd, &md), LS_OK);
    EXPECT_EQ(it, k + 1);
    double sx[3], sd[3];
    ASSERT_EQ(ls_sweep(a.get(), b, prev, 3, LS_METHOD_GAUSS_SEIDEL, sx, sd), LS_OK);
    EXPECT_EQ(std::memcmp(rx, sx, sizeof rx), 0);
    EXPECT_EQ(std::memcmp(rd, sd, sizeof rd), 0);
    std::memcpy(prev, rx, sizeof prev);
  }
  EXPECT_EQ(ls_trace_record(trace, iterations, nullptr, nullptr, nullptr, nullptr),
            LS_ERR_INDEX_OUT_OF_RANGE);
  ls_trace_free(trace);
}

TEST(CApi, SolveIterativeStatusesAndErrors) {
  const Matrix a = parse("2,3,-1;4,4,-3;-2,3,-1");
  double x[3] = {};
  ls_status status;
  size_t iterations = 0;
  ASSERT_EQ(ls_solve_iterative(a.get(), kB, 3, nullptr, 0, LS_METHOD_GAUSS_SEIDEL, nullptr, x,
                               3, &status, &iterations, nullptr),
            LS_OK);
  EXPECT_EQ(status, LS_STATUS_DIVERGED);

  const Matrix zero = parse("0,1;1,1");
  const double b[] = {1, 1};
  EXPECT_EQ(ls_solve_iterative(zero.get(), b, 2, nullptr, 0, LS_METHOD_JACOBI, nullptr, x, 3,
                               &status, &iterations, nullptr),
            LS_ERR_ZERO_DIAGONAL);
  ls_config cfg;
  ls_config_default(&cfg);
  cfg.epsilon = -1;
  EXPECT_EQ(ls_solve_iterative(a.get(), kB, 3, nullptr, 0, LS_METHOD_JACOBI, &cfg, x, 3,
                               &status, &iterations, nullptr),
            LS_ERR_INVALID_CONFIG);
  const double guess[] = {0, 0};
  EXPECT_EQ(ls_solve_iterative(a.get(), kB, 3, guess, 2, LS_METHOD_JACOBI, nullptr, x, 3,
                               &status, &iterations, nullptr),
            LS_ERR_LENGTH_MISMATCH);
}

TEST(CApi, Diagnostics) {
  const Matrix a = parse("0,1,0;1,5,0;0,0,0");
  size_t idx[1];
  size_t count = 0;
  EXPECT_EQ(ls_check_diagonal(a.get(), 1e-12, idx, 1, &count), LS_OK);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(idx[0], 0u);
  ls_dominance d;
  ASSERT_EQ(ls_classify_dominance(a.get(), &d), LS_OK);
  EXPECT_EQ(d, LS_DOMINANCE_NONE);
  const Matrix dom = parse("4,1,1;1,5,2;0,1,3");
  ASSERT_EQ(ls_classify_dominance(dom.get(), &d), LS_OK);
  EXPECT_EQ(d, LS_DOMINANCE_STRICT);
}

}  // namespace
