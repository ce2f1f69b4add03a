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

/*
 * C interface to linsolve.
 *
 * Matrices, iteration traces and RREF results are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns an ls_error; on failure a description is available from
 * ls_last_error_message() until the next call on the same thread.
 *
 * Vectors cross the boundary as (pointer, length) pairs. Output buffers are
 * sized by the caller; calls that write a vector report LS_ERR_BUFFER_TOO_SMALL
 * when the capacity is short.
 */
#ifndef LINSOLVE_LINSOLVE_H
#define LINSOLVE_LINSOLVE_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef LINSOLVE_BUILDING_LIBRARY
#    define LS_API __declspec(dllexport)
#  else
#    define LS_API __declspec(dllimport)
#  endif
#else
#  define LS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ls_error {
  LS_OK = 0,
  LS_ERR_EMPTY_INPUT = 1,
  LS_ERR_RAGGED_ROWS = 2,
  LS_ERR_BAD_NUMBER = 3,
  LS_ERR_NON_FINITE_ENTRY = 4,
  LS_ERR_NOT_SQUARE = 5,
  LS_ERR_INDEX_OUT_OF_RANGE = 6,
  LS_ERR_LENGTH_MISMATCH = 7,
  LS_ERR_ZERO_SCALE_FACTOR = 8,
  LS_ERR_SINGULAR = 9,
  LS_ERR_ZERO_DIAGONAL = 10,
  LS_ERR_NON_FINITE_ITERATE = 11,
  LS_ERR_INVALID_CONFIG = 12,
  LS_ERR_INVALID_ARGUMENT = 13,
  LS_ERR_BUFFER_TOO_SMALL = 14,
  LS_ERR_INTERNAL = 15
} ls_error;

typedef enum ls_method {
  LS_METHOD_CRAMER = 0,
  LS_METHOD_GAUSS_JORDAN = 1,
  LS_METHOD_GAUSS_SEIDEL = 2,
  LS_METHOD_JACOBI = 3
} ls_method;

typedef enum ls_status {
  LS_STATUS_EXACT = 0,
  LS_STATUS_CONVERGED = 1,
  LS_STATUS_DIVERGED = 2,
  LS_STATUS_MAX_ITERATIONS = 3,
  LS_STATUS_SINGULAR = 4,
  LS_STATUS_INCONSISTENT = 5,
  LS_STATUS_UNDERDETERMINED = 6
} ls_status;

typedef enum ls_criterion {
  LS_CRITERION_ABSOLUTE_DELTA = 0,
  LS_CRITERION_RELATIVE_ERROR = 1
} ls_criterion;

typedef enum ls_dominance {
  LS_DOMINANCE_STRICT = 0,
  LS_DOMINANCE_WEAK = 1,
  LS_DOMINANCE_NONE = 2
} ls_dominance;

typedef enum ls_row_op_kind {
  LS_ROW_OP_SWAP = 0,
  LS_ROW_OP_SCALE = 1,
  LS_ROW_OP_ADD_SCALED = 2
} ls_row_op_kind;

/* Swap uses first/second; Scale uses first (row) and factor; AddScaled uses
 * first (target), second (source) and factor. */
typedef struct ls_row_op {
  ls_row_op_kind kind;
  size_t first;
  size_t second;
  double factor;
} ls_row_op;

typedef struct ls_config {
  double epsilon;               /* default 0.01 */
  size_t max_iterations;        /* default 1000 */
  ls_criterion criterion;       /* default absolute delta */
  double divergence_threshold;  /* default 1e12 */
  double pivot_tolerance;       /* default 1e-12 */
  double singular_tolerance;    /* default 1e-12 */
} ls_config;

typedef struct ls_matrix ls_matrix;
typedef struct ls_trace ls_trace;
typedef struct ls_rref ls_rref;

/* ---- library ------------------------------------------------------------ */

LS_API const char* ls_version(void);
LS_API const char* ls_last_error_message(void);
LS_API const char* ls_error_name(ls_error err);
/* "exact", "converged", "max-iterations", ... */
LS_API const char* ls_status_name(ls_status status);
LS_API const char* ls_method_name(ls_method method);
/* "strictly-dominant", "weakly-dominant", "not-dominant" */
LS_API const char* ls_dominance_name(ls_dominance dominance);
LS_API void ls_config_default(ls_config* cfg);

/* Shortest round-trip decimal for `value`, NUL-terminated. `needed` (may be
 * NULL) receives the length excluding the terminator. */
LS_API ls_error ls_format_double(double value, char* buf, size_t capacity,
                                 size_t* needed);

/* ---- matrices ----------------------------------------------------------- */

LS_API ls_error ls_matrix_parse(const char* text, ls_matrix** out);
/* Copies rows*cols row-major entries. */
LS_API ls_error ls_matrix_create(size_t rows, size_t cols, const double* entries,
                                 ls_matrix** out);
LS_API ls_error ls_matrix_clone(const ls_matrix* m, ls_matrix** out);
LS_API void ls_matrix_free(ls_matrix* m);
LS_API size_t ls_matrix_rows(const ls_matrix* m);
LS_API size_t ls_matrix_cols(const ls_matrix* m);
LS_API ls_error ls_matrix_get(const ls_matrix* m, size_t i, size_t j, double* out);
/* Writes all rows*cols entries row-major. */
LS_API ls_error ls_matrix_entries(const ls_matrix* m, double* out, size_t capacity);
/* Matrix string ("1,2;3,4"); same sizing contract as ls_format_double. */
LS_API ls_error ls_matrix_format(const ls_matrix* m, char* buf, size_t capacity,
                                 size_t* needed);

LS_API ls_error ls_determinant(const ls_matrix* m, double pivot_tolerance,
                               double* out);
LS_API ls_error ls_replace_column(const ls_matrix* m, size_t j, const double* v,
                                  size_t v_len, ls_matrix** out);
/* Plain arithmetic when cleanup_tolerance is 0. */
LS_API ls_error ls_apply_row_op(const ls_matrix* m, const ls_row_op* op,
                                double cleanup_tolerance, ls_matrix** out);

/* ---- direct solvers ------------------------------------------------------ */

/* Cramer or Gauss-Jordan. x receives A.cols() values when *status is EXACT and
 * is left untouched otherwise. */
LS_API ls_error ls_solve_direct(const ls_matrix* a, const double* b, size_t b_len,
                                ls_method method, const ls_config* cfg, double* x,
                                size_t x_capacity, ls_status* status);

/* RREF of [a | b]. */
LS_API ls_error ls_rref_compute(const ls_matrix* a, const double* b, size_t b_len,
                                const ls_config* cfg, ls_rref** out);
LS_API void ls_rref_free(ls_rref* r);
/* New handle holding the reduced augmented matrix. */
LS_API ls_error ls_rref_matrix(const ls_rref* r, ls_matrix** out);
LS_API size_t ls_rref_rank_a(const ls_rref* r);
LS_API size_t ls_rref_rank_augmented(const ls_rref* r);
LS_API size_t ls_rref_op_count(const ls_rref* r);
LS_API ls_error ls_rref_op(const ls_rref* r, size_t k, ls_row_op* out);

/* ---- iterative solvers --------------------------------------------------- */

/* Gauss-Seidel or Jacobi from `guess` (NULL for the zero vector). x receives
 * the solution when *status is CONVERGED. *iterations receives the number of
 * recorded sweeps. When `trace` is non-NULL it receives a new trace handle. */
LS_API ls_error ls_solve_iterative(const ls_matrix* a, const double* b, size_t b_len,
                                   const double* guess, size_t guess_len,
                                   ls_method method, const ls_config* cfg, double* x,
                                   size_t x_capacity, ls_status* status,
                                   size_t* iterations, ls_trace** trace);

/* One sweep; x_out and deltas_out each receive n values. */
LS_API ls_error ls_sweep(const ls_matrix* a, const double* b, const double* x,
                         size_t n, ls_method method, double* x_out,
                         double* deltas_out);

LS_API void ls_trace_free(ls_trace* t);
LS_API size_t ls_trace_length(const ls_trace* t);
LS_API size_t ls_trace_dimension(const ls_trace* t);
LS_API ls_status ls_trace_final_status(const ls_trace* t);
/* Record k (0-based). x and deltas receive ls_trace_dimension() values each
 * and may be NULL. */
LS_API ls_error ls_trace_record(const ls_trace* t, size_t k, size_t* iteration,
                                double* x, double* deltas, double* max_delta);

/* ---- diagnostics --------------------------------------------------------- */

/* Indices of diagonal entries with magnitude <= pivot_tolerance. *count
 * always receives the total; at most `capacity` indices are written. */
LS_API ls_error ls_check_diagonal(const ls_matrix* a, double pivot_tolerance,
                                  size_t* indices, size_t capacity, size_t* count);
LS_API ls_error ls_classify_dominance(const ls_matrix* a, ls_dominance* out);

#ifdef __cplusplus
}
#endif

#endif /* LINSOLVE_LINSOLVE_H */
