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

#include "linsolve/linsolve.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "linsolve/direct.hpp"
#include "linsolve/iterative.hpp"
#include "linsolve/matrix.hpp"

struct ls_matrix {
  linsolve::DenseMatrix m;
};

struct ls_trace {
  linsolve::IterationTrace trace;
  std::size_t dimension;
};

struct ls_rref {
  linsolve::RrefResult result;
};

namespace {

using linsolve::ErrorCode;

thread_local std::string g_last_error;

ls_error to_c(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return LS_ERR_EMPTY_INPUT;
    case ErrorCode::RaggedRows: return LS_ERR_RAGGED_ROWS;
    case ErrorCode::BadNumber: return LS_ERR_BAD_NUMBER;
    case ErrorCode::NonFiniteEntry: return LS_ERR_NON_FINITE_ENTRY;
    case ErrorCode::NotSquare: return LS_ERR_NOT_SQUARE;
    case ErrorCode::IndexOutOfRange: return LS_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::LengthMismatch: return LS_ERR_LENGTH_MISMATCH;
    case ErrorCode::ZeroScaleFactor: return LS_ERR_ZERO_SCALE_FACTOR;
    case ErrorCode::Singular: return LS_ERR_SINGULAR;
    case ErrorCode::ZeroDiagonal: return LS_ERR_ZERO_DIAGONAL;
    case ErrorCode::NonFiniteIterate: return LS_ERR_NON_FINITE_ITERATE;
    case ErrorCode::InvalidConfig: return LS_ERR_INVALID_CONFIG;
    case ErrorCode::InvalidArgument: return LS_ERR_INVALID_ARGUMENT;
  }
  return LS_ERR_INTERNAL;
}

ls_error fail(ls_error err, std::string message) {
  g_last_error = std::move(message);
  return err;
}

// Runs `body` with the error state reset and every exception translated.
template <class F>
ls_error guarded(F&& body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const linsolve::Error& e) {
    return fail(to_c(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LS_ERR_INTERNAL, "unknown failure");
  }
}

#define LS_REQUIRE(cond, what)                                   \
  do {                                                           \
    if (!(cond)) return fail(LS_ERR_INVALID_ARGUMENT, (what));   \
  } while (0)

linsolve::SolverConfig to_cpp(const ls_config* cfg) {
  linsolve::SolverConfig out;
  if (cfg == nullptr) return out;
  out.epsilon = cfg->epsilon;
  out.max_iterations = cfg->max_iterations;
  switch (cfg->criterion) {
    case LS_CRITERION_ABSOLUTE_DELTA:
      out.criterion = linsolve::Criterion::AbsoluteDelta;
      break;
    case LS_CRITERION_RELATIVE_ERROR:
      out.criterion = linsolve::Criterion::RelativeError;
      break;
    default:
      throw linsolve::Error(ErrorCode::InvalidConfig, "unknown convergence criterion");
  }
  out.divergence_threshold = cfg->divergence_threshold;
  out.pivot_tolerance = cfg->pivot_tolerance;
  out.singular_tolerance = cfg->singular_tolerance;
  return out;
}

std::optional<linsolve::Method> to_cpp(ls_method method) {
  switch (method) {
    case LS_METHOD_CRAMER: return linsolve::Method::Cramer;
    case LS_METHOD_GAUSS_JORDAN: return linsolve::Method::GaussJordan;
    case LS_METHOD_GAUSS_SEIDEL: return linsolve::Method::GaussSeidel;
    case LS_METHOD_JACOBI: return linsolve::Method::Jacobi;
  }
  return std::nullopt;
}

ls_status to_c(linsolve::SolutionStatus s) {
  using linsolve::SolutionStatus;
  switch (s) {
    case SolutionStatus::Exact: return LS_STATUS_EXACT;
    case SolutionStatus::Converged: return LS_STATUS_CONVERGED;
    case SolutionStatus::Diverged: return LS_STATUS_DIVERGED;
    case SolutionStatus::MaxIterations: return LS_STATUS_MAX_ITERATIONS;
    case SolutionStatus::Singular: return LS_STATUS_SINGULAR;
    case SolutionStatus::Inconsistent: return LS_STATUS_INCONSISTENT;
    case SolutionStatus::Underdetermined: return LS_STATUS_UNDERDETERMINED;
  }
  return LS_STATUS_SINGULAR;
}

linsolve::Vector to_vector(const double* p, std::size_t n) {
  return p == nullptr ? linsolve::Vector{} : linsolve::Vector(p, p + n);
}

ls_error write_string(const std::string& s, char* buf, std::size_t capacity,
                      std::size_t* needed) {
  if (needed != nullptr) *needed = s.size();
  if (buf == nullptr || capacity < s.size() + 1) {
    return fail(LS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return LS_OK;
}

ls_error write_vector(const linsolve::Vector& v, double* out, std::size_t capacity) {
  if (out == nullptr || capacity < v.size()) {
    return fail(LS_ERR_BUFFER_TOO_SMALL, "output vector too small");
  }
  std::copy(v.begin(), v.end(), out);
  return LS_OK;
}

linsolve::RowOp to_cpp(const ls_row_op& op) {
  switch (op.kind) {
    case LS_ROW_OP_SWAP: return linsolve::Swap{op.first, op.second};
    case LS_ROW_OP_SCALE: return linsolve::Scale{op.first, op.factor};
    case LS_ROW_OP_ADD_SCALED: return linsolve::AddScaled{op.first, op.second, op.factor};
  }
  throw linsolve::Error(ErrorCode::InvalidArgument, "unknown row operation kind");
}

ls_row_op to_c(const linsolve::RowOp& op) {
  if (const auto* s = std::get_if<linsolve::Swap>(&op)) {
    return {LS_ROW_OP_SWAP, s->first, s->second, 0.0};
  }
  if (const auto* s = std::get_if<linsolve::Scale>(&op)) {
    return {LS_ROW_OP_SCALE, s->row, 0, s->factor};
  }
  const auto& a = std::get<linsolve::AddScaled>(op);
  return {LS_ROW_OP_ADD_SCALED, a.target, a.source, a.factor};
}

}  // namespace

extern "C" {

const char* ls_version(void) { return "1.0.0"; }

const char* ls_last_error_message(void) { return g_last_error.c_str(); }

const char* ls_error_name(ls_error err) {
  switch (err) {
    case LS_OK: return "ok";
    case LS_ERR_EMPTY_INPUT: return "empty input";
    case LS_ERR_RAGGED_ROWS: return "ragged rows";
    case LS_ERR_BAD_NUMBER: return "bad number";
    case LS_ERR_NON_FINITE_ENTRY: return "non-finite entry";
    case LS_ERR_NOT_SQUARE: return "not square";
    case LS_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case LS_ERR_LENGTH_MISMATCH: return "length mismatch";
    case LS_ERR_ZERO_SCALE_FACTOR: return "zero scale factor";
    case LS_ERR_SINGULAR: return "singular";
    case LS_ERR_ZERO_DIAGONAL: return "zero diagonal";
    case LS_ERR_NON_FINITE_ITERATE: return "non-finite iterate";
    case LS_ERR_INVALID_CONFIG: return "invalid config";
    case LS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LS_ERR_INTERNAL: return "internal error";
  }
  return "unknown error";
}

const char* ls_status_name(ls_status status) {
  switch (status) {
    case LS_STATUS_EXACT: return "exact";
    case LS_STATUS_CONVERGED: return "converged";
    case LS_STATUS_DIVERGED: return "diverged";
    case LS_STATUS_MAX_ITERATIONS: return "max-iterations";
    case LS_STATUS_SINGULAR: return "singular";
    case LS_STATUS_INCONSISTENT: return "inconsistent";
    case LS_STATUS_UNDERDETERMINED: return "underdetermined";
  }
  return "unknown";
}

const char* ls_method_name(ls_method method) {
  const auto m = to_cpp(method);
  return m ? linsolve::to_string(*m).data() : "unknown";
}

const char* ls_dominance_name(ls_dominance dominance) {
  switch (dominance) {
    case LS_DOMINANCE_STRICT: return "strictly-dominant";
    case LS_DOMINANCE_WEAK: return "weakly-dominant";
    case LS_DOMINANCE_NONE: return "not-dominant";
  }
  return "unknown";
}

void ls_config_default(ls_config* cfg) {
  if (cfg == nullptr) return;
  const linsolve::SolverConfig d;
  cfg->epsilon = d.epsilon;
  cfg->max_iterations = d.max_iterations;
  cfg->criterion = LS_CRITERION_ABSOLUTE_DELTA;
  cfg->divergence_threshold = d.divergence_threshold;
  cfg->pivot_tolerance = d.pivot_tolerance;
  cfg->singular_tolerance = d.singular_tolerance;
}

ls_error ls_format_double(double value, char* buf, size_t capacity, size_t* needed) {
  return guarded([&] {
    return write_string(linsolve::format_scalar(value), buf, capacity, needed);
  });
}

// ---- matrices ---------------------------------------------------------------

ls_error ls_matrix_parse(const char* text, ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(text != nullptr && out != nullptr, "null argument");
    *out = new ls_matrix{linsolve::parse_matrix(text)};
    return LS_OK;
  });
}

ls_error ls_matrix_create(size_t rows, size_t cols, const double* entries,
                          ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(out != nullptr, "null output handle");
    LS_REQUIRE(entries != nullptr || rows * cols == 0, "null entries");
    *out = new ls_matrix{
        linsolve::DenseMatrix(rows, cols, to_vector(entries, rows * cols))};
    return LS_OK;
  });
}

ls_error ls_matrix_clone(const ls_matrix* m, ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr && out != nullptr, "null argument");
    *out = new ls_matrix{m->m};
    return LS_OK;
  });
}

void ls_matrix_free(ls_matrix* m) { delete m; }

size_t ls_matrix_rows(const ls_matrix* m) { return m == nullptr ? 0 : m->m.rows(); }

size_t ls_matrix_cols(const ls_matrix* m) { return m == nullptr ? 0 : m->m.cols(); }

ls_error ls_matrix_get(const ls_matrix* m, size_t i, size_t j, double* out) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr && out != nullptr, "null argument");
    *out = m->m.at(i, j);
    return LS_OK;
  });
}

ls_error ls_matrix_entries(const ls_matrix* m, double* out, size_t capacity) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr, "null matrix");
    const auto e = m->m.entries();
    return write_vector(linsolve::Vector(e.begin(), e.end()), out, capacity);
  });
}

ls_error ls_matrix_format(const ls_matrix* m, char* buf, size_t capacity,
                          size_t* needed) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr, "null matrix");
    return write_string(linsolve::format_matrix(m->m), buf, capacity, needed);
  });
}

ls_error ls_determinant(const ls_matrix* m, double pivot_tolerance, double* out) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr && out != nullptr, "null argument");
    *out = linsolve::determinant(m->m, pivot_tolerance);
    return LS_OK;
  });
}

ls_error ls_replace_column(const ls_matrix* m, size_t j, const double* v, size_t v_len,
                           ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr && out != nullptr, "null argument");
    LS_REQUIRE(v != nullptr || v_len == 0, "null column");
    *out = new ls_matrix{linsolve::replace_column(m->m, j, to_vector(v, v_len))};
    return LS_OK;
  });
}

ls_error ls_apply_row_op(const ls_matrix* m, const ls_row_op* op,
                         double cleanup_tolerance, ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(m != nullptr && op != nullptr && out != nullptr, "null argument");
    *out = new ls_matrix{linsolve::apply_row_op(m->m, to_cpp(*op), cleanup_tolerance)};
    return LS_OK;
  });
}

// ---- direct solvers -----------------------------------------------------------

ls_error ls_solve_direct(const ls_matrix* a, const double* b, size_t b_len,
                         ls_method method, const ls_config* cfg, double* x,
                         size_t x_capacity, ls_status* status) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && status != nullptr, "null argument");
    LS_REQUIRE(b != nullptr || b_len == 0, "null right-hand side");
    const auto m = to_cpp(method);
    LS_REQUIRE(m == linsolve::Method::Cramer || m == linsolve::Method::GaussJordan,
               "not a direct method");
    const linsolve::LinearSystem sys(a->m, to_vector(b, b_len));
    const auto config = to_cpp(cfg);
    const linsolve::Solution s = *m == linsolve::Method::Cramer
                                     ? linsolve::solve_cramer(sys, config)
                                     : linsolve::solve_gauss_jordan(sys, config);
    if (linsolve::has_solution(s.status)) {
      if (const ls_error err = write_vector(s.x, x, x_capacity); err != LS_OK) return err;
    }
    *status = to_c(s.status);
    return LS_OK;
  });
}

ls_error ls_rref_compute(const ls_matrix* a, const double* b, size_t b_len,
                         const ls_config* cfg, ls_rref** out) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && out != nullptr, "null argument");
    LS_REQUIRE(b != nullptr || b_len == 0, "null right-hand side");
    const linsolve::LinearSystem sys(a->m, to_vector(b, b_len));
    *out = new ls_rref{
        linsolve::to_reduced_row_echelon(linsolve::AugmentedMatrix(sys), to_cpp(cfg))};
    return LS_OK;
  });
}

void ls_rref_free(ls_rref* r) { delete r; }

ls_error ls_rref_matrix(const ls_rref* r, ls_matrix** out) {
  return guarded([&] {
    LS_REQUIRE(r != nullptr && out != nullptr, "null argument");
    *out = new ls_matrix{r->result.rref.body()};
    return LS_OK;
  });
}

size_t ls_rref_rank_a(const ls_rref* r) { return r == nullptr ? 0 : r->result.rank_a; }

size_t ls_rref_rank_augmented(const ls_rref* r) {
  return r == nullptr ? 0 : r->result.rank_augmented;
}

size_t ls_rref_op_count(const ls_rref* r) {
  return r == nullptr ? 0 : r->result.ops.size();
}

ls_error ls_rref_op(const ls_rref* r, size_t k, ls_row_op* out) {
  return guarded([&] {
    LS_REQUIRE(r != nullptr && out != nullptr, "null argument");
    if (k >= r->result.ops.size()) {
      return fail(LS_ERR_INDEX_OUT_OF_RANGE, "operation index out of range");
    }
    *out = to_c(r->result.ops[k]);
    return LS_OK;
  });
}

// ---- iterative solvers ----------------------------------------------------------

ls_error ls_solve_iterative(const ls_matrix* a, const double* b, size_t b_len,
                            const double* guess, size_t guess_len, ls_method method,
                            const ls_config* cfg, double* x, size_t x_capacity,
                            ls_status* status, size_t* iterations, ls_trace** trace) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && status != nullptr, "null argument");
    LS_REQUIRE(b != nullptr || b_len == 0, "null right-hand side");
    const auto m = to_cpp(method);
    LS_REQUIRE(m.has_value(), "unknown method");
    const linsolve::LinearSystem sys(a->m, to_vector(b, b_len));
    std::optional<linsolve::Vector> start;
    if (guess != nullptr) start = to_vector(guess, guess_len);

    auto result = linsolve::solve_iterative(sys, start, *m, to_cpp(cfg));
    if (linsolve::has_solution(result.solution.status)) {
      if (const ls_error err = write_vector(result.solution.x, x, x_capacity);
          err != LS_OK) {
        return err;
      }
    }
    *status = to_c(result.solution.status);
    if (iterations != nullptr) *iterations = result.trace.iterations_used;
    if (trace != nullptr) *trace = new ls_trace{std::move(result.trace), sys.unknowns()};
    return LS_OK;
  });
}

ls_error ls_sweep(const ls_matrix* a, const double* b, const double* x, size_t n,
                  ls_method method, double* x_out, double* deltas_out) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && b != nullptr && x != nullptr, "null argument");
    LS_REQUIRE(x_out != nullptr && deltas_out != nullptr, "null output");
    const linsolve::Vector bv = to_vector(b, n);
    const linsolve::Vector xv = to_vector(x, n);
    linsolve::SweepResult r;
    if (method == LS_METHOD_GAUSS_SEIDEL) {
      r = linsolve::gauss_seidel_sweep(a->m, bv, xv);
    } else if (method == LS_METHOD_JACOBI) {
      r = linsolve::jacobi_sweep(a->m, bv, xv);
    } else {
      return fail(LS_ERR_INVALID_ARGUMENT, "not an iterative method");
    }
    std::copy(r.x.begin(), r.x.end(), x_out);
    std::copy(r.deltas.begin(), r.deltas.end(), deltas_out);
    return LS_OK;
  });
}

void ls_trace_free(ls_trace* t) { delete t; }

size_t ls_trace_length(const ls_trace* t) {
  return t == nullptr ? 0 : t->trace.records.size();
}

size_t ls_trace_dimension(const ls_trace* t) { return t == nullptr ? 0 : t->dimension; }

ls_status ls_trace_final_status(const ls_trace* t) {
  return t == nullptr ? LS_STATUS_MAX_ITERATIONS : to_c(t->trace.final_status);
}

ls_error ls_trace_record(const ls_trace* t, size_t k, size_t* iteration, double* x,
                         double* deltas, double* max_delta) {
  return guarded([&] {
    LS_REQUIRE(t != nullptr, "null trace");
    if (k >= t->trace.records.size()) {
      return fail(LS_ERR_INDEX_OUT_OF_RANGE, "trace record index out of range");
    }
    const auto& rec = t->trace.records[k];
    if (iteration != nullptr) *iteration = rec.iteration;
    if (x != nullptr) std::copy(rec.x.begin(), rec.x.end(), x);
    if (deltas != nullptr) std::copy(rec.deltas.begin(), rec.deltas.end(), deltas);
    if (max_delta != nullptr) *max_delta = rec.max_delta;
    return LS_OK;
  });
}

// ---- diagnostics -----------------------------------------------------------------

ls_error ls_check_diagonal(const ls_matrix* a, double pivot_tolerance, size_t* indices,
                           size_t capacity, size_t* count) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && count != nullptr, "null argument");
    const auto zeros = linsolve::check_diagonal(a->m, pivot_tolerance);
    *count = zeros.size();
    for (std::size_t k = 0; k < zeros.size() && k < capacity && indices != nullptr; ++k) {
      indices[k] = zeros[k];
    }
    return LS_OK;
  });
}

ls_error ls_classify_dominance(const ls_matrix* a, ls_dominance* out) {
  return guarded([&] {
    LS_REQUIRE(a != nullptr && out != nullptr, "null argument");
    switch (linsolve::classify_dominance(a->m).classification) {
      case linsolve::Dominance::StrictlyDominant: *out = LS_DOMINANCE_STRICT; break;
      case linsolve::Dominance::WeaklyDominant: *out = LS_DOMINANCE_WEAK; break;
      case linsolve::Dominance::NotDominant: *out = LS_DOMINANCE_NONE; break;
    }
    return LS_OK;
  });
}

}  // extern "C"
