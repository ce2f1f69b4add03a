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

#include "linsolve/matrix.hpp"

#include "row_ops.hpp"
#include "scaled_determinant.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace linsolve {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::BadNumber: return "BadNumber";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroScaleFactor: return "ZeroScaleFactor";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::NonFiniteIterate: return "NonFiniteIterate";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void require_finite(std::span<const double> values, std::string_view what) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      std::ostringstream msg;
      msg << what << ": non-finite value at position " << k;
      throw Error(ErrorCode::NonFiniteEntry, msg.str());
    }
  }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::EmptyInput, "matrix must have at least one row and column");
  }
  entries_.assign(rows * cols, 0.0);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::EmptyInput, "matrix must have at least one row and column");
  }
  if (entries_.size() != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries for a " << rows << "x"
        << cols << " matrix, got " << entries_.size();
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  std::vector<double> entries;
  entries.reserve(m * n);
  for (const auto& r : rows) {
    if (r.size() != n) {
      throw Error(ErrorCode::RaggedRows, "rows have differing lengths");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(m, n, std::move(entries));
}

double DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  }
  return entries_[i * cols_ + j];
}

void DenseMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteEntry, "cannot store a non-finite entry");
  }
  entries_[i * cols_ + j] = value;
}

std::span<const double> DenseMatrix::row(std::size_t i) const {
  if (i >= rows_) {
    throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  }
  return std::span<const double>(entries_).subspan(i * cols_, cols_);
}

Vector DenseMatrix::column(std::size_t j) const {
  if (j >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  }
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = entries_[i * cols_ + j];
  return v;
}

double inf_norm(std::span<const double> v) noexcept {
  double norm = 0.0;
  for (double e : v) norm = std::max(norm, std::abs(e));
  return norm;
}

double inf_norm(const DenseMatrix& m) noexcept {
  double norm = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (double e : m.row(i)) sum += std::abs(e);
    norm = std::max(norm, sum);
  }
  return norm;
}

Vector multiply(const DenseMatrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::LengthMismatch, "vector length does not match column count");
  }
  Vector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// --- row operations ----------------------------------------------------------

namespace {

void check_row(std::size_t rows, std::size_t i) {
  if (i >= rows) {
    std::ostringstream msg;
    msg << "row index " << i << " out of range for " << rows << " rows";
    throw Error(ErrorCode::IndexOutOfRange, msg.str());
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string to_string(const RowOp& op) {
  return std::visit(
      Overloaded{
          [](const Swap& s) {
            return "Swap(" + std::to_string(s.first) + ", " +
                   std::to_string(s.second) + ")";
          },
          [](const Scale& s) {
            return "Scale(" + std::to_string(s.row) + ", " +
                   format_scalar(s.factor) + ")";
          },
          [](const AddScaled& s) {
            return "AddScaled(" + std::to_string(s.target) + ", " +
                   std::to_string(s.source) + ", " + format_scalar(s.factor) +
                   ")";
          },
      },
      op);
}

namespace detail {

void apply_row_op_in_place(std::vector<double>& e, std::size_t rows, std::size_t n,
                           const RowOp& op, double cleanup_tolerance) {
  const double tol = cleanup_tolerance;
  std::visit(
      Overloaded{
          [&](const Swap& s) {
            check_row(rows, s.first);
            check_row(rows, s.second);
            if (s.first == s.second) return;
            std::swap_ranges(e.begin() + s.first * n, e.begin() + (s.first + 1) * n,
                             e.begin() + s.second * n);
          },
          [&](const Scale& s) {
            check_row(rows, s.row);
            if (s.factor == 0.0) {
              throw Error(ErrorCode::ZeroScaleFactor, "row scale factor must be nonzero");
            }
            if (!std::isfinite(s.factor)) {
              throw Error(ErrorCode::NonFiniteEntry, "row scale factor must be finite");
            }
            bool leading_seen = false;
            for (std::size_t j = 0; j < n; ++j) {
              double& v = e[s.row * n + j];
              v *= s.factor;
              if (tol <= 0.0) continue;
              if (std::abs(v) <= tol) {
                v = 0.0;
              } else if (!leading_seen) {
                leading_seen = true;
                if (std::abs(v - 1.0) <= tol) v = 1.0;
              }
            }
          },
          [&](const AddScaled& s) {
            check_row(rows, s.target);
            check_row(rows, s.source);
            if (s.target == s.source) {
              throw Error(ErrorCode::InvalidArgument,
                          "AddScaled needs distinct target and source rows");
            }
            if (!std::isfinite(s.factor)) {
              throw Error(ErrorCode::NonFiniteEntry, "row factor must be finite");
            }
            double* target = e.data() + s.target * n;
            const double* source = e.data() + s.source * n;
            for (std::size_t j = 0; j < n; ++j) {
              const double t = target[j];
              const double fs = s.factor * source[j];
              double v = t + fs;
              if (tol > 0.0 &&
                  std::abs(v) <= tol * std::max({1.0, std::abs(t), std::abs(fs)})) {
                v = 0.0;
              }
              target[j] = v;
            }
          },
      },
      op);
}

}  // namespace detail

DenseMatrix apply_row_op(const DenseMatrix& m, const RowOp& op,
                         double cleanup_tolerance) {
  std::vector<double> e(m.entries().begin(), m.entries().end());
  detail::apply_row_op_in_place(e, m.rows(), m.cols(), op, cleanup_tolerance);
  return DenseMatrix(m.rows(), m.cols(), std::move(e));
}

DenseMatrix flush_small_entries(const DenseMatrix& m, double tolerance) {
  std::vector<double> e(m.entries().begin(), m.entries().end());
  for (double& v : e) {
    if (std::abs(v) <= tolerance) v = 0.0;
  }
  return DenseMatrix(m.rows(), m.cols(), std::move(e));
}

// --- determinant -------------------------------------------------------------

namespace detail {

ScaledDeterminant scaled_determinant(const DenseMatrix& m, double pivot_tolerance) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "determinant requires a square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<double> lu(m.entries().begin(), m.entries().end());
  ScaledDeterminant det;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu[i * n + k]);
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (best <= pivot_tolerance) return {0.0, 0};
    if (p != k) {
      std::swap_ranges(lu.begin() + k * n, lu.begin() + (k + 1) * n,
                       lu.begin() + p * n);
      det.mantissa = -det.mantissa;
    }
    const double pivot = lu[k * n + k];
    int e = 0;
    det.mantissa *= std::frexp(pivot, &e);
    det.exponent += e;
    det.mantissa = std::frexp(det.mantissa, &e);
    det.exponent += e;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu[i * n + k] / pivot;
      if (l == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= l * lu[k * n + j];
    }
  }
  return det;
}

}  // namespace detail

double determinant(const DenseMatrix& m, double pivot_tolerance) {
  const auto det = detail::scaled_determinant(m, pivot_tolerance);
  if (det.is_zero()) return 0.0;
  const double value = det.value();
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::NonFiniteEntry, "determinant overflows double precision");
  }
  return value;
}

DenseMatrix replace_column(const DenseMatrix& m, std::size_t j,
                           std::span<const double> v) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, "column replacement requires a square matrix");
  }
  if (j >= m.cols()) {
    throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  }
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::LengthMismatch, "replacement column has the wrong length");
  }
  require_finite(v, "replacement column");
  const std::size_t n = m.cols();
  std::vector<double> e(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < m.rows(); ++i) e[i * n + j] = v[i];
  return DenseMatrix(m.rows(), n, std::move(e));
}

}  // namespace linsolve
