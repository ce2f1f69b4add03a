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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linsolve/error.hpp"

namespace linsolve {

/// Right-hand sides, unknowns and iterates. Finiteness is checked wherever a
/// vector enters the library.
using Vector = std::vector<double>;

/// Absolute magnitude at or below which a pivot counts as zero.
inline constexpr double kDefaultPivotTolerance = 1e-12;

/// Dense, row-major, real matrix with at least one row and one column. Every
/// stored entry is finite; mutating accessors reject NaN and infinities.
class DenseMatrix {
 public:
  /// Zero matrix of the given shape.
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> row(std::size_t i) const;
  std::span<const double> entries() const noexcept { return entries_; }
  Vector column(std::size_t j) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

/// Throws NonFiniteEntry if any element of `values` is NaN or infinite.
void require_finite(std::span<const double> values, std::string_view what);

/// Maximum absolute value, 0 for an empty range.
double inf_norm(std::span<const double> v) noexcept;
/// Maximum absolute row sum.
double inf_norm(const DenseMatrix& m) noexcept;

/// A·x for an m×n matrix and a length-n vector.
Vector multiply(const DenseMatrix& a, std::span<const double> x);

// --- elementary row operations --------------------------------------------

struct Swap {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const Swap&, const Swap&) = default;
};

struct Scale {
  std::size_t row;
  double factor;
  friend bool operator==(const Scale&, const Scale&) = default;
};

/// target ← target + factor · source
struct AddScaled {
  std::size_t target;
  std::size_t source;
  double factor;
  friend bool operator==(const AddScaled&, const AddScaled&) = default;
};

using RowOp = std::variant<Swap, Scale, AddScaled>;

std::string to_string(const RowOp& op);

/// Applies one elementary row operation and returns the transformed copy.
///
/// With `cleanup_tolerance` > 0 the result is tidied the way elimination needs
/// it:
///  - AddScaled: an updated entry v = t + f·s is flushed to exact 0 when
///    |v| <= tol · max(1, |t|, |f·s|) (cancellation residue);
///  - Scale: entries with |v| <= tol become 0, and the row's leading nonzero
///    entry snaps to exactly 1 when it lies within tol of 1.
/// Swap is unaffected. Tolerance 0 gives plain arithmetic.
///
/// Throws IndexOutOfRange or ZeroScaleFactor; NonFiniteEntry on overflow.
DenseMatrix apply_row_op(const DenseMatrix& m, const RowOp& op,
                         double cleanup_tolerance = 0.0);

/// Zeroes every entry with |v| <= tolerance.
DenseMatrix flush_small_entries(const DenseMatrix& m, double tolerance);

// --- determinants and column replacement ----------------------------------

/// Determinant by LU factorisation with partial pivoting. Returns exactly 0
/// once a pivot magnitude drops to `pivot_tolerance` or below.
/// Throws NotSquare.
double determinant(const DenseMatrix& m,
                   double pivot_tolerance = kDefaultPivotTolerance);

/// Copy of `m` with column `j` replaced by `v`.
/// Throws NotSquare, IndexOutOfRange, LengthMismatch, NonFiniteEntry.
DenseMatrix replace_column(const DenseMatrix& m, std::size_t j,
                           std::span<const double> v);

// --- text format -------------------------------------------------------------

/// Parses "a, b, c ; d, e, f ; ...": commas split entries, semicolons split
/// rows, spaces, tabs and newlines are ignored around tokens.
/// Throws ParseError with EmptyInput, RaggedRows, BadNumber or NonFiniteEntry.
DenseMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix: "1,2;3,4", shortest round-trip decimals.
std::string format_matrix(const DenseMatrix& m);

/// Shortest decimal that parses back to the same double, always with '.'.
std::string format_scalar(double value);

}  // namespace linsolve
