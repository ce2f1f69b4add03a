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

#include <cmath>

#include "linsolve/matrix.hpp"

namespace linsolve::detail {

/// det = mantissa · 2^exponent, kept apart so products of many pivots cannot
/// overflow. mantissa == 0 marks a pivot at or below tolerance.
struct ScaledDeterminant {
  double mantissa = 1.0;
  long exponent = 0;

  bool is_zero() const noexcept { return mantissa == 0.0; }
  double value() const noexcept {
    return std::ldexp(mantissa, static_cast<int>(exponent));
  }
};

ScaledDeterminant scaled_determinant(const DenseMatrix& m, double pivot_tolerance);

/// numerator / denominator, evaluated without forming either value.
inline double ratio(const ScaledDeterminant& num, const ScaledDeterminant& den) {
  if (num.is_zero()) return 0.0;
  return std::ldexp(num.mantissa / den.mantissa,
                    static_cast<int>(num.exponent - den.exponent));
}

}  // namespace linsolve::detail
