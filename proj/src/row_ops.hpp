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
#include <vector>

#include "linsolve/matrix.hpp"

namespace linsolve::detail {

/// In-place form of apply_row_op on a rows × cols row-major buffer. Validates
/// the operation before touching any entry. Results may be non-finite; the
/// caller decides whether that is an error.
void apply_row_op_in_place(std::vector<double>& entries, std::size_t rows,
                           std::size_t cols, const RowOp& op, double cleanup_tolerance);

}  // namespace linsolve::detail
