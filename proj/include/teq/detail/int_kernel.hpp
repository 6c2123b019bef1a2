// Copyright 2026 The teq Authors
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
#ifndef TEQ_DETAIL_INT_KERNEL_HPP_
#define TEQ_DETAIL_INT_KERNEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "teq/matrix.hpp"

namespace teq::detail {

// Machine-integer copy of a small integral matrix, used by the brute-force
// minor enumerations. Determinants fall back to GMP on overflow.
struct SmallIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  std::int64_t operator()(int i, int j) const { return a[i * cols + j]; }
};

// Integral matrices with entries bounded by 2^20; nullopt otherwise.
std::optional<SmallIntMatrix> to_small_int(const Matrix& m);

// Each row multiplied by the lcm of its denominators.
Matrix clear_row_denominators(const Matrix& m);

// In-place Bareiss on a k x k row-major buffer. Returns false when an
// intermediate value leaves the safe int64 range.
bool small_det(std::int64_t* buf, int k, std::int64_t& out);

// Determinant of the square submatrix of m on the given rows and columns.
Integer minor(const SmallIntMatrix& m, std::span<const Index> rows,
              std::span<const Index> cols);

Integer integer_det(const Matrix& m);

}  // namespace teq::detail

#endif  // TEQ_DETAIL_INT_KERNEL_HPP_
