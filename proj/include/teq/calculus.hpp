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
#ifndef TEQ_CALCULUS_HPP_
#define TEQ_CALCULUS_HPP_

#include <vector>

#include "teq/matrix.hpp"

namespace teq {

using Signs = std::vector<int>;

// A position whose entry is nonzero. Indices are 0-based.
struct Pivot {
  Index row = 0;
  Index col = 0;
};

// A/p: row p.row divided by its pivot entry, then eliminated from every
// other row so column p.col becomes a unit column.
Matrix pivot(const Matrix& a, Pivot p);

// A//p: pivot(a, p) with the pivot row and column deleted.
Matrix trim(const Matrix& a, Pivot p);

// diag(row_signs) * a * diag(col_signs).
Matrix resign(const Matrix& a, const Signs& row_signs, const Signs& col_signs);

// True iff in every row all nonzero entries share one absolute value.
bool is_essentially_pm1(const Matrix& a);

// Divides every row by the common absolute value of its nonzero entries.
// Throws DomainError when a row mixes magnitudes.
Matrix rescale(const Matrix& a);

// 0/1 matrix marking the -1 entries of a +-1 matrix: a = J - 2 nega(a).
Matrix nega(const Matrix& a);

// All-ones matrix.
Matrix ones(Index rows, Index cols);

// A +-1 matrix written as diag(row_signs) P [[1, 1^T], [1, J - 2 core]] Q
// diag(col_signs), where P and Q move the chosen first row/column to the
// front.
struct CoreForm {
  Matrix core;
  Signs row_signs;
  Signs col_signs;
  IndexList row_perm;  // row_perm[k] = original row placed at position k
  IndexList col_perm;

  Matrix reconstruct() const;
};

// [[1, 1^T], [1, J - 2B]] for a 0/1 matrix B.
Matrix from_core(const Matrix& core);

// Columns are resigned first (from the first row), then rows (from the first
// column).
CoreForm core_of(const Matrix& a, Index first_row = 0, Index first_col = 0);

// Row-i complement: every other row replaced by its mod-2 sum with row i.
Matrix row_complement(const Matrix& b, Index i);
Matrix col_complement(const Matrix& b, Index j);

// B^{[j]}_{[i]} with 1-based i, j and 0 meaning "no operation".
Matrix complement(const Matrix& b, Index i, Index j);

// The (m+1)(n+1) members B^{[j]}_{[i]}, ordered by (i, j). With dedupe,
// members equal up to row/column permutation are reported once.
std::vector<Matrix> complement_orbit(const Matrix& b, bool dedupe = false);

// Canonical representative under row and column permutations: the
// lexicographically smallest row-sorted matrix over all column orders.
// Exponential in cols; intended for cols <= 8.
Matrix permutation_canonical(const Matrix& a);

bool equal_up_to_permutation(const Matrix& a, const Matrix& b);

}  // namespace teq

#endif  // TEQ_CALCULUS_HPP_
