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
#ifndef TEQ_MATRIX_HPP_
#define TEQ_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teq/rational.hpp"

namespace teq {

using Index = std::size_t;
using IndexList = std::vector<Index>;

// Dense row-major matrix of exact rationals. Values are immutable once
// built; every transform returns a new matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols);
  Matrix(Index rows, Index cols, std::vector<Rat> entries);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix from_rows(const std::vector<Vector>& rows, Index cols = 0);
  static Matrix from_int_rows(const std::vector<IntVector>& rows,
                              Index cols = 0);
  static Matrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Rat& operator()(Index i, Index j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const Rat> row_view(Index i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector row(Index i) const;
  Vector col(Index j) const;
  const std::vector<Rat>& entries() const { return entries_; }

  // Column indices of the nonzero entries of row i.
  IndexList support(Index i) const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const Index> rows) const;
  Matrix select_cols(std::span<const Index> cols) const;
  Matrix submatrix(std::span<const Index> rows,
                   std::span<const Index> cols) const;
  Matrix without(Index row, Index col) const;
  Matrix scaled(const Rat& factor) const;
  Matrix negated() const { return scaled(Rat(-1)); }

  bool is_integral() const;
  bool is_zero_one() const;
  bool is_pm1() const;
  bool is_zero_pm1() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Rat> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Fraction-free (Bareiss) determinant; rational input is brought to an
// integer matrix by row scaling first.
Rat det(const Matrix& m);
Index rank(const Matrix& m);
Matrix inverse(const Matrix& m);

// Solves m x = b for square nonsingular m.
Vector solve(const Matrix& m, const Vector& b);

// Greedy lexicographically-first maximal set of independent columns.
IndexList independent_columns(const Matrix& m);

// Rows of the matrix selected by index.
struct RowSet {
  Matrix matrix;
  IndexList selected;

  RowSet() = default;
  explicit RowSet(Matrix all);
  RowSet(Matrix m, IndexList rows);

  Matrix rows() const { return matrix.select_rows(selected); }
  Index size() const { return selected.size(); }
};

// gcd of |maximal minors| of the selected rows; 0 iff dependent; 1 for the
// empty set. Integer entries only.
Integer gcddet(const RowSet& set);
Integer gcddet(const Matrix& rows);

std::string to_string(const Matrix& m);

// Rows grouped by the connected components of the row/column support graph.
// Each component is sorted and components are ordered by first row.
std::vector<IndexList> row_components(const Matrix& m);

// Lexicographic combinations helper: calls f(indices) for every k-subset of
// {0..n-1} in lexicographic order until f returns false. Returns false if
// stopped early.
template <typename F>
bool for_each_combination(Index n, Index k, F&& f) {
  if (k > n) return true;
  IndexList idx(k);
  for (Index i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const IndexList&>(idx))) return false;
    Index i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (Index j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace teq

#endif  // TEQ_MATRIX_HPP_
