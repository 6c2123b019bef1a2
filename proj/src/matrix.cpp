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
#include "teq/matrix.hpp"

#include <sstream>
#include <utility>

#include "teq/detail/int_kernel.hpp"
#include "teq/errors.hpp"

namespace teq {

Matrix::Matrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Index rows, Index cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count does not match its shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, Index cols) {
  if (!rows.empty()) cols = rows.front().size();
  std::vector<Rat> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged row list");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::from_int_rows(const std::vector<IntVector>& rows, Index cols) {
  std::vector<Vector> rat;
  rat.reserve(rows.size());
  for (const auto& r : rows) rat.push_back(to_rational(r));
  return from_rows(rat, cols);
}

Matrix Matrix::identity(Index n) {
  std::vector<Rat> entries(n * n);
  for (Index i = 0; i < n; ++i) entries[i * n + i] = 1;
  return Matrix(n, n, std::move(entries));
}

Vector Matrix::row(Index i) const {
  const auto v = row_view(i);
  return Vector(v.begin(), v.end());
}

Vector Matrix::col(Index j) const {
  Vector out;
  out.reserve(rows_);
  for (Index i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IndexList Matrix::support(Index i) const {
  IndexList out;
  for (Index j = 0; j < cols_; ++j) {
    if ((*this)(i, j) != 0) out.push_back(j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  std::vector<Rat> entries;
  entries.reserve(entries_.size());
  for (Index j = 0; j < cols_; ++j) {
    for (Index i = 0; i < rows_; ++i) entries.push_back((*this)(i, j));
  }
  return Matrix(cols_, rows_, std::move(entries));
}

Matrix Matrix::select_rows(std::span<const Index> rows) const {
  std::vector<Rat> entries;
  entries.reserve(rows.size() * cols_);
  for (Index i : rows) {
    if (i >= rows_) throw DimensionError("row index out of range");
    const auto r = row_view(i);
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols_, std::move(entries));
}

Matrix Matrix::select_cols(std::span<const Index> cols) const {
  std::vector<Rat> entries;
  entries.reserve(rows_ * cols.size());
  for (Index i = 0; i < rows_; ++i) {
    for (Index j : cols) {
      if (j >= cols_) throw DimensionError("column index out of range");
      entries.push_back((*this)(i, j));
    }
  }
  return Matrix(rows_, cols.size(), std::move(entries));
}

Matrix Matrix::submatrix(std::span<const Index> rows,
                         std::span<const Index> cols) const {
  return select_rows(rows).select_cols(cols);
}

Matrix Matrix::without(Index row, Index col) const {
  std::vector<Rat> entries;
  const Index r = row < rows_ ? rows_ - 1 : rows_;
  const Index c = col < cols_ ? cols_ - 1 : cols_;
  entries.reserve(r * c);
  for (Index i = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (Index j = 0; j < cols_; ++j) {
      if (j == col) continue;
      entries.push_back((*this)(i, j));
    }
  }
  return Matrix(r, c, std::move(entries));
}

Matrix Matrix::scaled(const Rat& factor) const {
  std::vector<Rat> entries;
  entries.reserve(entries_.size());
  for (const auto& x : entries_) entries.emplace_back(x * factor);
  return Matrix(rows_, cols_, std::move(entries));
}

bool Matrix::is_integral() const {
  for (const auto& x : entries_) {
    if (!is_integer(x)) return false;
  }
  return true;
}

bool Matrix::is_zero_one() const {
  for (const auto& x : entries_) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

bool Matrix::is_pm1() const {
  for (const auto& x : entries_) {
    if (x != 1 && x != -1) return false;
  }
  return true;
}

bool Matrix::is_zero_pm1() const {
  for (const auto& x : entries_) {
    if (x != 0 && x != 1 && x != -1) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("product shape mismatch");
  std::vector<Rat> entries(a.rows() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        entries[i * b.cols() + j] += a(i, k) * b(k, j);
      }
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(entries));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("sum shape mismatch");
  }
  std::vector<Rat> entries(a.entries());
  for (Index k = 0; k < entries.size(); ++k) entries[k] += b.entries()[k];
  return Matrix(a.rows(), a.cols(), std::move(entries));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.negated(); }

Rat det(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rat scale = 1;
  Matrix integral = m;
  if (!m.is_integral()) {
    integral = detail::clear_row_denominators(m);
    for (Index i = 0; i < m.rows(); ++i) {
      Integer row_scale = 1;
      for (const auto& x : m.row_view(i)) row_scale = lcm(row_scale, x.get_den());
      scale /= row_scale;
    }
  }
  if (auto small = detail::to_small_int(integral)) {
    std::vector<std::int64_t> buf = small->a;
    std::int64_t out = 0;
    if (detail::small_det(buf.data(), small->rows, out)) {
      return Rat(Integer(static_cast<long>(out))) * scale;
    }
  }
  return Rat(detail::integer_det(integral)) * scale;
}

namespace {

// Row echelon form over Q; returns pivot columns.
IndexList echelon(std::vector<Rat>& a, Index rows, Index cols) {
  IndexList pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = rows;
    for (Index i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r) {
      for (Index j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    for (Index i = r + 1; i < rows; ++i) {
      if (a[i * cols + c] == 0) continue;
      const Rat f = a[i * cols + c] / a[r * cols + c];
      for (Index j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Index rank(const Matrix& m) {
  std::vector<Rat> a = m.entries();
  return echelon(a, m.rows(), m.cols()).size();
}

IndexList independent_columns(const Matrix& m) {
  std::vector<Rat> a = m.entries();
  return echelon(a, m.rows(), m.cols());
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const Index n = m.rows();
  const Index w = 2 * n;
  std::vector<Rat> a(n * w);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a[i * w + j] = m(i, j);
    a[i * w + n + i] = 1;
  }
  for (Index c = 0; c < n; ++c) {
    Index p = n;
    for (Index i = c; i < n; ++i) {
      if (a[i * w + c] != 0) {
        p = i;
        break;
      }
    }
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != c) {
      for (Index j = 0; j < w; ++j) std::swap(a[p * w + j], a[c * w + j]);
    }
    const Rat inv = 1 / a[c * w + c];
    for (Index j = 0; j < w; ++j) a[c * w + j] *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == c || a[i * w + c] == 0) continue;
      const Rat f = a[i * w + c];
      for (Index j = 0; j < w; ++j) a[i * w + j] -= f * a[c * w + j];
    }
  }
  std::vector<Rat> out;
  out.reserve(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out.push_back(a[i * w + n + j]);
  }
  return Matrix(n, n, std::move(out));
}

Vector solve(const Matrix& m, const Vector& b) {
  if (!m.is_square() || b.size() != m.rows()) {
    throw DimensionError("solve: shape mismatch");
  }
  const Index n = m.rows();
  const Index w = n + 1;
  std::vector<Rat> a(n * w);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a[i * w + j] = m(i, j);
    a[i * w + n] = b[i];
  }
  for (Index c = 0; c < n; ++c) {
    Index p = n;
    for (Index i = c; i < n; ++i) {
      if (a[i * w + c] != 0) {
        p = i;
        break;
      }
    }
    if (p == n) throw SingularMatrixError("solve: singular system");
    if (p != c) {
      for (Index j = 0; j < w; ++j) std::swap(a[p * w + j], a[c * w + j]);
    }
    for (Index i = c + 1; i < n; ++i) {
      if (a[i * w + c] == 0) continue;
      const Rat f = a[i * w + c] / a[c * w + c];
      for (Index j = c; j < w; ++j) a[i * w + j] -= f * a[c * w + j];
    }
  }
  Vector x(n);
  for (Index i = n; i-- > 0;) {
    Rat s = a[i * w + n];
    for (Index j = i + 1; j < n; ++j) s -= a[i * w + j] * x[j];
    x[i] = s / a[i * w + i];
  }
  return x;
}

RowSet::RowSet(Matrix all) : matrix(std::move(all)) {
  selected.resize(matrix.rows());
  for (Index i = 0; i < selected.size(); ++i) selected[i] = i;
}

RowSet::RowSet(Matrix m, IndexList rows)
    : matrix(std::move(m)), selected(std::move(rows)) {
  std::vector<bool> seen(matrix.rows(), false);
  for (Index i : selected) {
    if (i >= matrix.rows()) throw DimensionError("row index out of range");
    if (seen[i]) throw DimensionError("duplicate row index in row set");
    seen[i] = true;
  }
}

Integer gcddet(const RowSet& set) { return gcddet(set.rows()); }

Integer gcddet(const Matrix& rows) {
  if (!rows.is_integral()) throw DomainError("gcddet needs integer entries");
  const Index k = rows.rows();
  if (k == 0) return 1;
  if (k > rows.cols()) return 0;
  IndexList all(k);
  for (Index i = 0; i < k; ++i) all[i] = i;
  Integer g = 0;
  const auto small = detail::to_small_int(rows);
  for_each_combination(rows.cols(), k, [&](const IndexList& cols) {
    Integer d = small ? detail::minor(*small, all, cols)
                      : detail::integer_det(rows.select_cols(cols));
    g = gcd(g, d);
    return g != 1;
  });
  return abs(g);
}

std::vector<IndexList> row_components(const Matrix& m) {
  std::vector<Index> parent(m.rows());
  for (Index i = 0; i < m.rows(); ++i) parent[i] = i;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index j = 0; j < m.cols(); ++j) {
    Index first = m.rows();
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 0) continue;
      if (first == m.rows()) {
        first = i;
      } else {
        parent[find(i)] = find(first);
      }
    }
  }
  std::vector<IndexList> out;
  std::vector<Index> slot(m.rows(), m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    const Index root = find(i);
    if (slot[root] == m.rows()) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (Index j = 0; j < m.cols(); ++j) {
      out << (j ? ", " : "") << to_string(m(i, j));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace teq
