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
#include "teq/calculus.hpp"

#include <algorithm>
#include <numeric>

#include "teq/errors.hpp"

namespace teq {

namespace {

void require_pivot(const Matrix& a, Pivot p) {
  if (p.row >= a.rows() || p.col >= a.cols()) {
    throw PivotError("pivot position out of range");
  }
  if (a(p.row, p.col) == 0) throw PivotError("pivot entry is zero");
}

void require_zero_one(const Matrix& b) {
  if (!b.is_zero_one()) throw DomainError("expected a 0/1 matrix");
}

int sign_of(const Rat& x) { return sgn(x) < 0 ? -1 : 1; }

}  // namespace

Matrix pivot(const Matrix& a, Pivot p) {
  require_pivot(a, p);
  const Index n = a.cols();
  std::vector<Rat> out(a.entries());
  const Rat inv = 1 / a(p.row, p.col);
  for (Index j = 0; j < n; ++j) out[p.row * n + j] *= inv;
  for (Index i = 0; i < a.rows(); ++i) {
    if (i == p.row) continue;
    const Rat f = out[i * n + p.col];
    if (f == 0) continue;
    for (Index j = 0; j < n; ++j) out[i * n + j] -= f * out[p.row * n + j];
  }
  return Matrix(a.rows(), n, std::move(out));
}

Matrix trim(const Matrix& a, Pivot p) {
  return pivot(a, p).without(p.row, p.col);
}

Matrix resign(const Matrix& a, const Signs& row_signs, const Signs& col_signs) {
  if (row_signs.size() != a.rows() || col_signs.size() != a.cols()) {
    throw DimensionError("sign vector length mismatch");
  }
  std::vector<Rat> out;
  out.reserve(a.entries().size());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const int s = row_signs[i] * col_signs[j];
      if (s != 1 && s != -1) throw DomainError("signs must be +1 or -1");
      out.emplace_back(s < 0 ? Rat(-a(i, j)) : a(i, j));
    }
  }
  return Matrix(a.rows(), a.cols(), std::move(out));
}

bool is_essentially_pm1(const Matrix& a) {
  for (Index i = 0; i < a.rows(); ++i) {
    Rat magnitude = 0;
    for (const auto& x : a.row_view(i)) {
      if (x == 0) continue;
      if (magnitude == 0) {
        magnitude = abs(x);
      } else if (abs(x) != magnitude) {
        return false;
      }
    }
  }
  return true;
}

Matrix rescale(const Matrix& a) {
  std::vector<Rat> out;
  out.reserve(a.entries().size());
  for (Index i = 0; i < a.rows(); ++i) {
    Rat magnitude = 0;
    for (const auto& x : a.row_view(i)) {
      if (x == 0) continue;
      if (magnitude == 0) {
        magnitude = abs(x);
      } else if (abs(x) != magnitude) {
        throw DomainError("row " + std::to_string(i) +
                          " is not essentially 0/+-1");
      }
    }
    for (const auto& x : a.row_view(i)) {
      out.emplace_back(magnitude == 0 ? x : Rat(x / magnitude));
    }
  }
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix nega(const Matrix& a) {
  if (!a.is_pm1()) throw DomainError("nega expects a +-1 matrix");
  std::vector<Rat> out;
  out.reserve(a.entries().size());
  for (const auto& x : a.entries()) out.emplace_back(x < 0 ? 1 : 0);
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix ones(Index rows, Index cols) {
  return Matrix(rows, cols, std::vector<Rat>(rows * cols, Rat(1)));
}

Matrix from_core(const Matrix& core) {
  require_zero_one(core);
  const Index m = core.rows() + 1;
  const Index n = core.cols() + 1;
  std::vector<Rat> out(m * n, Rat(1));
  for (Index i = 1; i < m; ++i) {
    for (Index j = 1; j < n; ++j) out[i * n + j] = 1 - 2 * core(i - 1, j - 1);
  }
  return Matrix(m, n, std::move(out));
}

Matrix CoreForm::reconstruct() const {
  const Matrix canonical = from_core(core);
  const Index m = canonical.rows();
  const Index n = canonical.cols();
  std::vector<Rat> out(m * n);
  for (Index k = 0; k < m; ++k) {
    for (Index l = 0; l < n; ++l) {
      const Index i = row_perm[k];
      const Index j = col_perm[l];
      const int s = row_signs[i] * col_signs[j];
      out[i * n + j] = s < 0 ? Rat(-canonical(k, l)) : canonical(k, l);
    }
  }
  return Matrix(m, n, std::move(out));
}

CoreForm core_of(const Matrix& a, Index first_row, Index first_col) {
  if (!a.is_pm1()) throw DomainError("core_of expects a +-1 matrix");
  if (a.empty()) throw DimensionError("core_of expects a nonempty matrix");
  if (first_row >= a.rows() || first_col >= a.cols()) {
    throw DimensionError("core_of: leading position out of range");
  }
  CoreForm form;
  form.row_perm.push_back(first_row);
  for (Index i = 0; i < a.rows(); ++i) {
    if (i != first_row) form.row_perm.push_back(i);
  }
  form.col_perm.push_back(first_col);
  for (Index j = 0; j < a.cols(); ++j) {
    if (j != first_col) form.col_perm.push_back(j);
  }
  form.col_signs.resize(a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    form.col_signs[j] = sign_of(a(first_row, j));
  }
  form.row_signs.resize(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    form.row_signs[i] = sign_of(a(i, first_col)) * form.col_signs[first_col];
  }
  std::vector<Rat> core;
  core.reserve((a.rows() - 1) * (a.cols() - 1));
  for (Index k = 1; k < a.rows(); ++k) {
    for (Index l = 1; l < a.cols(); ++l) {
      const Index i = form.row_perm[k];
      const Index j = form.col_perm[l];
      const Rat v = a(i, j) * form.row_signs[i] * form.col_signs[j];
      core.emplace_back(v < 0 ? 1 : 0);
    }
  }
  form.core = Matrix(a.rows() - 1, a.cols() - 1, std::move(core));
  return form;
}

Matrix row_complement(const Matrix& b, Index i) {
  require_zero_one(b);
  if (i >= b.rows()) throw DimensionError("row complement index out of range");
  std::vector<Rat> out(b.entries());
  const Index n = b.cols();
  for (Index r = 0; r < b.rows(); ++r) {
    if (r == i) continue;
    for (Index j = 0; j < n; ++j) {
      out[r * n + j] = (b(r, j) != b(i, j)) ? 1 : 0;
    }
  }
  return Matrix(b.rows(), n, std::move(out));
}

Matrix col_complement(const Matrix& b, Index j) {
  require_zero_one(b);
  if (j >= b.cols()) {
    throw DimensionError("column complement index out of range");
  }
  std::vector<Rat> out(b.entries());
  const Index n = b.cols();
  for (Index r = 0; r < b.rows(); ++r) {
    for (Index c = 0; c < n; ++c) {
      if (c == j) continue;
      out[r * n + c] = (b(r, c) != b(r, j)) ? 1 : 0;
    }
  }
  return Matrix(b.rows(), n, std::move(out));
}

Matrix complement(const Matrix& b, Index i, Index j) {
  require_zero_one(b);
  if (i > b.rows() || j > b.cols()) {
    throw DimensionError("complement index out of range");
  }
  Matrix out = b;
  if (i > 0) out = row_complement(out, i - 1);
  if (j > 0) out = col_complement(out, j - 1);
  return out;
}

std::vector<Matrix> complement_orbit(const Matrix& b, bool dedupe) {
  require_zero_one(b);
  std::vector<Matrix> members;
  std::vector<Matrix> keys;
  for (Index i = 0; i <= b.rows(); ++i) {
    for (Index j = 0; j <= b.cols(); ++j) {
      Matrix member = complement(b, i, j);
      if (dedupe) {
        Matrix key = permutation_canonical(member);
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(std::move(key));
      }
      members.push_back(std::move(member));
    }
  }
  return members;
}

Matrix permutation_canonical(const Matrix& a) {
  IndexList cols(a.cols());
  std::iota(cols.begin(), cols.end(), Index{0});
  std::vector<Vector> best;
  bool have_best = false;
  do {
    std::vector<Vector> rows;
    rows.reserve(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
      Vector r;
      r.reserve(cols.size());
      for (Index j : cols) r.push_back(a(i, j));
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    if (!have_best || rows < best) {
      best = std::move(rows);
      have_best = true;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));
  return Matrix::from_rows(best, a.cols());
}

bool equal_up_to_permutation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto sorted_lines = [](const Matrix& m, bool by_rows) {
    std::vector<Vector> lines;
    const Index count = by_rows ? m.rows() : m.cols();
    for (Index k = 0; k < count; ++k) {
      Vector line = by_rows ? m.row(k) : m.col(k);
      std::sort(line.begin(), line.end());
      lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
  };
  if (sorted_lines(a, true) != sorted_lines(b, true) ||
      sorted_lines(a, false) != sorted_lines(b, false)) {
    return false;
  }
  return permutation_canonical(a) == permutation_canonical(b);
}

}  // namespace teq
