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
#include "teq/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "teq/calculus.hpp"
#include "teq/detail/int_kernel.hpp"
#include "teq/errors.hpp"

namespace teq {

namespace {

// Absolute values of all maximal minors, handed to f one at a time until it
// returns false. Rows are scaled to integers first; that multiplies every
// minor by the same positive constant, which is returned.
template <typename F>
Rat visit_maximal_minors(const Matrix& rows, F&& f) {
  Rat scale = 1;
  Matrix integral = rows;
  if (!rows.is_integral()) {
    integral = detail::clear_row_denominators(rows);
    for (Index i = 0; i < rows.rows(); ++i) {
      for (Index j = 0; j < rows.cols(); ++j) {
        if (rows(i, j) != 0) {
          scale *= abs(integral(i, j) / rows(i, j));
          break;
        }
      }
    }
  }
  IndexList all_rows(rows.rows());
  for (Index i = 0; i < rows.rows(); ++i) all_rows[i] = i;
  const auto small = detail::to_small_int(integral);
  for_each_combination(rows.cols(), rows.rows(), [&](const IndexList& cols) {
    Integer d = small ? detail::minor(*small, all_rows, cols)
                      : detail::integer_det(integral.submatrix(all_rows, cols));
    return f(Integer(abs(d)));
  });
  return scale;
}

// Common nonzero |maximal minor| in integer-scaled units, or 0 when rows
// are dependent, or -1 when two nonzero minors differ.
Integer common_minor(const Matrix& rows, Rat* scale_out = nullptr) {
  Integer common = 0;
  Rat scale = visit_maximal_minors(rows, [&](const Integer& d) {
    if (d == 0) return true;
    if (common == 0) {
      common = d;
      return true;
    }
    if (d != common) {
      common = -1;
      return false;
    }
    return true;
  });
  if (scale_out) *scale_out = scale;
  return common;
}

bool in_unit_range(const Integer& d) { return d >= -1 && d <= 1; }

// Sign-normalized, rescaled rows sorted, used as the memo key of the trim
// recursion. Row order and row scaling do not affect total equimodularity.
std::string trim_key(const Matrix& a) {
  std::vector<Vector> rows;
  for (Index i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    for (const auto& x : r) {
      if (x != 0) {
        if (x < 0) {
          for (auto& y : r) y = -y;
        }
        break;
      }
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  std::string key = std::to_string(a.cols()) + ":";
  for (const auto& r : rows) {
    for (const auto& x : r) key += to_string(x) + ",";
    key += ";";
  }
  return key;
}

bool te_by_trims(const Matrix& a, std::map<std::string, bool>& memo) {
  if (!is_essentially_pm1(a)) return false;
  if (a.rows() <= 1) return true;
  const Matrix r = rescale(a);
  const std::string key = trim_key(r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = true;
  for (Index i = 0; i < r.rows() && ok; ++i) {
    for (Index j = 0; j < r.cols() && ok; ++j) {
      if (r(i, j) != 0) ok = te_by_trims(trim(r, {i, j}), memo);
    }
  }
  memo.emplace(key, ok);
  return ok;
}

}  // namespace

bool is_equimodular(const Matrix& rows) {
  if (rows.rows() == 0) return true;
  if (rows.rows() > rows.cols()) return false;
  return common_minor(rows) > 0;
}

bool is_equimodular(const RowSet& set) { return is_equimodular(set.rows()); }

Rat eqdet(const Matrix& rows) {
  if (rows.rows() == 0) return 1;
  if (rows.rows() > rows.cols()) throw RankError("rows are dependent");
  Rat scale;
  const Integer common = common_minor(rows, &scale);
  if (common == 0) throw RankError("rows are dependent");
  if (common < 0) throw ClassificationError("rows are not equimodular");
  return Rat(common) / scale;
}

Rat eqdet(const RowSet& set) { return eqdet(set.rows()); }

bool is_unimodular_set(const Matrix& rows) {
  if (!rows.is_integral()) return false;
  if (rows.rows() == 0) return true;
  if (rows.rows() > rows.cols()) return false;
  return common_minor(rows) == 1;
}

namespace {

// Scans square submatrices of sizes [1, max_size] in size-then-lex order.
std::optional<SubmatrixWitness> first_tu_violation(const Matrix& a,
                                                   Index max_size) {
  if (!a.is_integral()) {
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (a(i, j) != 0 && a(i, j) != 1 && a(i, j) != -1) {
          return SubmatrixWitness{{i}, {j}};
        }
      }
    }
  }
  const auto small = detail::to_small_int(a);
  const Index limit = std::min({max_size, a.rows(), a.cols()});
  std::optional<SubmatrixWitness> found;
  for (Index k = 1; k <= limit && !found; ++k) {
    for_each_combination(a.rows(), k, [&](const IndexList& rows) {
      return for_each_combination(a.cols(), k, [&](const IndexList& cols) {
        Integer d = small ? detail::minor(*small, rows, cols)
                          : detail::integer_det(a.submatrix(rows, cols));
        if (!in_unit_range(d)) {
          found = SubmatrixWitness{rows, cols};
          return false;
        }
        return true;
      });
    });
  }
  return found;
}

}  // namespace

TuVerdict check_totally_unimodular(const Matrix& a) {
  TuVerdict v;
  for (const auto& comp : row_components(a)) {
    const Matrix part = a.select_rows(comp);
    auto w = first_tu_violation(part, std::min(part.rows(), part.cols()));
    if (!w) continue;
    for (auto& i : w->rows) i = comp[i];
    const bool better =
        !v.witness || w->rows.size() < v.witness->rows.size() ||
        (w->rows.size() == v.witness->rows.size() &&
         std::tie(w->rows, w->cols) < std::tie(v.witness->rows, v.witness->cols));
    if (better) v.witness = std::move(w);
    v.holds = false;
  }
  return v;
}

bool is_totally_unimodular(const Matrix& a) {
  for (const auto& comp : row_components(a)) {
    const Matrix part = a.select_rows(comp);
    if (first_tu_violation(part, std::min(part.rows(), part.cols()))) return false;
  }
  return true;
}

bool is_tu_below(const Matrix& a, Index max_size) {
  if (max_size == 0) return true;
  return !first_tu_violation(a, max_size).has_value();
}

bool is_min_non_tu(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("is_min_non_tu expects a square matrix");
  const Index k = a.rows();
  if (k == 0) return false;
  if (k == 1) return a(0, 0) != 0 && a(0, 0) != 1 && a(0, 0) != -1;
  if (!a.is_zero_pm1()) return false;
  // Camion: even supports in every line, entry sum 2 mod 4, det +-2.
  Integer total = 0;
  for (Index i = 0; i < k; ++i) {
    Index row_support = 0;
    Index col_support = 0;
    for (Index j = 0; j < k; ++j) {
      if (a(i, j) != 0) ++row_support;
      if (a(j, i) != 0) ++col_support;
      total += a(i, j).get_num();
    }
    if (row_support % 2 != 0 || col_support % 2 != 0) return false;
  }
  Integer residue = total % 4;
  if (residue < 0) residue += 4;
  if (residue != 2) return false;
  if (abs(det(a)) != 2) return false;
  return is_tu_below(a, k - 1);
}

namespace {

TeVerdict te_single_component(const Matrix& a) {
  TeVerdict v;
  for (Index k = 1; k <= a.rows() && v.holds; ++k) {
    if (k > a.cols()) break;
    for_each_combination(a.rows(), k, [&](const IndexList& rows) {
      if (common_minor(a.select_rows(rows)) < 0) {
        v.holds = false;
        v.witness = rows;
        return false;
      }
      return true;
    });
  }
  return v;
}

bool smaller_witness(const IndexList& x, const IndexList& y) {
  return x.size() != y.size() ? x.size() < y.size() : x < y;
}

}  // namespace

// A row subset is equimodular iff its parts in each block of a block
// diagonal matrix are, so the search runs per component. The smallest
// failing subset always lies inside one component.
TeVerdict check_totally_equimodular(const Matrix& a) {
  TeVerdict v;
  for (const auto& comp : row_components(a)) {
    const TeVerdict part = te_single_component(a.select_rows(comp));
    if (part.holds) continue;
    IndexList global;
    for (Index i : *part.witness) global.push_back(comp[i]);
    if (v.holds || smaller_witness(global, *v.witness)) v.witness = global;
    v.holds = false;
  }
  return v;
}

bool is_totally_equimodular(const Matrix& a) {
  return check_totally_equimodular(a).holds;
}

bool is_totally_equimodular_by_trims(const Matrix& a) {
  std::map<std::string, bool> memo;
  return te_by_trims(a, memo);
}

bool check_trim_equimodularity(const Matrix& a, Index row) {
  if (row >= a.rows()) throw DimensionError("row index out of range");
  for (const auto& x : a.row_view(row)) {
    if (x != 0 && x != 1 && x != -1) {
      throw DomainError("trim row must be 0/+-1");
    }
  }
  if (rank(a) != a.rows()) throw RankError("matrix must have full row rank");
  for (Index j : a.support(row)) {
    if (!is_equimodular(trim(a, {row, j}))) return false;
  }
  return true;
}

bool is_complement_tu(const Matrix& b) {
  if (!b.is_zero_one()) throw DomainError("expected a 0/1 matrix");
  for (const auto& m : complement_orbit(b)) {
    if (!is_totally_unimodular(m)) return false;
  }
  return true;
}

bool is_complement_min_non_tu(const Matrix& b) {
  if (!b.is_zero_one()) throw DomainError("expected a 0/1 matrix");
  if (!b.is_square()) return false;
  for (const auto& m : complement_orbit(b)) {
    if (!is_min_non_tu(m)) return false;
  }
  return true;
}

std::string to_string(BrickTag tag) {
  switch (tag) {
    case BrickTag::TuSet:
      return "tu-set";
    case BrickTag::TeLace:
      return "te-lace";
    case BrickTag::ThinInterlace:
      return "thin te-interlace";
    case BrickTag::ThickInterlace:
      return "thick te-interlace";
  }
  return "unknown";
}

std::optional<BrickType> brick_type(const Matrix& rows) {
  if (rank(rows) != rows.rows()) throw RankError("brick rows must be independent");
  if (!rows.is_zero_pm1()) return std::nullopt;
  const Index n = rows.rows();
  if (is_totally_unimodular(rows)) return BrickType{BrickTag::TuSet, n, 1};
  if (!is_totally_equimodular(rows)) return std::nullopt;
  const Integer d = eqdet(rows).get_num();

  bool proper_tu = true;
  for (Index drop = 0; drop < n && proper_tu; ++drop) {
    IndexList keep;
    for (Index i = 0; i < n; ++i) {
      if (i != drop) keep.push_back(i);
    }
    proper_tu = is_totally_unimodular(rows.select_rows(keep));
  }
  if (proper_tu) return BrickType{BrickTag::TeLace, n, d};

  const IndexList support = rows.support(0);
  for (Index i = 1; i < n; ++i) {
    if (rows.support(i) != support) return std::nullopt;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const IndexList pair{i, j};
      if (is_totally_unimodular(rows.select_rows(pair))) return std::nullopt;
    }
  }
  Integer thin = 1;
  mpz_mul_2exp(thin.get_mpz_t(), thin.get_mpz_t(), n - 1);
  if (d == thin) return BrickType{BrickTag::ThinInterlace, n, d};
  if (d == 2 * thin) return BrickType{BrickTag::ThickInterlace, n, d};
  return std::nullopt;
}

std::optional<BrickType> brick_type(const RowSet& set) {
  return brick_type(set.rows());
}

}  // namespace teq
