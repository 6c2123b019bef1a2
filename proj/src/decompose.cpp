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
#include "teq/decompose.hpp"

#include <algorithm>
#include <map>

#include "teq/classify.hpp"
#include "teq/detail/int_kernel.hpp"
#include "teq/errors.hpp"

namespace teq {

namespace {

bool contains_all(const IndexList& big, const IndexList& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// A k-row matrix whose proper row subsets are TU is non-TU iff one of its
// k x k minors leaves {0, +-1}.
bool full_minor_violation(const Matrix& rows) {
  const auto small = detail::to_small_int(rows);
  IndexList all(rows.rows());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  bool violated = false;
  for_each_combination(rows.cols(), rows.rows(), [&](const IndexList& cols) {
    Integer d = small ? detail::minor(*small, all, cols)
                      : detail::integer_det(rows.submatrix(all, cols));
    if (d > 1 || d < -1) {
      violated = true;
      return false;
    }
    return true;
  });
  return violated;
}

void require_te_input(const Matrix& a) {
  if (!a.is_zero_pm1()) throw DomainError("expected a 0/+-1 matrix");
  if (rank(a) != a.rows()) throw RankError("rows must be linearly independent");
}

}  // namespace

namespace {

std::vector<IndexList> minimal_in_component(const Matrix& a) {
  std::vector<IndexList> found;
  const Index limit = std::min(a.rows(), a.cols());
  for (Index k = 1; k <= limit; ++k) {
    const std::size_t before = found.size();
    for_each_combination(a.rows(), k, [&](const IndexList& rows) {
      for (std::size_t f = 0; f < before; ++f) {
        if (contains_all(rows, found[f])) return true;
      }
      if (full_minor_violation(a.select_rows(rows))) found.push_back(rows);
      return true;
    });
  }
  return found;
}

}  // namespace

// Minimal non-TU subsets never straddle blocks of a block diagonal matrix.
std::vector<IndexList> minimal_non_tu_subsets(const Matrix& a) {
  std::vector<IndexList> found;
  for (const auto& comp : row_components(a)) {
    for (const auto& s : minimal_in_component(a.select_rows(comp))) {
      IndexList global;
      for (Index i : s) global.push_back(comp[i]);
      found.push_back(std::move(global));
    }
  }
  std::sort(found.begin(), found.end(), [](const IndexList& x, const IndexList& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return found;
}

std::vector<IndexList> find_te_laces(const Matrix& a) {
  require_te_input(a);
  return minimal_non_tu_subsets(a);
}

DecompositionResult decompose_te_set(const Matrix& a) {
  require_te_input(a);
  DecompositionResult result;
  const TeVerdict te = check_totally_equimodular(a);
  if (!te.holds) {
    result.not_te_witness = te.witness;
    return result;
  }

  Decomposition d;
  d.source = a;
  d.minimal_non_tu = minimal_non_tu_subsets(a);

  std::vector<bool> in_lace(a.rows(), false);
  std::vector<bool> in_pair(a.rows(), false);
  for (const auto& s : d.minimal_non_tu) {
    for (Index i : s) {
      in_lace[i] = true;
      if (s.size() == 2) in_pair[i] = true;
    }
  }
  for (Index i = 0; i < a.rows(); ++i) {
    if (!in_lace[i]) d.tu_set.push_back(i);
  }

  // Interlaces are the support classes of rows met by size-two laces.
  std::map<IndexList, IndexList> classes;
  for (Index i = 0; i < a.rows(); ++i) {
    if (in_pair[i]) classes[a.support(i)].push_back(i);
  }
  for (const auto& [support, rows] : classes) {
    const auto type = brick_type(a.select_rows(rows));
    if (!type || (type->tag != BrickTag::ThinInterlace &&
                  type->tag != BrickTag::ThickInterlace &&
                  !(type->tag == BrickTag::TeLace && rows.size() == 2))) {
      result.not_mutually_tu_witness = rows;
      return result;
    }
    (type->tag == BrickTag::ThickInterlace ? d.thick : d.thin).push_back(rows);
  }
  for (const auto& s : d.minimal_non_tu) {
    if (s.size() < 3) continue;
    bool overlaps = false;
    for (Index i : s) overlaps = overlaps || in_pair[i];
    if (!overlaps) {
      for (const auto& other : d.laces) {
        IndexList common;
        std::set_intersection(s.begin(), s.end(), other.begin(), other.end(),
                              std::back_inserter(common));
        overlaps = overlaps || !common.empty();
      }
    }
    if (overlaps) {
      result.not_mutually_tu_witness = s;
      return result;
    }
    d.laces.push_back(s);
  }
  std::sort(d.thin.begin(), d.thin.end());
  std::sort(d.thick.begin(), d.thick.end());

  const MutuallyTuVerdict mutual = verify_mutually_tu(d);
  if (!mutual.holds) {
    result.not_mutually_tu_witness = mutual.witness;
    return result;
  }
  result.decomposition = std::move(d);
  return result;
}

MutuallyTuVerdict verify_mutually_tu(const Decomposition& d) {
  MutuallyTuVerdict v;
  std::vector<int> owner(d.source.rows(), -1);
  int next = 0;
  auto claim = [&](const IndexList& part) {
    for (Index i : part) {
      if (i >= owner.size() || owner[i] != -1) {
        v.holds = false;
        v.witness = part;
      } else {
        owner[i] = next;
      }
    }
    ++next;
  };
  for (Index i : d.tu_set) claim({i});
  for (const auto& s : d.laces) claim(s);
  const int first_interlace = next;
  for (const auto& s : d.thin) claim(s);
  for (const auto& s : d.thick) claim(s);
  if (!v.holds) return v;
  for (Index i = 0; i < owner.size(); ++i) {
    if (owner[i] == -1) return {false, IndexList{i}};
  }

  for (const auto& s : minimal_non_tu_subsets(d.source)) {
    const int brick = owner[s.front()];
    const bool same_brick = std::all_of(
        s.begin(), s.end(), [&](Index i) { return owner[i] == brick; });
    const bool registered =
        std::find(d.laces.begin(), d.laces.end(), s) != d.laces.end();
    const bool interlace_pair = s.size() == 2 && brick >= first_interlace;
    if (!same_brick || !(registered || interlace_pair)) return {false, s};
  }
  return v;
}

Integer eqdet_from_decomposition(const Decomposition& d) {
  unsigned long exponent = d.laces.size();
  for (const auto& s : d.thin) exponent += s.size() - 1;
  for (const auto& s : d.thick) exponent += s.size();
  Integer value = 1;
  mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), exponent);
  return value;
}

}  // namespace teq
