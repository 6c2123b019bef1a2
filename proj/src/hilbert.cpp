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
#include "teq/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "teq/decompose.hpp"
#include "teq/errors.hpp"

namespace teq {

TeCone::TeCone(Matrix generators) : generators_(std::move(generators)) {
  if (!generators_.is_integral()) throw DomainError("cone generators must be integral");
  if (rank(generators_) != generators_.rows()) {
    throw RankError("cone generators must be linearly independent");
  }
  for (Index i = 0; i < generators_.rows(); ++i) {
    Integer g = 0;
    for (const auto& x : generators_.row_view(i)) g = gcd(g, x.get_num());
    if (g != 1) throw DomainError("cone generators must be primitive");
  }
  basis_cols_ = independent_columns(generators_);
  IndexList all(generators_.rows());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  basis_inverse_ = inverse(generators_.submatrix(all, basis_cols_));
}

Vector TeCone::coordinates(const Vector& x) const {
  if (x.size() != generators_.cols()) throw DimensionError("vector length mismatch");
  const Index n = generators_.rows();
  Vector lambda(n);
  for (Index k = 0; k < n; ++k) {
    for (Index b = 0; b < n; ++b) lambda[k] += x[basis_cols_[b]] * basis_inverse_(b, k);
  }
  for (Index j = 0; j < generators_.cols(); ++j) {
    Rat y = 0;
    for (Index k = 0; k < n; ++k) y += lambda[k] * generators_(k, j);
    if (y != x[j]) throw MembershipError("vector is outside the span of the cone");
  }
  return lambda;
}

bool TeCone::contains(const Vector& x) const {
  try {
    const Vector lambda = coordinates(x);
    return std::all_of(lambda.begin(), lambda.end(), [](const Rat& v) { return v >= 0; });
  } catch (const MembershipError&) {
    return false;
  }
}

std::string to_string(Origin origin) {
  switch (origin) {
    case Origin::Generator:
      return "generator";
    case Origin::LaceHalfSum:
      return "lace-half-sum";
    case Origin::PairHalfSum:
      return "pair-half-sum";
    case Origin::QuarterSum:
      return "quarter-sum";
    case Origin::SkewedQuarterSum:
      return "skewed-quarter-sum";
    case Origin::Oracle:
      return "oracle";
  }
  return "unknown";
}

std::vector<Vector> HilbertBasis::sorted() const {
  std::vector<Vector> out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct GridPoint {
  std::vector<long> k;  // lambda_i = k_i / steps_i
  Vector x;
};

// The integer points x of the zonotope have lambda = x_B B^{-1}, so each
// lambda_i lies on the grid (1/q_i) Z with q_i the lcm of the denominators
// in column i of B^{-1}.
std::vector<GridPoint> grid_points(const TeCone& cone, std::vector<long>& steps) {
  const Matrix& a = cone.generators();
  const Index n = a.rows();
  const Index d = a.cols();
  const IndexList cols = independent_columns(a);
  IndexList all(n);
  for (Index i = 0; i < n; ++i) all[i] = i;
  const Matrix inv = inverse(a.submatrix(all, cols));
  steps.assign(n, 1);
  for (Index k = 0; k < n; ++k) {
    Integer q = 1;
    for (Index b = 0; b < n; ++b) q = lcm(q, inv(b, k).get_den());
    if (!q.fits_slong_p() || q > (1L << 20)) {
      throw UnsupportedError("zonotope grid is too fine to enumerate");
    }
    steps[k] = q.get_si();
  }
  Integer total = 1;
  for (long q : steps) total *= q;
  if (total > Integer(1) << 26) throw UnsupportedError("zonotope grid is too large");

  // Integer rows times step products keep the sum exact: the candidate
  // x = sum (k_i / q_i) a_i is scaled by L = lcm(q_i).
  long big = 1;
  for (long q : steps) big = std::lcm(big, q);
  std::vector<std::vector<std::int64_t>> scaled(n, std::vector<std::int64_t>(d));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < d; ++j) scaled[i][j] = (big / steps[i]) * a(i, j).get_num().get_si();
  }
  std::vector<GridPoint> out;
  std::vector<long> k(n, 0);
  std::vector<std::int64_t> sum(d, 0);
  while (true) {
    bool integral = true;
    for (Index j = 0; j < d && integral; ++j) integral = sum[j] % big == 0;
    if (integral) {
      GridPoint p;
      p.k = k;
      p.x.resize(d);
      for (Index j = 0; j < d; ++j) p.x[j] = Rat(static_cast<long>(sum[j] / big));
      out.push_back(std::move(p));
    }
    Index pos = 0;
    while (pos < n && k[pos] == steps[pos] - 1) {
      for (Index j = 0; j < d; ++j) sum[j] -= k[pos] * scaled[pos][j];
      k[pos++] = 0;
    }
    if (pos == n) break;
    ++k[pos];
    for (Index j = 0; j < d; ++j) sum[j] += scaled[pos][j];
  }
  return out;
}

// h is irreducible among zonotope points iff no nonzero point u != h has
// grid coordinates dominated by those of h. A decomposition h = u + v into
// nonzero integer cone vectors forces lambda(u), lambda(v) <= lambda(h) < 1,
// so both summands are zonotope points and v's coordinates are the
// differences.
bool dominated(const std::vector<long>& u, const std::vector<long>& h) {
  for (Index i = 0; i < u.size(); ++i) {
    if (u[i] > h[i]) return false;
  }
  return true;
}

bool is_zero(const std::vector<long>& k) {
  return std::all_of(k.begin(), k.end(), [](long v) { return v == 0; });
}

Vector half_sum(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (Index j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) / 2;
  return out;
}

Vector weighted_sum(const Matrix& rows, const Vector& weights) {
  Vector out(rows.cols());
  for (Index i = 0; i < rows.rows(); ++i) {
    for (Index j = 0; j < rows.cols(); ++j) out[j] += weights[i] * rows(i, j);
  }
  return out;
}

void add_generators(HilbertBasis& hb, const Matrix& rows) {
  for (Index i = 0; i < rows.rows(); ++i) hb.add(rows.row(i), Origin::Generator);
}

}  // namespace

ZonotopePointSet zonotope_points(const TeCone& cone) {
  ZonotopePointSet out;
  for (auto& p : grid_points(cone, out.steps)) {
    Vector lambda(p.k.size());
    for (Index i = 0; i < p.k.size(); ++i) lambda[i] = make_rat(p.k[i], out.steps[i]);
    out.points.push_back(std::move(p.x));
    out.lambda.push_back(std::move(lambda));
  }
  return out;
}

HilbertBasis hilbert_oracle(const TeCone& cone) {
  HilbertBasis hb;
  add_generators(hb, cone.generators());
  std::vector<long> steps;
  const auto points = grid_points(cone, steps);
  for (const auto& h : points) {
    if (is_zero(h.k)) continue;
    bool reducible = false;
    for (const auto& u : points) {
      if (is_zero(u.k) || u.k == h.k) continue;
      if (dominated(u.k, h.k)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.add(h.x, Origin::Oracle);
  }
  return hb;
}

bool thick_case_a(const Matrix& rows) {
  const Index n = rows.rows();
  int parity = -1;
  for (Index j = 0; j < rows.cols(); ++j) {
    Index plus = 0;
    Index nonzero = 0;
    for (Index i = 0; i < n; ++i) {
      if (rows(i, j) != 0) ++nonzero;
      if (rows(i, j) == 1) ++plus;
    }
    if (nonzero == 0) continue;
    const int p = static_cast<int>(plus % 2);
    if (parity != -1 && parity != p) {
      throw ClassificationError("support columns disagree on parity");
    }
    parity = p;
  }
  if (parity == -1) throw ClassificationError("empty interlace support");
  return n % 4 == static_cast<Index>(2 * parity) % 4;
}

HilbertBasis hilbert_basis_brick(const Matrix& rows, BrickTag type) {
  const auto actual = brick_type(rows);
  const bool pair_as_thin = actual && actual->tag == BrickTag::TeLace &&
                            rows.rows() == 2 && type == BrickTag::ThinInterlace;
  if (!actual || (actual->tag != type && !pair_as_thin)) {
    throw ClassificationError("rows do not form a brick of type " + to_string(type));
  }
  HilbertBasis hb;
  add_generators(hb, rows);
  const Index n = rows.rows();
  switch (type) {
    case BrickTag::TuSet:
      break;
    case BrickTag::TeLace:
      hb.add(weighted_sum(rows, Vector(n, make_rat(1, 2))), Origin::LaceHalfSum);
      break;
    case BrickTag::ThinInterlace:
    case BrickTag::ThickInterlace:
      for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
          hb.add(half_sum(rows.row(i), rows.row(j)), Origin::PairHalfSum);
        }
      }
      if (type == BrickTag::ThinInterlace) break;
      if (thick_case_a(rows)) {
        hb.add(weighted_sum(rows, Vector(n, make_rat(1, 4))), Origin::QuarterSum);
      } else {
        for (Index i = 0; i < n; ++i) {
          Vector w(n, make_rat(1, 4));
          w[i] = make_rat(3, 4);
          hb.add(weighted_sum(rows, w), Origin::SkewedQuarterSum);
        }
      }
      break;
  }
  return hb;
}

HilbertBasis hilbert_basis_te_cone(const TeCone& cone) {
  const Matrix& a = cone.generators();
  const DecompositionResult result = decompose_te_set(a);
  if (!result.ok()) throw ClassificationError("generators do not decompose into te-bricks");
  const Decomposition& d = *result.decomposition;

  HilbertBasis hb;
  add_generators(hb, a);
  Integer product = 1;
  auto add_brick = [&](const IndexList& rows, BrickTag type) {
    const Matrix part = a.select_rows(rows);
    product *= gcddet(part);
    const HilbertBasis local = hilbert_basis_brick(part, type);
    for (Index k = 0; k < local.elements.size(); ++k) {
      if (local.origins[k] != Origin::Generator) hb.add(local.elements[k], local.origins[k]);
    }
  };
  if (!d.tu_set.empty()) product *= gcddet(a.select_rows(d.tu_set));
  for (const auto& s : d.laces) add_brick(s, BrickTag::TeLace);
  for (const auto& s : d.thin) add_brick(s, BrickTag::ThinInterlace);
  for (const auto& s : d.thick) add_brick(s, BrickTag::ThickInterlace);
  if (gcddet(a) != product) throw ClassificationError("bricks are not lattice orthogonal");
  return hb;
}

bool is_hilbert_element(const TeCone& cone, const Vector& x) {
  const Vector lambda = cone.coordinates(x);
  for (const auto& v : lambda) {
    if (v < 0) throw MembershipError("vector is outside the cone");
  }
  for (const auto& v : x) {
    if (!is_integer(v)) throw MembershipError("vector is not integral");
  }
  const auto elements = hilbert_oracle(cone).elements;
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

}  // namespace teq
