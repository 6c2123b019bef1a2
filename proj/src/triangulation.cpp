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
#include "teq/triangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "teq/classify.hpp"
#include "teq/decompose.hpp"
#include "teq/errors.hpp"
#include "teq/lp.hpp"
#include "teq/parallel.hpp"

namespace teq {

namespace {

using Edge = std::pair<Index, Index>;

bool edges_intersect(Edge e, Edge f) {
  if (e.first == f.first || e.first == f.second || e.second == f.first ||
      e.second == f.second) {
    return true;
  }
  if (e.first == e.second || f.first == f.second) return false;
  const auto [a, b] = e;
  const auto [c, d] = f;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool spanning_connected(Index n, const std::vector<Edge>& edges) {
  std::vector<Index> parent(n);
  for (Index i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  for (Index i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

// Extends `edges` by `missing` further edges from candidates[from..],
// each meeting every edge already chosen.
void complete(Index n, std::vector<Edge>& edges, const std::vector<Edge>& candidates,
              Index from, Index missing, std::vector<std::vector<Edge>>& out) {
  if (missing == 0) {
    if (spanning_connected(n, edges)) out.push_back(edges);
    return;
  }
  for (Index c = from; c < candidates.size(); ++c) {
    const Edge e = candidates[c];
    if (!std::all_of(edges.begin(), edges.end(), [&](Edge f) { return edges_intersect(e, f); })) {
      continue;
    }
    edges.push_back(e);
    complete(n, edges, candidates, c + 1, missing - 1, out);
    edges.pop_back();
  }
}

Vector half_sum(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (Index j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) / 2;
  return out;
}

Index pair_rank(Index n, Index u, Index v) {
  // Position of (u, v), u < v, in the lexicographic list of pairs.
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Rat dot(const Vector& a, const Vector& b) {
  Rat s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && v[j] != 0) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

// Points in the coordinates of the cone generators, and per-cell inverses
// mapping such coordinates to coefficients in the cell's points.
struct Frame {
  Index n = 0;
  std::vector<Vector> lambda;
  std::vector<Matrix> to_cell;  // inverse of the transposed cell matrix
  std::vector<Rat> cell_det;

  Vector cell_coords(Index cell, const Vector& v) const { return apply(to_cell[cell], v); }
};

Matrix cell_matrix(const std::vector<Vector>& lambda, const IndexList& cell) {
  std::vector<Vector> rows;
  for (Index p : cell) rows.push_back(lambda[p]);
  return Matrix::from_rows(rows, lambda.empty() ? 0 : lambda[0].size());
}

Rat height_on(const Frame& f, const Vector& lifting, const IndexList& cell, Index c,
              const Vector& lam) {
  const Vector mu = f.cell_coords(c, lam);
  Rat h = 0;
  for (Index i = 0; i < cell.size(); ++i) h += mu[i] * lifting[cell[i]];
  return h;
}

// First cell whose closed cone contains the coordinates.
std::optional<Index> locate(const Frame& f, const std::vector<IndexList>& cells, const Vector& lam) {
  for (Index c = 0; c < cells.size(); ++c) {
    const Vector mu = f.cell_coords(c, lam);
    if (std::all_of(mu.begin(), mu.end(), [](const Rat& v) { return v >= 0; })) return c;
  }
  return std::nullopt;
}

bool lifting_is_regular(const Frame& f, const std::vector<IndexList>& cells, const Vector& w) {
  for (Index c = 0; c < cells.size(); ++c) {
    for (Index q = 0; q < f.lambda.size(); ++q) {
      if (std::binary_search(cells[c].begin(), cells[c].end(), q)) continue;
      if (!(w[q] < height_on(f, w, cells[c], c, f.lambda[q]))) return false;
    }
  }
  return true;
}

// Folding across every interior wall, plus every unused point strictly
// below the cell containing it; all rows read "< 0".
LinearSystem folding_system(const Frame& f, const std::vector<IndexList>& cells) {
  const Index m = f.lambda.size();
  LinearSystem sys(m);
  std::map<IndexList, std::vector<std::pair<Index, Index>>> facets;
  for (Index c = 0; c < cells.size(); ++c) {
    for (Index k = 0; k < cells[c].size(); ++k) {
      IndexList facet = cells[c];
      const Index removed = facet[k];
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
      facets[facet].emplace_back(c, removed);
    }
  }
  auto below = [&](Index c, Index q) {
    Vector row(m);
    row[q] = 1;
    const Vector mu = f.cell_coords(c, f.lambda[q]);
    for (Index i = 0; i < cells[c].size(); ++i) row[cells[c][i]] -= mu[i];
    sys.add(std::move(row), Relation::Less, 0);
  };
  for (const auto& [facet, sides] : facets) {
    if (sides.size() == 2) below(sides[0].first, sides[1].second);
  }
  std::vector<bool> used(m, false);
  for (const auto& cell : cells) {
    for (Index p : cell) used[p] = true;
  }
  for (Index q = 0; q < m; ++q) {
    if (used[q]) continue;
    if (auto c = locate(f, cells, f.lambda[q])) below(*c, q);
  }
  return sys;
}

std::optional<Vector> find_lifting(const Frame& f, const std::vector<IndexList>& cells) {
  const FeasibilityResult r = solve(folding_system(f, cells));
  if (!r.feasible) return std::nullopt;
  return r.point;
}

Frame make_frame(const TeCone& cone, const std::vector<Vector>& points,
                 const std::vector<IndexList>& cells) {
  Frame f;
  f.n = cone.dimension();
  for (const auto& p : points) f.lambda.push_back(cone.coordinates(p));
  for (const auto& cell : cells) {
    const Matrix l = cell_matrix(f.lambda, cell);
    const Rat d = det(l);
    f.cell_det.push_back(d);
    f.to_cell.push_back(d == 0 ? Matrix() : inverse(l.transpose()));
  }
  return f;
}

IndexList sorted_cell(IndexList c) {
  std::sort(c.begin(), c.end());
  return c;
}

// Stellar subdivisions at `order`; each inserted point is raised by a
// small amount above the current concave surface.
struct Refinement {
  std::vector<IndexList> cells;
  Vector lifting;
};

Refinement stellar_refine(const std::vector<Vector>& lambda, Index n, const IndexList& order,
                          const Rat& eps) {
  Refinement r;
  r.lifting.assign(lambda.size(), Rat(0));
  IndexList first(n);
  for (Index i = 0; i < n; ++i) first[i] = i;
  r.cells.push_back(first);
  Rat bump = eps;
  for (Index p : order) {
    std::vector<IndexList> next;
    std::optional<Rat> surface;
    for (const auto& cell : r.cells) {
      const Matrix l = cell_matrix(lambda, cell);
      const Vector mu = solve(l.transpose(), lambda[p]);
      if (std::any_of(mu.begin(), mu.end(), [](const Rat& v) { return v < 0; })) {
        next.push_back(cell);
        continue;
      }
      if (!surface) {
        Rat h = 0;
        for (Index i = 0; i < n; ++i) h += mu[i] * r.lifting[cell[i]];
        surface = h;
      }
      for (Index t = 0; t < n; ++t) {
        if (mu[t] == 0) continue;
        IndexList c = cell;
        c[t] = p;
        next.push_back(sorted_cell(c));
      }
    }
    r.lifting[p] = surface.value_or(Rat(0)) + bump;
    bump *= eps;
    r.cells = std::move(next);
  }
  return r;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

void shuffle(IndexList& v, std::mt19937_64& rng) {
  for (Index i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

}  // namespace

std::vector<StellarCycle> enumerate_stellar_cycles(Index n) {
  if (n == 0) throw DimensionError("stellar cycles need at least one vertex");
  std::vector<StellarCycle> out;
  for (Index k = 1; k <= n; k += 2) {
    for_each_combination(n, k, [&](const IndexList& odd) {
      std::vector<Edge> cycle;
      const Index step = (k - 1) / 2;
      for (Index t = 0; t < k; ++t) {
        const Index u = odd[t];
        const Index v = odd[(t + step) % k];
        cycle.emplace_back(std::min(u, v), std::max(u, v));
      }
      if (k == 1) cycle.resize(1);
      std::vector<Edge> candidates;
      for (Index u = 0; u < n; ++u) {
        for (Index v = u + 1; v < n; ++v) {
          const bool u_in = std::binary_search(odd.begin(), odd.end(), u);
          const bool v_in = std::binary_search(odd.begin(), odd.end(), v);
          if (!(u_in && v_in)) candidates.emplace_back(u, v);
        }
      }
      std::vector<std::vector<Edge>> completions;
      std::vector<Edge> edges = cycle;
      complete(n, edges, candidates, 0, n - k, completions);
      if (completions.size() != 1) {
        throw ConstructionError("odd vertex set without a unique stellar cycle");
      }
      StellarCycle s;
      s.n = n;
      s.odd_set = odd;
      s.edges = completions.front();
      std::sort(s.edges.begin(), s.edges.end());
      out.push_back(std::move(s));
      return true;
    });
  }
  return out;
}

Matrix stellar_incidence(const StellarCycle& cycle) {
  std::vector<Rat> e(cycle.edges.size() * cycle.n);
  for (Index r = 0; r < cycle.edges.size(); ++r) {
    e[r * cycle.n + cycle.edges[r].first] += 1;
    e[r * cycle.n + cycle.edges[r].second] += 1;
  }
  return Matrix(cycle.edges.size(), cycle.n, std::move(e));
}

Triangulation stellar_lace_triangulation(const Matrix& lace) {
  const auto type = brick_type(lace);
  if (!type || type->tag != BrickTag::TeLace) throw ClassificationError("rows do not form a te-lace");
  const Index n = lace.rows();
  Triangulation t;
  for (Index i = 0; i < n; ++i) t.points.push_back(lace.row(i));
  Vector h(lace.cols());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < lace.cols(); ++j) h[j] += lace(i, j) / 2;
  }
  t.points.push_back(h);
  for (Index drop = 0; drop < n; ++drop) {
    IndexList cell;
    for (Index i = 0; i < n; ++i) {
      if (i != drop) cell.push_back(i);
    }
    cell.push_back(n);
    t.cells.push_back(cell);
  }
  Vector w(n + 1, Rat(0));
  w[n] = 1;
  t.lifting = w;
  return t;
}

namespace {

// Thin triangulation cells on generator labels, with pair half-sums at
// n + pair_rank(n, u, v).
std::vector<IndexList> thin_cells(Index n) {
  std::vector<IndexList> cells;
  for (const auto& s : enumerate_stellar_cycles(n)) {
    IndexList cell;
    for (const auto& [u, v] : s.edges) cell.push_back(u == v ? u : n + pair_rank(n, u, v));
    cells.push_back(sorted_cell(cell));
  }
  return cells;
}

void add_pair_half_sums(Triangulation& t, const Matrix& rows) {
  for (Index u = 0; u < rows.rows(); ++u) {
    for (Index v = u + 1; v < rows.rows(); ++v) t.points.push_back(half_sum(rows.row(u), rows.row(v)));
  }
}

void attach_lifting(Triangulation& t, const Matrix& rows) {
  const TeCone cone(rows);
  const Frame f = make_frame(cone, t.points, t.cells);
  t.lifting = find_lifting(f, t.cells);
}

}  // namespace

Triangulation thin_triangulation(const Matrix& rows) {
  const auto type = brick_type(rows);
  const bool pair = type && type->tag == BrickTag::TeLace && rows.rows() == 2;
  if (!type || (type->tag != BrickTag::ThinInterlace && !pair)) {
    throw ClassificationError("rows do not form a thin te-interlace");
  }
  const Index n = rows.rows();
  Triangulation t;
  for (Index i = 0; i < n; ++i) t.points.push_back(rows.row(i));
  add_pair_half_sums(t, rows);
  t.cells = thin_cells(n);
  attach_lifting(t, rows);
  return t;
}

Triangulation thick_case_a_triangulation(const Matrix& rows) {
  const auto type = brick_type(rows);
  if (!type || type->tag != BrickTag::ThickInterlace) {
    throw ClassificationError("rows do not form a thick te-interlace");
  }
  if (!thick_case_a(rows)) throw ClassificationError("thick te-interlace is not in the quarter-sum case");
  const Index n = rows.rows();
  Triangulation t;
  for (Index i = 0; i < n; ++i) t.points.push_back(rows.row(i));
  add_pair_half_sums(t, rows);
  Vector h(rows.cols());
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < rows.cols(); ++j) h[j] += rows(i, j) / 4;
  }
  const Index apex = t.points.size();
  t.points.push_back(h);
  // Each facet drops one generator and keeps the others in label order.
  const auto facet_cells = thin_cells(n - 1);
  for (Index drop = 0; drop < n; ++drop) {
    IndexList label;
    for (Index i = 0; i < n; ++i) {
      if (i != drop) label.push_back(i);
    }
    for (const auto& local : facet_cells) {
      IndexList cell;
      for (Index p : local) {
        if (p < n - 1) {
          cell.push_back(label[p]);
        } else {
          // Invert pair_rank for the facet's pair index.
          Index rank_left = p - (n - 1);
          Index u = 0;
          while (rank_left >= (n - 2) - u) {
            rank_left -= (n - 2) - u;
            ++u;
          }
          const Index v = u + 1 + rank_left;
          cell.push_back(n + pair_rank(n, label[u], label[v]));
        }
      }
      cell.push_back(apex);
      t.cells.push_back(sorted_cell(cell));
    }
  }
  attach_lifting(t, rows);
  return t;
}

Triangulation thick_case_b_triangulation(const Matrix& rows, const CaseBOptions& options) {
  const auto type = brick_type(rows);
  if (!type || type->tag != BrickTag::ThickInterlace) {
    throw ClassificationError("rows do not form a thick te-interlace");
  }
  if (thick_case_a(rows)) throw ClassificationError("thick te-interlace is in the quarter-sum case");
  const Index n = rows.rows();
  const HilbertBasis hb = hilbert_basis_brick(rows, BrickTag::ThickInterlace);
  const TeCone cone(rows);
  std::vector<Vector> lambda;
  for (const auto& p : hb.elements) lambda.push_back(cone.coordinates(p));
  const Rat unit_det = Rat(1) / Rat(gcddet(rows));

  IndexList halves;
  IndexList skewed;
  for (Index p = n; p < hb.elements.size(); ++p) {
    (hb.origins[p] == Origin::PairHalfSum ? halves : skewed).push_back(p);
  }
  IndexList sorted_order;
  for (Index p = n; p < hb.elements.size(); ++p) sorted_order.push_back(p);
  auto weight = [&](Index p) {
    Rat s = 0;
    for (const auto& v : lambda[p]) s += v;
    return s;
  };
  std::stable_sort(sorted_order.begin(), sorted_order.end(), [&](Index x, Index y) {
    const Rat wx = weight(x);
    const Rat wy = weight(y);
    return wx != wy ? wx < wy : hb.elements[x] < hb.elements[y];
  });
  IndexList natural = halves;
  natural.insert(natural.end(), skewed.begin(), skewed.end());

  std::mt19937_64 rng(options.seed);
  for (std::size_t attempt = 0; attempt < options.max_orders; ++attempt) {
    IndexList order;
    if (attempt == 0) {
      order = sorted_order;
    } else if (attempt == 1) {
      order = natural;
    } else {
      IndexList h = halves;
      IndexList s = skewed;
      shuffle(h, rng);
      switch (attempt % 3) {
        case 0:
          order = h;
          order.insert(order.end(), s.begin(), s.end());
          break;
        case 1:
          shuffle(s, rng);
          order = s;
          order.insert(order.end(), h.begin(), h.end());
          break;
        default:
          order = h;
          order.insert(order.end(), s.begin(), s.end());
          shuffle(order, rng);
          break;
      }
    }
    Refinement r = stellar_refine(lambda, n, order, make_rat(1, 16));
    const bool unimodular = std::all_of(r.cells.begin(), r.cells.end(), [&](const IndexList& c) {
      return abs(det(cell_matrix(lambda, c))) == unit_det;
    });
    if (!unimodular) continue;
    Triangulation t;
    t.points = hb.elements;
    t.cells = r.cells;
    std::sort(t.cells.begin(), t.cells.end());
    const Frame f = make_frame(cone, t.points, t.cells);
    for (Rat eps = make_rat(1, 16); eps > make_rat(1, 1L << 62); eps *= eps) {
      Refinement lifted = stellar_refine(lambda, n, order, eps);
      if (lifting_is_regular(f, t.cells, lifted.lifting)) {
        t.lifting = lifted.lifting;
        break;
      }
    }
    if (!t.lifting) t.lifting = find_lifting(f, t.cells);
    return t;
  }
  throw ConstructionError("no unimodular stellar refinement found within the order cap");
}

Triangulation join(const Triangulation& first, const Triangulation& second) {
  Triangulation out;
  out.points = first.points;
  IndexList remap;
  for (const auto& p : second.points) {
    auto it = std::find(out.points.begin(), out.points.end(), p);
    if (it != out.points.end()) {
      remap.push_back(static_cast<Index>(it - out.points.begin()));
    } else {
      remap.push_back(out.points.size());
      out.points.push_back(p);
    }
  }
  for (const auto& a : first.cells) {
    for (const auto& b : second.cells) {
      IndexList cell = a;
      for (Index p : b) cell.push_back(remap[p]);
      out.cells.push_back(sorted_cell(cell));
    }
  }
  if (!out.cells.empty()) {
    const IndexList& c = out.cells.front();
    std::vector<Vector> rows;
    for (Index p : c) rows.push_back(out.points[p]);
    const Matrix m = Matrix::from_rows(rows, out.points.front().size());
    if (std::set<Index>(c.begin(), c.end()).size() != c.size() || rank(m) != c.size()) {
      throw RankError("joined cones are not a direct sum");
    }
  }
  if (first.lifting && second.lifting) {
    Vector w = *first.lifting;
    w.resize(out.points.size());
    for (Index p = 0; p < second.points.size(); ++p) {
      if (remap[p] >= first.points.size()) w[remap[p]] = (*second.lifting)[p];
    }
    out.lifting = w;
  }
  return out;
}

TriangulationReport verify_triangulation(const TeCone& cone, const Triangulation& t,
                                         const VerifyOptions& options) {
  TriangulationReport report;
  const Index n = cone.dimension();
  auto fail = [&](const std::string& why) { report.failures.push_back(why); };

  for (const auto& cell : t.cells) {
    const bool shaped = cell.size() == n && std::is_sorted(cell.begin(), cell.end()) &&
                        std::adjacent_find(cell.begin(), cell.end()) == cell.end() &&
                        std::all_of(cell.begin(), cell.end(), [&](Index p) { return p < t.points.size(); });
    if (!shaped) {
      fail("malformed cell");
      return report;
    }
  }
  if (t.cells.empty()) {
    fail("no cells");
    return report;
  }
  Frame f;
  try {
    f = make_frame(cone, t.points, t.cells);
  } catch (const MembershipError&) {
    fail("a point lies outside the span of the cone");
    return report;
  }
  bool contained = true;
  for (Index p = 0; p < t.points.size(); ++p) {
    const bool inside = std::all_of(f.lambda[p].begin(), f.lambda[p].end(), [](const Rat& v) { return v >= 0; });
    const bool integral = std::all_of(t.points[p].begin(), t.points[p].end(), [](const Rat& v) { return is_integer(v); });
    if (!inside || !integral) contained = false;
  }
  if (!contained) fail("a point is not an integer point of the cone");
  bool independent = true;
  for (Index c = 0; c < t.cells.size(); ++c) independent = independent && f.cell_det[c] != 0;
  if (!independent) {
    fail("a cell has dependent points");
    return report;
  }

  // Hilbert membership.
  std::vector<Vector> basis;
  if (gcddet(cone.generators()) <= 4096) {
    basis = hilbert_oracle(cone).sorted();
  } else {
    basis = hilbert_basis_te_cone(cone).sorted();
  }
  report.hilbert = contained;
  for (const auto& cell : t.cells) {
    for (Index p : cell) {
      if (!std::binary_search(basis.begin(), basis.end(), t.points[p])) report.hilbert = false;
    }
  }
  if (!report.hilbert) fail("a cell uses a point outside the Hilbert basis");

  // Unimodularity and volumes.
  report.unimodular = true;
  report.raw_volume = 0;
  report.normalized_volume = 0;
  for (Index c = 0; c < t.cells.size(); ++c) {
    std::vector<Vector> rows;
    Rat weight = 1;
    for (Index p : t.cells[c]) {
      rows.push_back(t.points[p]);
      Rat phi = 0;
      for (const auto& v : f.lambda[p]) phi += v;
      weight *= phi;
    }
    const Matrix m = Matrix::from_rows(rows, cone.ambient_dimension());
    const Integer g = contained ? gcddet(m) : Integer(0);
    report.raw_volume += g;
    if (g != 1) report.unimodular = false;
    report.normalized_volume += abs(f.cell_det[c]) / weight;
  }
  if (!report.unimodular) fail("a cell is not unimodular");
  report.covering = contained && report.normalized_volume == 1;
  if (!report.covering) fail("cells do not cover the cone exactly once by volume");

  // Regularity: the given lifting must fold across every wall and keep
  // every point strictly below every other cell; otherwise search by LP.
  std::optional<Vector> lifting;
  if (t.lifting && t.lifting->size() == t.points.size()) {
    report.regular = satisfies(folding_system(f, t.cells), *t.lifting) &&
                     lifting_is_regular(f, t.cells, *t.lifting);
    if (report.regular) lifting = t.lifting;
  } else {
    auto w = find_lifting(f, t.cells);
    report.regular = w && lifting_is_regular(f, t.cells, *w);
    if (report.regular) lifting = report.found_lifting = w;
  }
  if (!report.regular) fail("no lifting certifies regularity");

  // With a verified lifting, l_a - l_b separates cells a and b: it is
  // nonpositive on a, nonnegative on b, and strict off their common face.
  std::vector<std::vector<Rat>> height;
  if (lifting) {
    height.resize(t.cells.size());
    for (Index c = 0; c < t.cells.size(); ++c) {
      for (Index q = 0; q < t.points.size(); ++q) {
        height[c].push_back(height_on(f, *lifting, t.cells[c], c, f.lambda[q]));
      }
    }
  }
  auto separated = [&](Index a, Index b) {
    if (height.empty()) return false;
    auto strictly_below = [&](Index from, Index onto) {
      for (Index q : t.cells[from]) {
        if (std::binary_search(t.cells[onto].begin(), t.cells[onto].end(), q)) continue;
        if (!((*lifting)[q] < height[onto][q])) return false;
      }
      return true;
    };
    return strictly_below(a, b) && strictly_below(b, a);
  };

  // Pairwise: distinct, interiors disjoint, and meeting in a common face.
  const std::size_t count = t.cells.size();
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < count; ++a) {
    for (Index b = a + 1; b < count; ++b) pairs.emplace_back(a, b);
  }
  std::mutex mu;
  bool disjoint = true;
  parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const IndexList& s = t.cells[a];
    const IndexList& u = t.cells[b];
    bool ok = s != u;
    const bool certified = ok && separated(a, b);
    if (ok && !certified) {
      // Interiors: alpha, beta > 0 with equal images.
      LinearSystem interior(2 * n);
      for (Index d = 0; d < n; ++d) {
        Vector row(2 * n);
        for (Index i = 0; i < n; ++i) {
          row[i] = f.lambda[s[i]][d];
          row[n + i] = -f.lambda[u[i]][d];
        }
        interior.add(std::move(row), Relation::Equal, 0);
      }
      for (Index i = 0; i < 2 * n; ++i) {
        Vector e(2 * n);
        e[i] = 1;
        interior.add(std::move(e), Relation::Greater, 0);
      }
      ok = !solve(interior).feasible;
    }
    if (ok && !certified) {
      // A common point using a vertex of s outside u breaks face-to-face.
      LinearSystem face(2 * n);
      for (Index i = 0; i < 2 * n; ++i) face.require_nonnegative(i);
      for (Index d = 0; d < n; ++d) {
        Vector row(2 * n);
        for (Index i = 0; i < n; ++i) {
          row[i] = f.lambda[s[i]][d];
          row[n + i] = -f.lambda[u[i]][d];
        }
        face.add(std::move(row), Relation::Equal, 0);
      }
      Vector outside(2 * n);
      for (Index i = 0; i < n; ++i) {
        if (!std::binary_search(u.begin(), u.end(), s[i])) outside[i] = 1;
      }
      face.add(std::move(outside), Relation::Equal, 1);
      ok = !solve(face).feasible;
    }
    if (!ok) {
      std::lock_guard<std::mutex> lock(mu);
      disjoint = false;
    }
  });
  report.disjoint = disjoint;
  if (!disjoint) fail("two cells overlap or do not meet in a common face");

  return report;
}

Triangulation triangulate_te_cone(const TeCone& cone, const VerifyOptions& options) {
  const Matrix& a = cone.generators();
  const DecompositionResult res = decompose_te_set(a);
  if (!res.ok()) throw ClassificationError("generators do not decompose into te-bricks");
  const Decomposition& d = *res.decomposition;
  std::vector<Triangulation> parts;
  if (!d.tu_set.empty()) {
    Triangulation t;
    IndexList cell;
    for (Index i : d.tu_set) {
      cell.push_back(t.points.size());
      t.points.push_back(a.row(i));
    }
    t.cells.push_back(cell);
    t.lifting = Vector(cell.size(), Rat(0));
    parts.push_back(std::move(t));
  }
  for (const auto& s : d.laces) parts.push_back(stellar_lace_triangulation(a.select_rows(s)));
  for (const auto& s : d.thin) parts.push_back(thin_triangulation(a.select_rows(s)));
  for (const auto& s : d.thick) {
    if (s.size() > 6) throw UnsupportedError("thick te-interlaces above six rows are not supported");
    const Matrix rows = a.select_rows(s);
    parts.push_back(thick_case_a(rows) ? thick_case_a_triangulation(rows)
                                       : thick_case_b_triangulation(rows));
  }
  Triangulation t = parts.front();
  for (Index k = 1; k < parts.size(); ++k) t = join(t, parts[k]);

  // Generators first, in their original order.
  std::vector<Index> order;
  for (Index i = 0; i < a.rows(); ++i) {
    auto it = std::find(t.points.begin(), t.points.end(), a.row(i));
    order.push_back(static_cast<Index>(it - t.points.begin()));
  }
  for (Index p = 0; p < t.points.size(); ++p) {
    if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
  }
  std::vector<Index> where(order.size());
  for (Index k = 0; k < order.size(); ++k) where[order[k]] = k;
  Triangulation out;
  for (Index p : order) out.points.push_back(t.points[p]);
  for (const auto& c : t.cells) {
    IndexList cell;
    for (Index p : c) cell.push_back(where[p]);
    out.cells.push_back(sorted_cell(cell));
  }
  std::sort(out.cells.begin(), out.cells.end());
  if (t.lifting) {
    Vector w;
    for (Index p : order) w.push_back((*t.lifting)[p]);
    out.lifting = w;
  }
  const TriangulationReport report = verify_triangulation(cone, out, options);
  if (!report.ok()) {
    std::string why;
    for (const auto& f : report.failures) why += f + "; ";
    throw ConstructionError("constructed triangulation failed verification: " + why);
  }
  return out;
}

std::vector<std::pair<Vector, Integer>> caratheodory_decompose(const TeCone& cone,
                                                               const Triangulation& t,
                                                               const Vector& x) {
  for (const auto& v : x) {
    if (!is_integer(v)) throw MembershipError("point is not integral");
  }
  const Vector lam = cone.coordinates(x);
  if (std::any_of(lam.begin(), lam.end(), [](const Rat& v) { return v < 0; })) {
    throw MembershipError("point is outside the cone");
  }
  const Frame f = make_frame(cone, t.points, t.cells);
  const auto c = locate(f, t.cells, lam);
  if (!c) throw ConstructionError("triangulation does not cover the point");
  const Vector mu = f.cell_coords(*c, lam);
  std::vector<std::pair<Vector, Integer>> out;
  for (Index i = 0; i < mu.size(); ++i) {
    if (mu[i] == 0) continue;
    if (!is_integer(mu[i])) throw ConstructionError("cell is not unimodular");
    out.emplace_back(t.points[t.cells[*c][i]], mu[i].get_num());
  }
  return out;
}

}  // namespace teq
