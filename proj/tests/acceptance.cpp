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
// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "brick_corpus.hpp"
#include "random_matrices.hpp"
#include "teq/calculus.hpp"
#include "teq/classify.hpp"
#include "teq/decompose.hpp"
#include "teq/errors.hpp"
#include "teq/fixtures.hpp"
#include "teq/hilbert.hpp"
#include "teq/hunt.hpp"
#include "teq/parallel.hpp"
#include "teq/triangulation.hpp"

namespace teq {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed expectation; the first few are kept in the detail.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.expect(seconds < budget_seconds, "over the time budget");
  if (!out.pass) ++failures;
  std::printf("%s %2d  %s  [%s%.2f s]\n", out.pass ? "PASS" : "FAIL", id, title.c_str(),
              out.detail.str().c_str(), seconds);
  std::fflush(stdout);
}

// Cones collected from the Hilbert, triangulation and decomposition checks.
std::vector<Matrix> zonotope_corpus;

std::set<Vector> as_set(const std::vector<Vector>& v) { return {v.begin(), v.end()}; }

Matrix flip_entry(std::mt19937_64& rng, const Matrix& a) {
  std::vector<Rat> e = a.entries();
  const Index k = rng() % e.size();
  e[k] = e[k] == 0 ? Rat((rng() % 2) ? 1 : -1) : Rat(0);
  return Matrix(a.rows(), a.cols(), std::move(e));
}

// Thin interlaces lifted from complement-tu cores of size <= 4, one per
// class. Rows of the core are taken in non-increasing order.
std::vector<Matrix> thin_interlaces() {
  std::vector<Matrix> out;
  std::set<std::string> seen;
  for (Index k = 1; k <= 4; ++k) {
    std::vector<unsigned> rows(k, (1U << k) - 1);
    std::function<void(Index)> fill = [&](Index i) {
      if (i == k) {
        std::vector<IntVector> r;
        for (unsigned v : rows) {
          IntVector row(k);
          for (Index c = 0; c < k; ++c) row[c] = (v >> c) & 1U;
          r.push_back(row);
        }
        const Matrix b = Matrix::from_int_rows(r, k);
        if (!is_complement_tu(b)) return;
        const Matrix a = from_core(b);
        if (rank(a) != a.rows()) return;
        if (seen.insert(canonical_form(a).key).second) out.push_back(a);
        return;
      }
      const unsigned top = i == 0 ? (1U << k) - 1 : rows[i - 1];
      for (unsigned v = 0; v <= top; ++v) {
        rows[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  }
  return out;
}

std::vector<Matrix> thin_corpus;

void criterion1() {
  criterion(1, "Figure-1 matrix is TE and its laces are exactly the minimal non-TU subsets", 1.0,
            [](Outcome& o) {
              const Matrix m = fixtures::figure1();
              o.expect(check_totally_equimodular(m).holds, "check-te");
              const std::set<IndexList> expected = {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 2, 4}, {1, 2, 5}};
              const auto found = minimal_non_tu_subsets(m);
              o.expect(std::set<IndexList>(found.begin(), found.end()) == expected &&
                           found.size() == expected.size(),
                       "lace set");
              o.detail << found.size() << " minimal non-TU subsets; ";
            });
}

void criterion2() {
  criterion(2, "trim recursion agrees with brute-force TE on 500 matrices up to 5x6", 300.0,
            [](Outcome& o) {
              std::mt19937_64 rng(2002);
              int te = 0;
              for (int t = 0; t < 500; ++t) {
                Matrix a;
                if (t % 3 == 0) {
                  a = testing::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, -1, 1);
                } else {
                  do {
                    std::vector<testing::Brick> bricks;
                    const int count = 1 + rng() % 2;
                    for (int b = 0; b < count; ++b) bricks.push_back(testing::random_brick(rng, false));
                    a = testing::assemble(rng, bricks).matrix;
                  } while (a.rows() > 5 || a.cols() > 6);
                  if (t % 3 == 2) a = flip_entry(rng, a);
                }
                const bool brute = is_totally_equimodular(a);
                te += brute;
                o.expect(is_totally_equimodular_by_trims(a) == brute, to_string(a));
              }
              o.detail << te << " TE, " << 500 - te << " not; ";
            });
}

void criterion3() {
  criterion(3, "trim equimodularity agrees with direct equimodularity on 500 matrices up to 4x6",
            60.0, [](Outcome& o) {
              std::mt19937_64 rng(3003);
              int equi = 0;
              int done = 0;
              while (done < 500) {
                const Index m = 1 + rng() % 4;
                const Index n = m + rng() % (7 - m);
                Matrix a;
                const Index pivot_row = rng() % m;
                if (done % 2 == 0) {
                  a = testing::random_matrix(rng, m, n, -3, 3);
                  std::vector<Rat> e = a.entries();
                  for (Index j = 0; j < n; ++j) e[pivot_row * n + j] = Rat(long(rng() % 3) - 1);
                  a = Matrix(m, n, std::move(e));
                } else {
                  // Unimodular row operations keep equimodularity; the
                  // pivot row is never touched so it stays 0,+-1.
                  Matrix b;
                  do {
                    b = testing::random_brick(rng, false).rows;
                  } while (b.rows() != m || b.cols() > 6);
                  std::vector<Vector> rows;
                  for (Index i = 0; i < m; ++i) rows.push_back(b.row(i));
                  for (int op = 0; op < 4 && m > 1; ++op) {
                    const Index i = rng() % m;
                    const Index j = rng() % m;
                    if (i == j || i == pivot_row) continue;
                    const Rat f(long(rng() % 5) - 2);
                    for (Index c = 0; c < b.cols(); ++c) rows[i][c] += f * rows[j][c];
                  }
                  a = Matrix::from_rows(rows, b.cols());
                  if (done % 4 == 3 && m > 1) {
                    std::vector<Rat> e = a.entries();
                    const Index i = (pivot_row + 1) % m;
                    e[i * a.cols() + rng() % a.cols()] += 1;
                    a = Matrix(m, a.cols(), std::move(e));
                  }
                }
                if (rank(a) != a.rows() || a.row(pivot_row) == Vector(a.cols(), Rat(0))) continue;
                ++done;
                const bool direct = is_equimodular(a);
                equi += direct;
                o.expect(check_trim_equimodularity(a, pivot_row) == direct, to_string(a));
              }
              o.detail << equi << " equimodular, " << 500 - equi << " not; ";
            });
}

void criterion4() {
  criterion(4, "200 assembled brick unions decompose back to their partition", 600.0,
            [](Outcome& o) {
              std::mt19937_64 rng(4004);
              std::size_t bricks = 0;
              for (int t = 0; t < 200; ++t) {
                const auto asm_ = testing::random_assembly(rng);
                zonotope_corpus.push_back(asm_.matrix);
                bricks += asm_.bricks.size();
                o.expect(is_totally_equimodular(asm_.matrix), "assembly not TE");
                const auto res = decompose_te_set(asm_.matrix);
                if (!res.ok()) {
                  o.expect(false, "decomposition failed");
                  continue;
                }
                const auto& d = *res.decomposition;
                IndexList tu;
                std::vector<IndexList> laces, thin, thick;
                for (std::size_t b = 0; b < asm_.bricks.size(); ++b) {
                  const auto& rows = asm_.brick_rows[b];
                  switch (asm_.bricks[b].kind) {
                    case testing::Kind::Tu: tu.insert(tu.end(), rows.begin(), rows.end()); break;
                    case testing::Kind::Lace: laces.push_back(rows); break;
                    case testing::Kind::Thin: thin.push_back(rows); break;
                    case testing::Kind::Thick: thick.push_back(rows); break;
                  }
                }
                std::sort(tu.begin(), tu.end());
                std::sort(laces.begin(), laces.end());
                std::sort(thin.begin(), thin.end());
                std::sort(thick.begin(), thick.end());
                auto got_laces = d.laces;
                auto got_thin = d.thin;
                auto got_thick = d.thick;
                std::sort(got_laces.begin(), got_laces.end());
                std::sort(got_thin.begin(), got_thin.end());
                std::sort(got_thick.begin(), got_thick.end());
                o.expect(d.tu_set == tu && got_laces == laces && got_thin == thin && got_thick == thick,
                         "partition differs");
                o.expect(Rat(eqdet_from_decomposition(d)) == eqdet(asm_.matrix), "eqdet differs");
              }
              o.detail << bricks << " bricks; ";
            });
}

void criterion6() {
  criterion(6, "Hilbert formulas equal the zonotope oracle", 600.0, [](Outcome& o) {
    std::mt19937_64 rng(6006);
    auto compare = [&](const Matrix& a) {
      zonotope_corpus.push_back(a);
      const auto type = brick_type(a);
      if (!type) {
        o.expect(false, "not a brick: " + to_string(a));
        return;
      }
      const TeCone cone(a);
      o.expect(as_set(hilbert_basis_brick(a, type->tag).sorted()) == as_set(hilbert_oracle(cone).sorted()),
               to_string(a));
    };
    for (int t = 0; t < 100; ++t) compare(testing::random_lace(rng, 2 + t % 4));
    thin_corpus = thin_interlaces();
    for (const auto& a : thin_corpus) {
      const auto type = brick_type(a);
      o.expect(type && (type->tag == BrickTag::ThinInterlace || (type->tag == BrickTag::TeLace && a.rows() == 2)),
               "lifted core is not thin");
      compare(a);
    }
    compare(fixtures::conjecture4());
    compare(fixtures::conjecture6());

    // The extra element of the 4x4 matrix.
    const Matrix c4 = fixtures::conjecture4();
    const HilbertBasis hb = hilbert_basis_brick(c4, BrickTag::ThickInterlace);
    std::vector<Vector> extra;
    for (Index i = 0; i < hb.elements.size(); ++i) {
      if (hb.origins[i] != Origin::Generator && hb.origins[i] != Origin::PairHalfSum) extra.push_back(hb.elements[i]);
    }
    o.expect(extra == std::vector<Vector>{Vector{1, 0, 0, 0}}, "extra element of the 4x4 matrix");

    // Case selector against n = 2p (mod 4), p the parity of +1 entries per column.
    int selector_checks = 0;
    for (const Matrix& base : {fixtures::conjecture4(), fixtures::conjecture6()}) {
      for (int t = 0; t < 20; ++t) {
        const Matrix a = t == 0 ? base : testing::scramble(rng, base);
        const Index n = a.rows();
        std::set<int> parity;
        for (Index j = 0; j < a.cols(); ++j) {
          int plus = 0;
          for (Index i = 0; i < n; ++i) plus += a(i, j) == 1;
          parity.insert(plus % 2);
        }
        o.expect(parity.size() == 1, "column parities differ");
        o.expect(thick_case_a(a) == (n % 4 == Index(2 * *parity.begin()) % 4), "selector");
        ++selector_checks;
        if (t < 3) compare(a);
      }
    }
    o.detail << "100 laces, " << thin_corpus.size() << " thin classes, " << selector_checks
             << " selector checks; ";
  });
}

void criterion7() {
  criterion(7, "constructed triangulations pass all five checks", 1800.0, [](Outcome& o) {
    std::mt19937_64 rng(7007);
    int built = 0;
    auto check = [&](const Matrix& a, const Triangulation& t, std::size_t cells, const std::string& what) {
      zonotope_corpus.push_back(a);
      const TriangulationReport r = verify_triangulation(TeCone(a), t);
      o.expect(r.hilbert && r.unimodular && r.covering && r.disjoint && r.regular, what + " checks");
      o.expect(cells == 0 || t.cells.size() == cells,
               what + " has " + std::to_string(t.cells.size()) + " cells, expected " + std::to_string(cells));
      ++built;
    };
    for (int t = 0; t < 20; ++t) {
      const Matrix a = testing::random_lace(rng, 2 + t % 4);
      if (brick_type(a)->tag != BrickTag::TeLace) continue;
      check(a, stellar_lace_triangulation(a), a.rows(), "lace");
    }
    for (const auto& a : thin_corpus) {
      if (a.rows() > 5) continue;
      check(a, thin_triangulation(a), std::size_t(1) << (a.rows() - 1), "thin");
    }
    const Matrix c4 = fixtures::conjecture4();
    const Matrix c6a = resign(fixtures::conjecture6(), Signs{-1, 1, 1, 1, 1, 1}, Signs(6, 1));
    const Matrix c4b = resign(c4, Signs{-1, 1, 1, 1}, Signs(4, 1));
    const Matrix c6 = fixtures::conjecture6();
    check(c4, thick_case_a_triangulation(c4), 16, "case a 4x4");
    check(c6a, thick_case_a_triangulation(c6a), 96, "case a 6x6");
    check(c4b, thick_case_b_triangulation(c4b), 0, "case b 4x4");
    check(c6, thick_case_b_triangulation(c6), 0, "case b 6x6");
    o.detail << built << " triangulations; ";
  });
}

void criterion5() {
  criterion(5, "zonotope point count equals gcddet on the whole corpus", 600.0, [](Outcome& o) {
    for (const auto& a : zonotope_corpus) {
      o.expect(Integer(zonotope_points(TeCone(a)).points.size()) == gcddet(a), to_string(a));
    }
    o.detail << zonotope_corpus.size() << " cones; ";
  });
}

void criterion8() {
  criterion(8, "integer Caratheodory on 50 random 0,1 te-cones", 600.0, [](Outcome& o) {
    std::mt19937_64 rng(8008);
    int cones = 0;
    int points = 0;
    int attempts = 0;
    int non_tu = 0;
    while (cones < 50 && attempts < 200000) {
      ++attempts;
      const Index m = 1 + rng() % 5;
      const Index n = m + rng() % (7 - m);
      const Matrix a = testing::random_zero_one(rng, m, n);
      if (rank(a) != m || !is_totally_equimodular(a)) continue;
      if (is_totally_unimodular(a) && cones % 3 != 0) continue;  // favour non-TU cones
      ++cones;
      non_tu += !is_totally_unimodular(a);
      const TeCone cone(a);
      const Triangulation t = triangulate_te_cone(cone);
      for (int p = 0; p < 20; ++p) {
        Vector x(n);
        for (const auto& g : t.points) {
          const long c = long(rng() % 4);
          for (Index j = 0; j < n; ++j) x[j] += Rat(c) * g[j];
        }
        const auto parts = caratheodory_decompose(cone, t, x);
        o.expect(parts.size() <= cone.dimension(), "too many summands");
        Vector sum(n);
        for (const auto& [v, c] : parts) {
          o.expect(c > 0, "nonpositive coefficient");
          for (Index j = 0; j < n; ++j) sum[j] += v[j] * Rat(c);
        }
        o.expect(sum == x, "summands do not add up");
        ++points;
      }
    }
    o.expect(cones == 50, "could not sample 50 te-sets");
    o.detail << cones << " cones (" << non_tu << " not TU), " << points << " points; ";
  });
}

void criterion9() {
  criterion(9, "hunt finds one thick interlace of size 4, one of size 6, none of size 8", 3600.0,
            [](Outcome& o) {
              const auto t0 = Clock::now();
              const SearchReport r4 = enumerate_thick_interlaces(4);
              const double s4 = std::chrono::duration<double>(Clock::now() - t0).count();
              o.expect(r4.representatives.size() == 1 &&
                           r4.representatives[0] == canonical_form(fixtures::conjecture4()),
                       "size 4");
              o.expect(raw_thick_interlaces(4) == r4.representatives, "raw enumeration at size 4");
              o.expect(s4 < 60, "size 4 over a minute");
              const SearchReport r6 = enumerate_thick_interlaces(6);
              o.expect(r6.representatives.size() == 1 &&
                           r6.representatives[0] == canonical_form(fixtures::conjecture6()),
                       "size 6");
              HuntOptions options;
              options.jobs = default_jobs();
              const auto path = std::filesystem::temp_directory_path() / "teq_acceptance_hunt8.ndjson";
              std::filesystem::remove(path);
              options.checkpoint = path.string();
              const SearchReport r8 = enumerate_thick_interlaces(8, options);
              std::filesystem::remove(path);
              o.expect(r8.representatives.empty(), "size 8 not empty");
              o.detail << "size 8: " << r8.shards << " shards, " << r8.candidates_examined
                       << " candidates, " << r8.elapsed.count() << " s; ";
            });
}

void criterion10() {
  criterion(10, "negative fixture: h1 = h4 + M1 and h4 is a Hilbert element of its lace cone", 60.0,
            [](Outcome& o) {
              const Matrix m = fixtures::figure1();
              const Vector h1{2, 1, 1, 1};
              const Vector h4{1, 0, 1, 1};
              Vector sum(4);
              for (Index j = 0; j < 4; ++j) sum[j] = h4[j] + m(0, j);
              o.expect(sum == h1, "identity");
              // h4 is the half-sum of rows {2,3,6}; it lies outside the cone
              // on rows {3,4,5,6}, so the check uses its own lace.
              const TeCone own(m.select_rows(IndexList{1, 2, 5}));
              o.expect(is_hilbert_element(own, h4), "h4 in its lace cone");
              const TeCone rows3456(m.select_rows(IndexList{2, 3, 4, 5}));
              o.expect(!rows3456.contains(h4), "h4 unexpectedly in cone of rows {3,4,5,6}");
              o.detail << "h4 outside cone of rows {3,4,5,6}, checked on rows {2,3,6}; ";
            });
}

}  // namespace
}  // namespace teq

int main() {
  using namespace teq;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion6();
  criterion7();
  criterion5();
  criterion8();
  criterion9();
  criterion10();
  return failures == 0 ? 0 : 1;
}
