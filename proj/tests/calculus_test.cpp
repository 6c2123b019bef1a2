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
#include <gtest/gtest.h>

#include "random_matrices.hpp"
#include "teq/calculus.hpp"
#include "teq/classify.hpp"
#include "teq/errors.hpp"
#include "teq/fixtures.hpp"

namespace teq {
namespace {

TEST(Pivot, Examples) {
  EXPECT_EQ(pivot(fixtures::min_non_tu2(), {0, 0}), (Matrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(pivot(Matrix{{-2, 4}}, {0, 0}), (Matrix{{1, -2}}));
  EXPECT_THROW(pivot(Matrix{{0, 1}}, {0, 0}), PivotError);
  EXPECT_THROW(trim(Matrix{{0, 1}}, {0, 0}), PivotError);
}

TEST(Trim, Examples) {
  EXPECT_EQ(trim(fixtures::min_non_tu2(), {0, 0}), (Matrix{{2}}));
  const Matrix t = trim(Matrix{{1, 1}}, {0, 0});
  EXPECT_EQ(t.rows(), 0u);
}

TEST(Pivot, PreservesEquimodularity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = testing::random_matrix(rng, 2 + t % 2, 4, -1, 1);
    if (rank(a) != a.rows()) continue;
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(0, j) == 0) continue;
      EXPECT_EQ(is_equimodular(a), is_equimodular(pivot(a, {0, j})));
    }
  }
}

// For a 0/+-1 pivot row, full square submatrices through the pivot column
// keep |det| after trimming.
TEST(Trim, DeterminantBookkeeping) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 300; ++t) {
    Matrix a = testing::random_matrix(rng, 4, 4, -3, 3);
    std::vector<Rat> e = a.entries();
    std::uniform_int_distribution<long> unit(-1, 1);
    for (Index j = 0; j < 4; ++j) e[j] = unit(rng);
    e[1] = 1;
    a = Matrix(4, 4, e);
    EXPECT_EQ(abs(det(a)), abs(det(trim(a, {0, 1}))));
  }
}

TEST(Trim, InterlaceTrimsAreEven) {
  for (const Matrix& a : {fixtures::conjecture4(), fixtures::conjecture6()}) {
    const Matrix t = trim(a, {0, 0});
    for (const auto& x : t.entries()) {
      EXPECT_TRUE(x == 0 || x == 2 || x == -2) << to_string(x);
    }
    EXPECT_TRUE(rescale(t).is_zero_pm1());
  }
}

TEST(Resign, Involution) {
  std::mt19937_64 rng(23);
  const Matrix a = testing::random_matrix(rng, 3, 4, -2, 2);
  EXPECT_EQ(resign(a, {1, 1, 1}, {1, 1, 1, 1}), a);
  const Signs r = testing::random_signs(rng, 3);
  const Signs c = testing::random_signs(rng, 4);
  EXPECT_EQ(resign(resign(a, r, c), r, c), a);
  EXPECT_THROW(resign(a, {1, 1}, c), DimensionError);
}

TEST(Resign, PreservesTotalEquimodularity) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 60; ++t) {
    const Matrix a = testing::random_matrix(rng, 3, 4, -1, 1);
    const Matrix b = resign(a, testing::random_signs(rng, 3),
                            testing::random_signs(rng, 4));
    EXPECT_EQ(is_totally_equimodular(a), is_totally_equimodular(b));
  }
}

TEST(Rescale, Examples) {
  EXPECT_EQ(rescale(Matrix{{2, -2, 0}, {0, 0, 3}}),
            (Matrix{{1, -1, 0}, {0, 0, 1}}));
  EXPECT_EQ(rescale(Matrix{{2}}), (Matrix{{1}}));
  EXPECT_THROW(rescale(Matrix{{1, 2}}), DomainError);
  EXPECT_TRUE(is_essentially_pm1(Matrix{{2, -2}, {1, 0}}));
  EXPECT_FALSE(is_essentially_pm1(Matrix{{1, 2}}));
}

TEST(Nega, Examples) {
  EXPECT_EQ(nega(Matrix{{1, -1}, {-1, 1}}), (Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(nega(ones(2, 3)), Matrix(2, 3));
  EXPECT_THROW(nega(Matrix{{0, 1}}), DomainError);
  std::mt19937_64 rng(25);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = testing::random_pm1(rng, 3, 4);
    EXPECT_EQ(a, ones(3, 4) - nega(a).scaled(2));
    EXPECT_EQ(nega(a.negated()), ones(3, 4) - nega(a));
  }
}

TEST(Nega, ResignFlipsSignPatterns) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = testing::random_pm1(rng, 3, 4);
    const Signs r = testing::random_signs(rng, 3);
    const Signs c = testing::random_signs(rng, 4);
    const Matrix n = nega(resign(a, r, c));
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 4; ++j) {
        const bool flip = (r[i] < 0) != (c[j] < 0);
        EXPECT_EQ(n(i, j), flip ? 1 - nega(a)(i, j) : nega(a)(i, j));
      }
    }
  }
}

TEST(Core, Examples) {
  EXPECT_EQ(core_of(fixtures::conjecture4()).core,
            (Matrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(core_of(ones(3, 3)).core, Matrix(2, 2));
  EXPECT_EQ(core_of(Matrix{{1, 1}, {1, -1}}).core, (Matrix{{1}}));
  EXPECT_THROW(core_of(Matrix{{1, 0}}), DomainError);
}

TEST(Core, Reconstructs) {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 100; ++t) {
    const Matrix a = testing::random_pm1(rng, 1 + t % 5, 1 + t % 4);
    const Index r = t % a.rows();
    const Index c = (t / 3) % a.cols();
    EXPECT_EQ(core_of(a, r, c).reconstruct(), a);
  }
}

TEST(Complement, Examples) {
  const Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(row_complement(b, 0), (Matrix{{0, 1}, {1, 1}}));
  EXPECT_EQ(row_complement(row_complement(b, 1), 1), b);
  EXPECT_EQ(col_complement(col_complement(b, 0), 0), b);
  EXPECT_THROW(row_complement(b, 2), DimensionError);
  EXPECT_THROW(row_complement(Matrix{{2}}, 0), DomainError);
}

TEST(Complement, RowAndColumnOperationsCommute) {
  std::mt19937_64 rng(28);
  for (int t = 0; t < 50; ++t) {
    const Matrix b = testing::random_zero_one(rng, 3, 4);
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 4; ++j) {
        EXPECT_EQ(col_complement(row_complement(b, i), j),
                  row_complement(col_complement(b, j), i));
      }
    }
  }
}

TEST(Complement, OrbitSize) {
  EXPECT_EQ(complement_orbit(Matrix{{1}}).size(), 4u);
  EXPECT_EQ(complement_orbit(Matrix{{1}}, true).size(), 1u);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const Matrix b = testing::random_zero_one(rng, 3, 3);
    EXPECT_LE(complement_orbit(b, true).size(), 16u);
    EXPECT_EQ(complement_orbit(b).size(), 16u);
  }
}

TEST(Complement, ConjectureCoreOrbitIsMinimallyNonTu) {
  const Matrix b = core_of(fixtures::conjecture4()).core;
  for (const auto& m : complement_orbit(b)) EXPECT_TRUE(is_min_non_tu(m));
}

// Trimming the canonical matrix at (i+1, j+1) gives, up to permutation,
// -2 A_{i+1}^{j+1} diag(eps) B^{[j]}_{[i]} diag(mu) with eps = 1 - 2 B^j and
// mu = 1 - 2 B_i, except that eps_i and mu_j are +1.
void expect_trim_matches_orbit(const Matrix& b) {
  const Matrix a = from_core(b);
  const Index m = b.rows();
  const Index n = b.cols();
  for (Index i = 0; i <= m; ++i) {
    for (Index j = 0; j <= n; ++j) {
      Signs eps(m, 1);
      Signs mu(n, 1);
      if (j > 0) {
        for (Index r = 0; r < m; ++r) eps[r] = b(r, j - 1) == 1 ? -1 : 1;
      }
      if (i > 0) {
        for (Index c = 0; c < n; ++c) mu[c] = b(i - 1, c) == 1 ? -1 : 1;
      }
      if (i > 0) eps[i - 1] = 1;
      if (j > 0) mu[j - 1] = 1;
      const Matrix rhs =
          resign(complement(b, i, j), eps, mu).scaled(-2 * a(i, j));
      EXPECT_TRUE(equal_up_to_permutation(trim(a, {i, j}), rhs))
          << "i=" << i << " j=" << j << "\n" << to_string(b);
    }
  }
}

TEST(Complement, TrimCorrespondence) {
  expect_trim_matches_orbit(core_of(fixtures::conjecture4()).core);
  expect_trim_matches_orbit(core_of(fixtures::conjecture6()).core);
  std::mt19937_64 rng(30);
  for (int t = 0; t < 40; ++t) {
    expect_trim_matches_orbit(testing::random_zero_one(rng, 1 + t % 4, 1 + t % 3));
  }
}

TEST(Permutation, CanonicalDetectsEquivalence) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = testing::random_matrix(rng, 3, 4, -1, 1);
    const Matrix p =
        a.submatrix(testing::random_permutation(rng, 3), testing::random_permutation(rng, 4));
    EXPECT_TRUE(equal_up_to_permutation(a, p));
  }
  EXPECT_FALSE(equal_up_to_permutation(Matrix{{1, 0}, {0, 1}}, Matrix{{1, 1}, {0, 0}}));
}

}  // namespace
}  // namespace teq
