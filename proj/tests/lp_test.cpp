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
#include "teq/errors.hpp"
#include "teq/lp.hpp"

namespace teq {
namespace {

TEST(Lp, Interval) {
  LinearSystem s(1);
  s.add({1}, Relation::GreaterEqual, 0);
  s.add({1}, Relation::LessEqual, 1);
  const auto r = solve(s);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(s, r.point));
}

TEST(Lp, StrictContradiction) {
  LinearSystem s(1);
  s.add({1}, Relation::Less, 0);
  s.add({1}, Relation::Greater, 0);
  const auto r = solve(s);
  EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(is_infeasibility_certificate(s, *r.certificate));
}

TEST(Lp, StrictSlackIsReported) {
  LinearSystem s(1);
  s.add({1}, Relation::Greater, 0);
  s.add({1}, Relation::Less, 3);
  const auto r = solve(s);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.slack, 1);
  EXPECT_GT(r.point[0], 0);
  EXPECT_LT(r.point[0], 3);
}

// Interiors of cone((1,0),(1,1)) and cone((1,1),(1,2)) only share the ray
// through (1,1).
TEST(Lp, AdjacentConeInteriorsAreDisjoint) {
  LinearSystem s(4);
  s.add({1, 1, -1, -1}, Relation::Equal, 0);
  s.add({0, 1, -1, -2}, Relation::Equal, 0);
  for (Index j = 0; j < 4; ++j) {
    Vector e(4);
    e[j] = 1;
    s.add(e, Relation::Greater, 0);
  }
  const auto r = solve(s);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(is_infeasibility_certificate(s, *r.certificate));
}

TEST(Lp, NonnegativeVariables) {
  LinearSystem s(2);
  s.require_nonnegative(0);
  s.require_nonnegative(1);
  s.add({1, 1}, Relation::LessEqual, -1);
  const auto r = solve(s);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(is_infeasibility_certificate(s, *r.certificate));
  EXPECT_THROW(s.add({1}, Relation::Equal, 0), DimensionError);
}

TEST(Lp, RandomSystemsAreDecidedWithProof) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> rel(0, 4);
  int feasible = 0;
  int infeasible = 0;
  for (int t = 0; t < 300; ++t) {
    const Index n = 1 + t % 4;
    LinearSystem s(n);
    const Matrix a = testing::random_matrix(rng, 2 + t % 5, n + 1, -3, 3);
    for (Index i = 0; i < a.rows(); ++i) {
      Vector c(n);
      for (Index j = 0; j < n; ++j) c[j] = a(i, j);
      s.add(c, static_cast<Relation>(rel(rng)), a(i, n));
    }
    if (t % 3 == 0) s.require_nonnegative(0);
    const auto r = solve(s);
    if (r.feasible) {
      ++feasible;
      EXPECT_TRUE(satisfies(s, r.point));
    } else {
      ++infeasible;
      ASSERT_TRUE(r.certificate);
      EXPECT_TRUE(is_infeasibility_certificate(s, *r.certificate));
    }
    const auto again = solve(s);
    EXPECT_EQ(again.feasible, r.feasible);
    EXPECT_EQ(again.point, r.point);
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 20);
}

// Beale's cycling example; its optimum 1/20 is attained but not exceeded.
TEST(Lp, DegenerateCyclingCandidate) {
  for (const Relation rel : {Relation::GreaterEqual, Relation::Greater}) {
    LinearSystem s(4);
    for (Index j = 0; j < 4; ++j) s.require_nonnegative(j);
    s.add({make_rat(1, 4), -60, make_rat(-1, 25), 9}, Relation::LessEqual, 0);
    s.add({make_rat(1, 2), -90, make_rat(-1, 50), 3}, Relation::LessEqual, 0);
    s.add({0, 0, 1, 0}, Relation::LessEqual, 1);
    s.add({make_rat(3, 4), -150, make_rat(1, 50), -6}, rel, make_rat(1, 20));
    const auto r = solve(s);
    if (rel == Relation::GreaterEqual) {
      ASSERT_TRUE(r.feasible);
      EXPECT_TRUE(satisfies(s, r.point));
    } else {
      ASSERT_FALSE(r.feasible);
      EXPECT_TRUE(is_infeasibility_certificate(s, *r.certificate));
    }
  }
}

}  // namespace
}  // namespace teq
