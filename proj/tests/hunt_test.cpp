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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "random_matrices.hpp"
#include "teq/calculus.hpp"
#include "teq/classify.hpp"
#include "teq/errors.hpp"
#include "teq/fixtures.hpp"
#include "teq/hunt.hpp"

namespace teq {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("teq_" + name)).string();
}

TEST(CanonicalForm, InvariantUnderSignsAndPermutations) {
  std::mt19937_64 rng(7);
  for (const Matrix& a : {fixtures::conjecture4(), fixtures::conjecture6()}) {
    const CanonicalForm c = canonical_form(a);
    EXPECT_EQ(c.matrix.row(0), Vector(a.cols(), Rat(1)));
    for (int t = 0; t < 10; ++t) {
      const Matrix s = testing::scramble(rng, a);
      EXPECT_EQ(canonical_form(s), c);
      EXPECT_EQ(canonical_invariant(s), canonical_invariant(a));
      EXPECT_TRUE(equivalent(s, a));
    }
  }
}

TEST(CanonicalForm, SeparatesClasses) {
  EXPECT_FALSE(canonical_form(fixtures::conjecture4()) == canonical_form(fixtures::conjecture6()));
  const Matrix h4 = fixtures::conjecture4();
  const Matrix flipped = resign(h4.submatrix(IndexList{2, 0, 3, 1}, IndexList{1, 3, 0, 2}),
                                Signs{-1, 1, 1, -1}, Signs{1, -1, 1, 1});
  EXPECT_TRUE(equivalent(h4, flipped));
  const Matrix all_ones = ones(4, 4);
  EXPECT_FALSE(equivalent(h4, all_ones));
  EXPECT_THROW(canonical_form(Matrix{{1, 0}, {1, 1}}), DomainError);
  EXPECT_THROW(canonical_form(Matrix{{1, 1, 1}, {1, -1, 1}}), DomainError);
}

TEST(MinNonTuCores, SmallSizes) {
  EXPECT_TRUE(enumerate_min_non_tu_cores(1).empty());
  const auto three = enumerate_min_non_tu_cores(3);
  ASSERT_EQ(three.size(), 1u);
  EXPECT_TRUE(equal_up_to_permutation(three[0], Matrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_THROW(enumerate_min_non_tu_cores(4), DomainError);
  EXPECT_THROW(enumerate_min_non_tu_cores(11), UnsupportedError);
}

TEST(MinNonTuCores, FiveFilters) {
  const auto five = enumerate_min_non_tu_cores(5);
  ASSERT_FALSE(five.empty());
  for (const auto& b : five) {
    EXPECT_TRUE(is_min_non_tu(b));
    Rat total = 0;
    for (Index i = 0; i < 5; ++i) {
      Rat row = 0;
      Rat col = 0;
      for (Index j = 0; j < 5; ++j) {
        row += b(i, j);
        col += b(j, i);
      }
      EXPECT_TRUE(is_integer(row / 2));
      EXPECT_TRUE(is_integer(col / 2));
      total += row;
    }
    EXPECT_EQ(Integer(total.get_num() % 4), 2);
  }
}

// Every 0/1 matrix with even row and column sums is its free
// (k-1) x (k-1) block plus parity; compare all classes found that way.
TEST(MinNonTuCores, AgreesWithParityBruteForce) {
  for (Index k : {3, 5}) {
    std::set<Matrix, bool (*)(const Matrix&, const Matrix&)> expected(
        [](const Matrix& x, const Matrix& y) { return x.entries() < y.entries(); });
    const Index f = k - 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (f * f)); ++bits) {
      std::vector<IntVector> rows(k, IntVector(k, 0));
      for (Index i = 0; i < f; ++i) {
        for (Index j = 0; j < f; ++j) rows[i][j] = (bits >> (i * f + j)) & 1;
      }
      for (Index i = 0; i < f; ++i) {
        for (Index j = 0; j < f; ++j) rows[i][f] ^= rows[i][j];
      }
      for (Index j = 0; j < k; ++j) {
        for (Index i = 0; i < f; ++i) rows[f][j] ^= rows[i][j];
      }
      const Matrix b = Matrix::from_int_rows(rows, k);
      if (is_min_non_tu(b)) expected.insert(permutation_canonical(b));
    }
    std::set<Matrix, bool (*)(const Matrix&, const Matrix&)> found(
        [](const Matrix& x, const Matrix& y) { return x.entries() < y.entries(); });
    for (const auto& b : enumerate_min_non_tu_cores(k)) found.insert(permutation_canonical(b));
    EXPECT_EQ(found.size(), expected.size()) << k;
    for (const auto& b : expected) EXPECT_EQ(found.count(b), 1u) << to_string(b);
  }
}

TEST(Hunt, SizeFourMatchesRawEnumeration) {
  const SearchReport r = enumerate_thick_interlaces(4);
  ASSERT_EQ(r.representatives.size(), 1u);
  EXPECT_EQ(r.representatives[0], canonical_form(fixtures::conjecture4()));
  EXPECT_EQ(raw_thick_interlaces(4), r.representatives);
  EXPECT_TRUE(raw_thick_interlaces(2).empty());
  EXPECT_TRUE(raw_thick_interlaces(3).empty());
}

TEST(Hunt, SizeSix) {
  const SearchReport r = enumerate_thick_interlaces(6);
  ASSERT_EQ(r.representatives.size(), 1u);
  EXPECT_EQ(r.representatives[0], canonical_form(fixtures::conjecture6()));
  const auto type = brick_type(r.representatives[0].matrix);
  ASSERT_TRUE(type.has_value());
  EXPECT_EQ(type->tag, BrickTag::ThickInterlace);
  EXPECT_EQ(type->equideterminant, 64);
  EXPECT_TRUE(is_totally_equimodular(r.representatives[0].matrix));
}

TEST(Hunt, RejectsOddAndLargeSizes) {
  EXPECT_THROW(enumerate_thick_interlaces(5), DomainError);
  EXPECT_THROW(enumerate_thick_interlaces(10), UnsupportedError);
  EXPECT_THROW(raw_thick_interlaces(6), UnsupportedError);
}

TEST(Hunt, DeterministicAndParallel) {
  HuntOptions serial;
  HuntOptions pooled;
  pooled.jobs = 3;
  const SearchReport a = enumerate_thick_interlaces(6, serial);
  const SearchReport b = enumerate_thick_interlaces(6, pooled);
  EXPECT_EQ(a.representatives, b.representatives);
  EXPECT_EQ(a.candidates_examined, b.candidates_examined);
  EXPECT_EQ(a.core_classes_examined, b.core_classes_examined);
  EXPECT_EQ(a.shards, b.shards);
}

TEST(Hunt, CheckpointResume) {
  const std::string path = temp_path("hunt6.ndjson");
  std::remove(path.c_str());
  HuntOptions options;
  options.checkpoint = path;
  const SearchReport first = enumerate_thick_interlaces(6, options);
  EXPECT_EQ(first.shards_resumed, 0u);

  const SearchReport again = enumerate_thick_interlaces(6, options);
  EXPECT_EQ(again.shards_resumed, again.shards);
  EXPECT_EQ(again.representatives, first.representatives);
  EXPECT_EQ(again.candidates_examined, first.candidates_examined);
  EXPECT_EQ(again.core_classes_examined, first.core_classes_examined);

  // Keep half the records and tear the last one.
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  ASSERT_GE(lines.size(), 2u);
  {
    std::ofstream out(path, std::ios::trunc);
    for (Index i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
    out << lines.back().substr(0, lines.back().size() / 2);
  }
  const SearchReport partial = enumerate_thick_interlaces(6, options);
  EXPECT_EQ(partial.shards_resumed, lines.size() / 2);
  EXPECT_EQ(partial.representatives, first.representatives);
  EXPECT_EQ(partial.candidates_examined, first.candidates_examined);

  options.checkpoint = path;
  EXPECT_THROW(enumerate_thick_interlaces(4, options), ParseError);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace teq
