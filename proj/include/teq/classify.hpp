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
#ifndef TEQ_CLASSIFY_HPP_
#define TEQ_CLASSIFY_HPP_

#include <optional>
#include <string>

#include "teq/matrix.hpp"

namespace teq {

// Full row rank and every nonzero maximal minor has the same absolute value.
// The 0-row matrix counts as equimodular.
bool is_equimodular(const Matrix& rows);
bool is_equimodular(const RowSet& set);

// The common |maximal minor|. Throws RankError on dependent rows and
// ClassificationError when the rows are not equimodular.
Rat eqdet(const Matrix& rows);
Rat eqdet(const RowSet& set);

bool is_unimodular_set(const Matrix& rows);

// Square submatrix given by its row and column index lists.
struct SubmatrixWitness {
  IndexList rows;
  IndexList cols;
};

struct TuVerdict {
  bool holds = true;
  // Smallest violating submatrix, ties broken by lexicographic (rows, cols).
  std::optional<SubmatrixWitness> witness;
};

TuVerdict check_totally_unimodular(const Matrix& a);
bool is_totally_unimodular(const Matrix& a);

// Every square submatrix of size below max_size has det in {0, +-1}.
bool is_tu_below(const Matrix& a, Index max_size);

bool is_min_non_tu(const Matrix& a);

struct TeVerdict {
  bool holds = true;
  // First non-equimodular independent row subset, by size then lex order.
  std::optional<IndexList> witness;
};

TeVerdict check_totally_equimodular(const Matrix& a);
bool is_totally_equimodular(const Matrix& a);

// Recursive characterization: essentially 0/+-1 and every trim is TE.
bool is_totally_equimodular_by_trims(const Matrix& a);

// Whether every trim of a along the support of row `row` is equimodular.
// The row must be 0/+-1 and a must have full row rank.
bool check_trim_equimodularity(const Matrix& a, Index row);

bool is_complement_tu(const Matrix& b);
bool is_complement_min_non_tu(const Matrix& b);

enum class BrickTag { TuSet, TeLace, ThinInterlace, ThickInterlace };

std::string to_string(BrickTag tag);

struct BrickType {
  BrickTag tag = BrickTag::TuSet;
  Index size = 0;
  Integer equideterminant = 1;
};

// nullopt when the rows form no brick. Throws RankError on dependent rows.
std::optional<BrickType> brick_type(const Matrix& rows);
std::optional<BrickType> brick_type(const RowSet& set);

}  // namespace teq

#endif  // TEQ_CLASSIFY_HPP_
