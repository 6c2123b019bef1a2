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
#ifndef TEQ_DECOMPOSE_HPP_
#define TEQ_DECOMPOSE_HPP_

#include <optional>
#include <vector>

#include "teq/matrix.hpp"

namespace teq {

// Inclusion-minimal row subsets that are not totally unimodular, by size
// then lexicographic order. Rank deficiency is tolerated here.
std::vector<IndexList> minimal_non_tu_subsets(const Matrix& a);

// Te-laces of a full-row-rank 0/+-1 te-set: its minimal non-TU subsets.
std::vector<IndexList> find_te_laces(const Matrix& a);

// A partition of the rows of `source` into mutually-tu te-bricks. Size-two
// laces are reported as thin interlaces of size two.
struct Decomposition {
  Matrix source;
  IndexList tu_set;
  std::vector<IndexList> laces;  // size >= 3
  std::vector<IndexList> thin;
  std::vector<IndexList> thick;
  // The minimal non-TU subsets that certify the mutually-tu property.
  std::vector<IndexList> minimal_non_tu;
};

struct DecompositionResult {
  std::optional<Decomposition> decomposition;
  // Set when the input is not a te-set: first non-equimodular row subset.
  std::optional<IndexList> not_te_witness;
  // Set when the bricks fail to be mutually-tu: the offending row subset.
  std::optional<IndexList> not_mutually_tu_witness;

  bool ok() const { return decomposition.has_value(); }
};

// Throws RankError on dependent rows and DomainError on entries outside
// {0, +-1}.
DecompositionResult decompose_te_set(const Matrix& a);

struct MutuallyTuVerdict {
  bool holds = true;
  std::optional<IndexList> witness;
};

MutuallyTuVerdict verify_mutually_tu(const Decomposition& d);

// 2^(#laces + sum(|S_i| - 1) + sum |T_j|).
Integer eqdet_from_decomposition(const Decomposition& d);

}  // namespace teq

#endif  // TEQ_DECOMPOSE_HPP_
