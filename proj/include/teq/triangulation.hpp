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
#ifndef TEQ_TRIANGULATION_HPP_
#define TEQ_TRIANGULATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "teq/hilbert.hpp"
#include "teq/matrix.hpp"

namespace teq {

// Cells are sorted index sets into `points`. A lifting, when present,
// assigns one height per point; the convention is concave: a cell's affine
// extension lies strictly above the height of every point outside it.
struct Triangulation {
  std::vector<Vector> points;
  std::vector<IndexList> cells;
  std::optional<Vector> lifting;
};

// Spanning subgraph of the looped complete graph on a convex n-gon with n
// pairwise intersecting edges. Loops are pairs (v, v).
struct StellarCycle {
  Index n = 0;
  IndexList odd_set;
  std::vector<std::pair<Index, Index>> edges;
};

// One cycle per odd vertex subset, in order of (size, lex) of that subset.
std::vector<StellarCycle> enumerate_stellar_cycles(Index n);

// Incidence matrix with rows e_u + e_v (2 e_u for a loop).
Matrix stellar_incidence(const StellarCycle& cycle);

Triangulation stellar_lace_triangulation(const Matrix& lace);
Triangulation thin_triangulation(const Matrix& rows);
Triangulation thick_case_a_triangulation(const Matrix& rows);

struct CaseBOptions {
  std::size_t max_orders = 2000;
  std::uint64_t seed = 1;
};

// Successive stellar subdivisions of the cone at the nontrivial Hilbert
// elements. Insertion orders are tried deterministically until all cells
// are unimodular. Throws ConstructionError when the cap is reached.
Triangulation thick_case_b_triangulation(const Matrix& rows, const CaseBOptions& options = {});

// Minkowski sums of all cell pairs. Throws RankError when the union of
// the two cones is not a direct sum.
Triangulation join(const Triangulation& first, const Triangulation& second);

struct TriangulationReport {
  bool hilbert = false;
  bool unimodular = false;
  bool covering = false;
  bool disjoint = false;
  bool regular = false;
  // Sum over cells of the normalized cross-section volume; 1 for a cover.
  Rat normalized_volume;
  // Sum of |det| (gcddet when not full dimensional) over cells.
  Integer raw_volume;
  std::vector<std::string> failures;
  // Set when the verifier had to search for a lifting itself.
  std::optional<Vector> found_lifting;

  bool ok() const { return hilbert && unimodular && covering && disjoint && regular; }
};

struct VerifyOptions {
  unsigned jobs = 1;
};

TriangulationReport verify_triangulation(const TeCone& cone, const Triangulation& t,
                                         const VerifyOptions& options = {});

// Decomposes and triangulates each brick, joins the results and verifies.
// Thick bricks larger than six rows are refused with UnsupportedError.
Triangulation triangulate_te_cone(const TeCone& cone, const VerifyOptions& options = {});

// x as a nonnegative integer combination of the points of one cell.
// Throws MembershipError when x is not an integer point of the cone.
std::vector<std::pair<Vector, Integer>> caratheodory_decompose(const TeCone& cone,
                                                               const Triangulation& t,
                                                               const Vector& x);

}  // namespace teq

#endif  // TEQ_TRIANGULATION_HPP_
