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
#ifndef TEQ_HILBERT_HPP_
#define TEQ_HILBERT_HPP_

#include <string>
#include <vector>

#include "teq/classify.hpp"
#include "teq/matrix.hpp"

namespace teq {

// Simplicial cone generated by the rows of an integer matrix with
// independent, primitive rows.
class TeCone {
 public:
  // Throws DomainError on non-integer or non-primitive rows and RankError
  // on dependent rows.
  explicit TeCone(Matrix generators);

  const Matrix& generators() const { return generators_; }
  Index dimension() const { return generators_.rows(); }
  Index ambient_dimension() const { return generators_.cols(); }

  // Coefficients of x in the generators. Throws MembershipError when x is
  // outside the linear span.
  Vector coordinates(const Vector& x) const;
  bool contains(const Vector& x) const;

 private:
  Matrix generators_;
  IndexList basis_cols_;   // columns of an invertible maximal submatrix
  Matrix basis_inverse_;
};

enum class Origin {
  Generator,
  LaceHalfSum,
  PairHalfSum,
  QuarterSum,
  SkewedQuarterSum,
  Oracle
};

std::string to_string(Origin origin);

struct HilbertBasis {
  std::vector<Vector> elements;
  std::vector<Origin> origins;

  void add(Vector v, Origin o) {
    elements.push_back(std::move(v));
    origins.push_back(o);
  }
  // Elements sorted lexicographically, tags dropped.
  std::vector<Vector> sorted() const;
};

struct ZonotopePointSet {
  std::vector<Vector> points;
  std::vector<Vector> lambda;  // coefficients in [0, 1)
  // Grid denominator per coefficient.
  std::vector<long> steps;
};

// Integer points of the half-open zonotope sum lambda_i a_i, 0 <= lambda_i < 1.
ZonotopePointSet zonotope_points(const TeCone& cone);

HilbertBasis hilbert_oracle(const TeCone& cone);

// Whether a thick interlace falls under the quarter-sum case: n = 2p mod 4
// where p is the shared parity of the number of +1 entries per support
// column. Throws ClassificationError when the columns disagree.
bool thick_case_a(const Matrix& rows);

// Closed-form basis of a single brick; rows must classify as `type`.
HilbertBasis hilbert_basis_brick(const Matrix& rows, BrickTag type);

// Union of the per-brick bases of the decomposition. Throws
// ClassificationError when decomposition fails or the bricks are not
// lattice orthogonal.
HilbertBasis hilbert_basis_te_cone(const TeCone& cone);

// Throws MembershipError when x is not an integer point of the cone.
bool is_hilbert_element(const TeCone& cone, const Vector& x);

}  // namespace teq

#endif  // TEQ_HILBERT_HPP_
