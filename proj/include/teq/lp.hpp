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
#ifndef TEQ_LP_HPP_
#define TEQ_LP_HPP_

#include <optional>
#include <vector>

#include "teq/matrix.hpp"

namespace teq {

enum class Relation { LessEqual, Less, Equal, GreaterEqual, Greater };

struct LinearRow {
  Vector coeffs;
  Relation relation;
  Rat rhs;
};

// Rows over free variables; individual variables may be declared
// nonnegative.
class LinearSystem {
 public:
  explicit LinearSystem(Index variables);

  Index variables() const { return nonnegative_.size(); }
  const std::vector<LinearRow>& rows() const { return rows_; }

  // Throws DimensionError on a length mismatch.
  void add(Vector coeffs, Relation relation, Rat rhs);
  void require_nonnegative(Index var);
  bool nonnegative(Index var) const { return nonnegative_[var]; }

 private:
  std::vector<LinearRow> rows_;
  std::vector<bool> nonnegative_;
};

struct FeasibilityResult {
  bool feasible = false;
  Vector point;
  // Largest common slack of the strict rows, capped at 1; 0 without them.
  Rat slack;
  // When infeasible: one multiplier per row for the rows written as
  // a.x <= b (>= rows negated), see is_infeasibility_certificate.
  std::optional<Vector> certificate;
};

// Exact two-phase simplex with Bland's rule. Strict rows share one slack t
// in [0, 1] that is maximized; they hold iff the optimum is positive.
FeasibilityResult solve(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const Vector& x);

// y certifies infeasibility when y is nonnegative on inequality rows,
// sum y_r a_r vanishes on free variables and is nonnegative on
// nonnegative ones, b.y <= 0, and b.y < 0 or some strict row has y_r > 0.
bool is_infeasibility_certificate(const LinearSystem& system, const Vector& y);

}  // namespace teq

#endif  // TEQ_LP_HPP_
