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
#include "teq/lp.hpp"

#include "teq/errors.hpp"

namespace teq {

LinearSystem::LinearSystem(Index variables) : nonnegative_(variables, false) {}

void LinearSystem::add(Vector coeffs, Relation relation, Rat rhs) {
  if (coeffs.size() != variables()) throw DimensionError("row length mismatch");
  rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearSystem::require_nonnegative(Index var) {
  if (var >= variables()) throw DimensionError("variable index out of range");
  nonnegative_[var] = true;
}

namespace {

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }
bool is_equality(Relation r) { return r == Relation::Equal; }

// Row written as a.x <= b, a.x < b or a.x = b.
LinearRow normalized(const LinearRow& row) {
  if (row.relation != Relation::GreaterEqual && row.relation != Relation::Greater) return row;
  LinearRow out = row;
  for (auto& c : out.coeffs) c = -c;
  out.rhs = -out.rhs;
  out.relation = row.relation == Relation::Greater ? Relation::Less : Relation::LessEqual;
  return out;
}

// Dense tableau for min c.z subject to M z = r, z >= 0, r >= 0.
class Tableau {
 public:
  Tableau(Index rows, Index cols) : m_(rows), n_(cols), a_(rows * (cols + 1)), basis_(rows) {}

  Rat& at(Index i, Index j) { return a_[i * (n_ + 1) + j]; }
  Rat& rhs(Index i) { return a_[i * (n_ + 1) + n_]; }
  Index rows() const { return m_; }
  Index cols() const { return n_; }
  std::vector<Index>& basis() { return basis_; }

  void pivot(Index r, Index c) {
    const Rat inv = 1 / at(r, c);
    for (Index j = 0; j <= n_; ++j) {
      if (a_[r * (n_ + 1) + j] != 0) a_[r * (n_ + 1) + j] *= inv;
    }
    for (Index i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Rat f = at(i, c);
      if (f == 0) continue;
      for (Index j = 0; j <= n_; ++j) {
        const Rat& p = a_[r * (n_ + 1) + j];
        if (p != 0) a_[i * (n_ + 1) + j] -= f * p;
      }
    }
    basis_[r] = c;
  }

  // Minimizes cost over the columns flagged in allowed. Returns false when
  // unbounded.
  bool optimize(const std::vector<Rat>& cost, const std::vector<bool>& allowed) {
    while (true) {
      // Reduced costs c_j - c_B B^-1 A_j; the tableau already holds B^-1 A.
      Index entering = n_;
      for (Index j = 0; j < n_ && entering == n_; ++j) {
        if (!allowed[j]) continue;
        Rat reduced = cost[j];
        for (Index i = 0; i < m_; ++i) {
          const Rat& e = at(i, j);
          if (e != 0 && cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * e;
        }
        if (reduced < 0) entering = j;
      }
      if (entering == n_) return true;
      Index leaving = m_;
      Rat best;
      for (Index i = 0; i < m_; ++i) {
        const Rat& e = at(i, entering);
        if (e <= 0) continue;
        const Rat ratio = rhs(i) / e;
        if (leaving == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

 private:
  Index m_;
  Index n_;
  std::vector<Rat> a_;
  std::vector<Index> basis_;
};

struct Layout {
  std::vector<Index> plus;   // column of x_j (or x_j+)
  std::vector<Index> minus;  // column of x_j-, or npos
  Index t = 0;               // strict slack column, or npos
  Index columns = 0;
};

constexpr Index kNone = static_cast<Index>(-1);

// Phase I then, with strict rows, phase II maximizing t. Returns the point
// and slack when the non-strict relaxation is feasible.
std::optional<std::pair<Vector, Rat>> run_simplex(const LinearSystem& system) {
  const Index vars = system.variables();
  std::vector<LinearRow> rows;
  bool any_strict = false;
  for (const auto& r : system.rows()) {
    rows.push_back(normalized(r));
    any_strict = any_strict || is_strict(r.relation);
  }
  Layout layout;
  for (Index j = 0; j < vars; ++j) {
    layout.plus.push_back(layout.columns++);
    layout.minus.push_back(system.nonnegative(j) ? kNone : layout.columns++);
  }
  layout.t = any_strict ? layout.columns++ : kNone;
  const Index m = rows.size() + (any_strict ? 1 : 0);
  std::vector<Index> slack_col(m, kNone);
  for (Index i = 0; i < rows.size(); ++i) {
    if (!is_equality(rows[i].relation)) slack_col[i] = layout.columns++;
  }
  if (any_strict) slack_col[rows.size()] = layout.columns++;
  const Index structural = layout.columns;
  const Index total = structural + m;

  Tableau tab(m, total);
  for (Index i = 0; i < m; ++i) {
    const bool cap_row = i == rows.size();
    Rat b = cap_row ? Rat(1) : rows[i].rhs;
    const int sign = b < 0 ? -1 : 1;
    if (cap_row) {
      tab.at(i, layout.t) = 1;
    } else {
      for (Index j = 0; j < vars; ++j) {
        const Rat& c = rows[i].coeffs[j];
        if (c == 0) continue;
        tab.at(i, layout.plus[j]) = sign * c;
        if (layout.minus[j] != kNone) tab.at(i, layout.minus[j]) = -sign * c;
      }
      if (is_strict(rows[i].relation)) tab.at(i, layout.t) = sign;
    }
    if (slack_col[i] != kNone) tab.at(i, slack_col[i]) = sign;
    tab.at(i, structural + i) = 1;
    tab.rhs(i) = sign * b;
    tab.basis()[i] = structural + i;
  }

  std::vector<Rat> phase1(total, Rat(0));
  for (Index i = 0; i < m; ++i) phase1[structural + i] = 1;
  std::vector<bool> all(total, true);
  tab.optimize(phase1, all);
  for (Index i = 0; i < m; ++i) {
    if (tab.basis()[i] >= structural && tab.rhs(i) != 0) return std::nullopt;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (Index i = 0; i < m; ++i) {
    if (tab.basis()[i] < structural) continue;
    for (Index j = 0; j < structural; ++j) {
      if (tab.at(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }
  std::vector<bool> real(total, false);
  for (Index j = 0; j < structural; ++j) real[j] = true;
  if (any_strict) {
    std::vector<Rat> cost(total, Rat(0));
    cost[layout.t] = -1;
    tab.optimize(cost, real);
  }
  std::vector<Rat> value(total, Rat(0));
  for (Index i = 0; i < m; ++i) value[tab.basis()[i]] = tab.rhs(i);
  Vector x(vars);
  for (Index j = 0; j < vars; ++j) {
    x[j] = value[layout.plus[j]];
    if (layout.minus[j] != kNone) x[j] -= value[layout.minus[j]];
  }
  return std::make_pair(std::move(x), any_strict ? value[layout.t] : Rat(0));
}

// Finds y through Motzkin's alternative system.
std::optional<Vector> find_certificate(const LinearSystem& system) {
  const auto& rows = system.rows();
  const Index k = rows.size();
  LinearSystem alt(k);
  std::vector<LinearRow> norm;
  for (const auto& r : rows) norm.push_back(normalized(r));
  for (Index i = 0; i < k; ++i) {
    if (!is_equality(norm[i].relation)) alt.require_nonnegative(i);
  }
  for (Index j = 0; j < system.variables(); ++j) {
    Vector c(k);
    for (Index i = 0; i < k; ++i) c[i] = norm[i].coeffs[j];
    alt.add(std::move(c), system.nonnegative(j) ? Relation::GreaterEqual : Relation::Equal, 0);
  }
  Vector b(k);
  Vector gap(k);
  for (Index i = 0; i < k; ++i) {
    b[i] = norm[i].rhs;
    gap[i] = -norm[i].rhs + (is_strict(norm[i].relation) ? 1 : 0);
  }
  alt.add(std::move(b), Relation::LessEqual, 0);
  alt.add(std::move(gap), Relation::GreaterEqual, 1);
  const auto sol = run_simplex(alt);
  if (!sol) return std::nullopt;
  return sol->first;
}

Rat dot(const Vector& a, const Vector& x) {
  Rat s = 0;
  for (Index j = 0; j < a.size(); ++j) {
    if (a[j] != 0) s += a[j] * x[j];
  }
  return s;
}

}  // namespace

FeasibilityResult solve(const LinearSystem& system) {
  FeasibilityResult result;
  const auto sol = run_simplex(system);
  if (sol) {
    const bool strict_ok = sol->second > 0;
    bool any_strict = false;
    for (const auto& r : system.rows()) any_strict = any_strict || is_strict(r.relation);
    result.slack = sol->second;
    if (!any_strict || strict_ok) {
      result.feasible = true;
      result.point = sol->first;
      if (!satisfies(system, result.point)) {
        throw ConstructionError("simplex returned a point that fails verification");
      }
      return result;
    }
  }
  result.certificate = find_certificate(system);
  if (!result.certificate || !is_infeasibility_certificate(system, *result.certificate)) {
    throw ConstructionError("infeasible system without a valid certificate");
  }
  return result;
}

bool satisfies(const LinearSystem& system, const Vector& x) {
  if (x.size() != system.variables()) return false;
  for (Index j = 0; j < x.size(); ++j) {
    if (system.nonnegative(j) && x[j] < 0) return false;
  }
  for (const auto& r : system.rows()) {
    const Rat v = dot(r.coeffs, x);
    switch (r.relation) {
      case Relation::LessEqual:
        if (!(v <= r.rhs)) return false;
        break;
      case Relation::Less:
        if (!(v < r.rhs)) return false;
        break;
      case Relation::Equal:
        if (v != r.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (!(v >= r.rhs)) return false;
        break;
      case Relation::Greater:
        if (!(v > r.rhs)) return false;
        break;
    }
  }
  return true;
}

bool is_infeasibility_certificate(const LinearSystem& system, const Vector& y) {
  const auto& rows = system.rows();
  if (y.size() != rows.size()) return false;
  Rat by = 0;
  bool strict_weight = false;
  Vector combo(system.variables());
  for (Index i = 0; i < rows.size(); ++i) {
    const LinearRow r = normalized(rows[i]);
    if (!is_equality(r.relation) && y[i] < 0) return false;
    if (y[i] == 0) continue;
    for (Index j = 0; j < combo.size(); ++j) combo[j] += y[i] * r.coeffs[j];
    by += y[i] * r.rhs;
    if (is_strict(r.relation) && y[i] > 0) strict_weight = true;
  }
  for (Index j = 0; j < combo.size(); ++j) {
    if (system.nonnegative(j) ? combo[j] < 0 : combo[j] != 0) return false;
  }
  return by < 0 || (by == 0 && strict_weight);
}

}  // namespace teq
