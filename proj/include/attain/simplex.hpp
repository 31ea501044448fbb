// Copyright 2026 The Attain Authors. All rights reserved.
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

#pragma once

// Dense tableau simplex for the small LPs this library needs (matrix-game
// values, feasibility subproblems).  Bland's rule everywhere: deterministic
// bases, no cycling.  Not meant for large or ill-conditioned programs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "attain/game.hpp"

namespace attain {
namespace lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  double objective = 0.0;
  Vec x;      // decision variables
  Vec duals;  // one multiplier per constraint row
};

constexpr double kPivotTol = 1e-9;

namespace detail {

class Tableau {
 public:
  // ncols counts every variable: decision, then slack, then artificial.
  Tableau(int rows, int ncols) : m_(rows), n_(ncols), a_(rows * ncols, 0.0), rhs_(rows, 0.0),
                                 basis_(rows, -1) {}

  double& at(int r, int j) { return a_[static_cast<std::size_t>(r) * n_ + j]; }
  double at(int r, int j) const { return a_[static_cast<std::size_t>(r) * n_ + j]; }
  double& rhs(int r) { return rhs_[r]; }
  double rhs(int r) const { return rhs_[r]; }
  void set_basis(int r, int var) { basis_[r] = var; }
  int basis(int r) const { return basis_[r]; }
  int rows() const { return m_; }
  int cols() const { return n_; }

  void pivot(int r, int s) {
    double piv = at(r, s);
    for (int j = 0; j < n_; ++j) at(r, j) /= piv;
    rhs_[r] /= piv;
    at(r, s) = 1.0;  // kill roundoff on the pivot itself
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = at(i, s);
      if (f == 0.0) continue;
      for (int j = 0; j < n_; ++j) at(i, j) -= f * at(r, j);
      rhs_[i] -= f * rhs_[r];
      at(i, s) = 0.0;
      if (rhs_[i] < 0.0 && rhs_[i] > -kPivotTol) rhs_[i] = 0.0;
    }
    basis_[r] = s;
  }

  // Maximize sum_j c[j] * x_j over the current basis, allowing only columns
  // with allowed[j] to enter.  Returns false on unboundedness.
  bool optimize(const Vec& c, const std::vector<char>& allowed) {
    while (true) {
      // Reduced costs from scratch each iteration: r_j = c_j - c_B . T_j.
      int enter = -1;
      for (int j = 0; j < n_ && enter < 0; ++j) {
        if (!allowed[j]) continue;
        double rj = c[j];
        for (int r = 0; r < m_; ++r) {
          double cb = c[basis_[r]];
          if (cb != 0.0) rj -= cb * at(r, j);
        }
        if (rj > kPivotTol) enter = j;  // Bland: first improving column
      }
      if (enter < 0) return true;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m_; ++r)
        if (at(r, enter) > kPivotTol) best = std::min(best, rhs_[r] / at(r, enter));
      if (best == std::numeric_limits<double>::infinity()) return false;
      int leave = -1;  // Bland: among min-ratio rows, smallest basic index
      for (int r = 0; r < m_; ++r) {
        if (at(r, enter) <= kPivotTol) continue;
        if (rhs_[r] / at(r, enter) > best + 1e-12) continue;
        if (leave < 0 || basis_[r] < basis_[leave]) leave = r;
      }
      pivot(leave, enter);
    }
  }

  double objective(const Vec& c) const {
    double v = 0.0;
    for (int r = 0; r < m_; ++r) v += c[basis_[r]] * rhs_[r];
    return v;
  }

  // Multiplier vector y = c_B . B^{-1}, read through a column that was the
  // identity in the starting tableau (slack or artificial block at `offset`).
  Vec row_multipliers(const Vec& c, int offset) const {
    Vec y(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      double yi = 0.0;
      for (int r = 0; r < m_; ++r) {
        double cb = c[basis_[r]];
        if (cb != 0.0) yi += cb * at(r, offset + i);
      }
      y[i] = yi;
    }
    return y;
  }

  Vec extract(int nvars) const {
    Vec x(nvars, 0.0);
    for (int r = 0; r < m_; ++r)
      if (basis_[r] < nvars) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  int m_, n_;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
};

inline void check_shape(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
  if (A.size() != b.size()) throw std::invalid_argument("lp: row count mismatch");
  for (const Vec& row : A)
    if (row.size() != c.size()) throw std::invalid_argument("lp: column count mismatch");
}

}  // namespace detail

// max c.x  s.t.  A x <= b, x >= 0, with every b_i >= 0 (slack start).
inline Result max_inequality(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
  detail::check_shape(A, b, c);
  int m = static_cast<int>(A.size()), n = static_cast<int>(c.size());
  for (double bi : b)
    if (bi < 0.0) throw std::invalid_argument("lp::max_inequality: negative rhs");
  detail::Tableau t(m, n + m);
  Vec cost(n + m, 0.0);
  std::vector<char> allowed(n + m, 1);
  for (int j = 0; j < n; ++j) cost[j] = c[j];
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.at(r, j) = A[r][j];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = b[r];
    t.set_basis(r, n + r);
  }
  Result out;
  if (!t.optimize(cost, allowed)) {
    out.status = Status::unbounded;
    return out;
  }
  out.status = Status::optimal;
  out.objective = t.objective(cost);
  out.x = t.extract(n);
  out.duals = t.row_multipliers(cost, n);
  return out;
}

// max c.x  s.t.  A x == b, x >= 0 (two-phase; rows with b_i < 0 are negated).
inline Result max_equality(const std::vector<Vec>& A, const Vec& b, const Vec& c) {
  detail::check_shape(A, b, c);
  int m = static_cast<int>(A.size()), n = static_cast<int>(c.size());
  detail::Tableau t(m, n + m);
  for (int r = 0; r < m; ++r) {
    double sign = (b[r] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(r, j) = sign * A[r][j];
    t.at(r, n + r) = 1.0;
    t.rhs(r) = sign * b[r];
    t.set_basis(r, n + r);
  }
  std::vector<char> allowed(n + m, 1);
  Vec phase1(n + m, 0.0);
  for (int r = 0; r < m; ++r) phase1[n + r] = -1.0;
  Result out;
  if (!t.optimize(phase1, allowed)) {
    out.status = Status::unbounded;  // cannot happen: phase-1 objective <= 0
    return out;
  }
  if (t.objective(phase1) < -1e-7) {
    out.status = Status::infeasible;
    return out;
  }
  // Drive any artificial still basic (at value 0) out of the basis when a
  // real column is available; a fully zero row is redundant and stays put.
  for (int r = 0; r < m; ++r) {
    if (t.basis(r) < n) continue;
    for (int j = 0; j < n; ++j)
      if (std::fabs(t.at(r, j)) > kPivotTol) {
        t.pivot(r, j);
        break;
      }
  }
  for (int r = 0; r < m; ++r) allowed[n + r] = 0;
  Vec cost(n + m, 0.0);
  for (int j = 0; j < n; ++j) cost[j] = c[j];
  if (!t.optimize(cost, allowed)) {
    out.status = Status::unbounded;
    return out;
  }
  out.status = Status::optimal;
  out.objective = t.objective(cost);
  out.x = t.extract(n);
  out.duals = t.row_multipliers(cost, n);
  return out;
}

}  // namespace lp
}  // namespace attain
