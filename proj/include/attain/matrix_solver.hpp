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

#include <limits>
#include <stdexcept>
#include <vector>

#include "attain/game.hpp"
#include "attain/simplex.hpp"

namespace attain {

// Value and optimal strategies of a zero-sum matrix game, with a duality-gap
// certificate evaluated directly on the input matrix:
//   gap = max_i (M q*)_i - min_j (p*^T M)_j  >=  0,
// which bounds how far either strategy can be from optimal.
struct GameSolution {
  double value = 0.0;
  MixedAction p_star;
  MixedAction q_star;
  double gap = 0.0;
};

namespace detail {

inline double best_row_response(const MatrixGame& mg, const MixedAction& q) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < mg.n1; ++i) {
    double s = 0.0;
    for (int j = 0; j < mg.n2; ++j) s += mg.at(i, j) * q[j];
    best = std::max(best, s);
  }
  return best;
}

inline double best_col_response(const MatrixGame& mg, const MixedAction& p) {
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < mg.n2; ++j) {
    double s = 0.0;
    for (int i = 0; i < mg.n1; ++i) s += mg.at(i, j) * p[i];
    best = std::min(best, s);
  }
  return best;
}

}  // namespace detail

// Solves the game by LP after shifting all entries positive:
//   max sum(y)  s.t.  (M + shift) y <= 1, y >= 0,
// whose optimum Z gives value = 1/Z - shift, q* = y/Z, and whose row
// multipliers u (sum u = Z) give p* = u/Z.  Bland pivoting makes the
// returned pair deterministic for identical inputs.
inline GameSolution solve(const MatrixGame& mg) {
  double lo = mg.entries[0];
  for (double e : mg.entries) lo = std::min(lo, e);
  double shift = 1.0 - lo;  // all shifted entries >= 1, so Z > 0 and finite
  std::vector<Vec> A(mg.n1, Vec(mg.n2));
  for (int i = 0; i < mg.n1; ++i)
    for (int j = 0; j < mg.n2; ++j) A[i][j] = mg.at(i, j) + shift;
  Vec b(mg.n1, 1.0), c(mg.n2, 1.0);
  lp::Result r = lp::max_inequality(A, b, c);
  if (r.status != lp::Status::optimal || r.objective <= 0.0)
    throw std::runtime_error("solve: game LP failed");  // unreachable for finite input
  double z = r.objective;
  Vec q = r.x;
  for (double& v : q) v /= z;
  double usum = 0.0;
  for (double u : r.duals) usum += u;
  Vec p = r.duals;
  for (double& v : p) v /= usum;
  GameSolution out;
  out.value = 1.0 / z - shift;
  out.p_star = MixedAction(std::move(p));
  out.q_star = MixedAction(std::move(q));
  out.gap = detail::best_row_response(mg, out.q_star) - detail::best_col_response(mg, out.p_star);
  return out;
}

inline GameSolution solve(const Game& g, const Vec& lambda) { return solve(scalarize(g, lambda)); }

// Brute-force value estimate used only to cross-check the LP solver in tests:
// maximizes min_j p^T M e_j over row mixtures with weights k_i / grid_k.
// Always a lower bound on the true value; error is O(max|M| / grid_k).
inline double value_oracle(const MatrixGame& mg, int grid_k) {
  if (mg.n1 > 4 || mg.n2 > 4)
    throw std::invalid_argument("value_oracle: supports at most 4x4 games");
  if (grid_k < 100) throw std::invalid_argument("value_oracle: grid_k must be >= 100");
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> k(mg.n1, 0);
  Vec col(mg.n2);
  auto eval = [&]() {
    for (int j = 0; j < mg.n2; ++j) {
      double s = 0.0;
      for (int i = 0; i < mg.n1; ++i) s += k[i] * mg.at(i, j);
      col[j] = s / grid_k;
    }
    double worst = col[0];
    for (int j = 1; j < mg.n2; ++j) worst = std::min(worst, col[j]);
    best = std::max(best, worst);
  };
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i + 1 == mg.n1) {
      k[i] = left;
      eval();
      return;
    }
    for (int take = 0; take <= left; ++take) {
      k[i] = take;
      self(self, i + 1, left - take);
    }
  };
  rec(rec, 0, grid_k);
  return best;
}

}  // namespace attain
