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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace attain {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline bool is_zero(const Vec& a) {
  for (double v : a)
    if (v != 0.0) return false;
  return true;
}

// Probability vector over a finite action set.  Weights must be nonnegative
// and sum to 1; small constructor noise (|sum-1| <= 1e-9, weights >= -1e-9,
// as produced by LP output) is renormalized, anything larger is an error.
class MixedAction {
 public:
  static constexpr double kRepairTol = 1e-9;
  static constexpr double kSumTol = 1e-12;

  MixedAction() = default;

  explicit MixedAction(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("MixedAction: empty support");
    double sum = 0.0;
    for (double& x : w_) {
      if (!std::isfinite(x)) throw std::invalid_argument("MixedAction: non-finite weight");
      if (x < 0.0) {
        if (x < -kRepairTol) throw std::invalid_argument("MixedAction: negative weight");
        x = 0.0;
      }
      sum += x;
    }
    if (std::fabs(sum - 1.0) > kRepairTol)
      throw std::invalid_argument("MixedAction: weights sum to " + std::to_string(sum));
    if (sum != 1.0)
      for (double& x : w_) x /= sum;
  }

  static MixedAction pure(int n, int index) {
    if (index < 0 || index >= n) throw std::invalid_argument("MixedAction::pure: index out of range");
    std::vector<double> w(n, 0.0);
    w[index] = 1.0;
    return MixedAction(std::move(w));
  }

  static MixedAction uniform(int n) {
    return MixedAction(std::vector<double>(n, 1.0 / n));
  }

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }

  bool operator==(const MixedAction& o) const { return w_ == o.w_; }

 private:
  std::vector<double> w_;
};

// A direction in payoff space, with the normalization convention it was
// produced under recorded alongside.
struct Direction {
  enum class Norm { unnormalized, euclidean_unit };

  Vec lambda;
  Norm norm = Norm::unnormalized;

  Direction() = default;
  Direction(Vec l, Norm n = Norm::unnormalized) : lambda(std::move(l)), norm(n) {}

  Direction normalized() const {
    double n = norm2(lambda);
    if (n == 0.0) throw std::invalid_argument("Direction: cannot normalize zero vector");
    Vec out(lambda);
    for (double& v : out) v /= n;
    return Direction(std::move(out), Norm::euclidean_unit);
  }
};

// Scalar-payoff zero-sum matrix game, row player maximizes.
struct MatrixGame {
  int n1 = 0, n2 = 0;
  std::vector<double> entries;  // row-major n1*n2

  MatrixGame() = default;
  MatrixGame(int rows, int cols)
      : n1(rows), n2(cols), entries(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("MatrixGame: empty");
  }
  MatrixGame(int rows, int cols, std::vector<double> e)
      : n1(rows), n2(cols), entries(std::move(e)) {
    if (rows <= 0 || cols <= 0 || entries.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("MatrixGame: bad shape");
  }

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n2 + j]; }
  double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n2 + j]; }

  double max_abs_entry() const {
    double m = 0.0;
    for (double e : entries) m = std::max(m, std::fabs(e));
    return m;
  }

  std::string to_debug_string() const {
    std::ostringstream out;
    out << std::setprecision(17);
    for (int i = 0; i < n1; ++i) {
      out << (i == 0 ? "[[" : " [");
      for (int j = 0; j < n2; ++j) out << (j ? ", " : "") << at(i, j);
      out << (i + 1 == n1 ? "]]" : "],\n");
    }
    return out.str();
  }
};

// Two-player game with m-dimensional vector payoffs (a common payoff vector,
// not one payoff per player).  Payoffs are stored row-major over Player 1's
// actions, i.e. entry (i, j) is payoffs[i*n2 + j].
struct Game {
  int m = 0, n1 = 0, n2 = 0;
  std::vector<Vec> payoffs;
  std::vector<std::string> labels1, labels2;  // optional, may be empty

  Game() = default;
  Game(int dim, int rows, int cols)
      : m(dim), n1(rows), n2(cols),
        payoffs(static_cast<std::size_t>(rows) * cols, Vec(dim, 0.0)) {
    if (dim <= 0 || rows <= 0 || cols <= 0) throw std::invalid_argument("Game: empty");
  }

  const Vec& at(int i, int j) const { return payoffs[static_cast<std::size_t>(i) * n2 + j]; }
  Vec& at(int i, int j) { return payoffs[static_cast<std::size_t>(i) * n2 + j]; }

  void validate() const {
    if (payoffs.size() != static_cast<std::size_t>(n1) * n2)
      throw std::invalid_argument("Game: payoff table size mismatch");
    for (const Vec& v : payoffs) {
      if (static_cast<int>(v.size()) != m)
        throw std::invalid_argument("Game: payoff dimension mismatch");
      for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("Game: non-finite payoff");
    }
    if (!labels1.empty() && static_cast<int>(labels1.size()) != n1)
      throw std::invalid_argument("Game: labels1 size mismatch");
    if (!labels2.empty() && static_cast<int>(labels2.size()) != n2)
      throw std::invalid_argument("Game: labels2 size mismatch");
  }

  bool operator==(const Game&) const = default;
};

// Expected payoff vector under a pair of mixed actions (bilinear extension).
inline Vec mixed_payoff(const Game& g, const MixedAction& p, const MixedAction& q) {
  if (p.size() != g.n1 || q.size() != g.n2)
    throw std::invalid_argument("mixed_payoff: action size mismatch");
  Vec out(g.m, 0.0);
  for (int i = 0; i < g.n1; ++i) {
    if (p[i] == 0.0) continue;
    for (int j = 0; j < g.n2; ++j) {
      double w = p[i] * q[j];
      if (w == 0.0) continue;
      const Vec& u = g.at(i, j);
      for (int d = 0; d < g.m; ++d) out[d] += w * u[d];
    }
  }
  return out;
}

// Scalar zero-sum game with entries <lambda, u(i,j)>.
inline MatrixGame scalarize(const Game& g, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != g.m)
    throw std::invalid_argument("scalarize: direction dimension mismatch");
  MatrixGame mg(g.n1, g.n2);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) mg.at(i, j) = dot(lambda, g.at(i, j));
  return mg;
}

// Game with every payoff vector shifted by -y.
inline Game translate(const Game& g, const Vec& y) {
  if (static_cast<int>(y.size()) != g.m)
    throw std::invalid_argument("translate: shift dimension mismatch");
  Game out = g;
  for (Vec& u : out.payoffs)
    for (int d = 0; d < g.m; ++d) u[d] -= y[d];
  return out;
}

// Max Euclidean norm over the pure payoff vectors; the Lipschitz constant of
// lambda -> value(<lambda, G>) on the unit sphere, and the payoff-rate bound
// used throughout the steering estimates.
inline double payoff_bound(const Game& g) {
  double b = 0.0;
  for (const Vec& u : g.payoffs) b = std::max(b, norm2(u));
  return b;
}

}  // namespace attain
