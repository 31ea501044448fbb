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

// Attainability conditions for cumulative vector payoffs.
//
// The primitive question is the sign of v_lambda, the value of the scalar
// game <lambda, G>, over all unit directions lambda:
//   - v_lambda >= 0 everywhere   <=>  the zero vector is attainable;
//   - v_lambda  > 0 everywhere   <=>  every vector is attainable;
//   - a target x != 0 is attainable iff zero is attainable both in G and in
//     G - delta*x for some delta > 0 (checked over a shrinking schedule).
//
// Two decision routes:
//   - a Lipschitz-certified sweep over a sphere covering grid (any m), and
//   - an exact route for m <= 2 that enumerates every angle where v can
//     vanish (determinant roots of square sub-bases) and reads signs between
//     them.  This is what settles boundary games that sit exactly at v = 0.

#include <functional>
#include <optional>
#include <utility>

#include "attain/game.hpp"
#include "attain/matrix_solver.hpp"
#include "attain/poly.hpp"
#include "attain/sphere_grid.hpp"
#include "attain/verdict.hpp"

namespace attain {

// Sampled values within [-kDecisionMargin, 0) count as "numerically zero",
// not negative: boundary games must not be misclassified by solver noise.
constexpr double kDecisionMargin = 1e-6;

inline double value_direction(const Game& g, const Direction& d) {
  return solve(scalarize(g, d.lambda)).value;
}

// ---------------------------------------------------------------------------
// Certified sphere sweep.

// Sweeps v_lambda over a covering grid of max spacing h.  Grid evaluations
// are independent (safe to parallelize); the reduction below is a
// deterministic fold: minimum by value, ties resolved to the lowest index.
inline Verdict check_zero_attainable(const Game& g, double h, bool strict) {
  if (h <= 0.0) throw std::invalid_argument("check_zero_attainable: resolution must be positive");
  SphereGrid grid = make_sphere_grid(g.m, h);
  double lip = payoff_bound(g);
  double min_v = std::numeric_limits<double>::infinity();
  int argmin = -1;
  for (int i = 0; i < grid.size(); ++i) {
    double v = value_direction(g, Direction(grid.points[i], Direction::Norm::euclidean_unit));
    if (v < min_v) {
      min_v = v;
      argmin = i;
    }
  }
  double guard = lip * h / 2.0;  // sweep misses at most this much between grid points
  Verdict out;
  out.margin = min_v - guard;
  if (min_v < -kDecisionMargin) {
    out.status = Verdict::Status::Fails;
    out.margin = min_v;
    out.witness = {Direction(grid.points[argmin], Direction::Norm::euclidean_unit), min_v,
                   std::nullopt, std::nullopt, "sampled direction with negative value"};
    return out;
  }
  out.certificate = {h, min_v, lip, strict ? "strict sphere sweep" : "sphere sweep"};
  if (strict ? (min_v - guard > 0.0) : (min_v - guard >= 0.0)) {
    out.status = Verdict::Status::Holds;
  } else {
    out.status = Verdict::Status::Undecided;
    out.certificate->note += "; inconclusive, refine h or use the exact low-dimension route";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact route for m <= 2.

namespace detail {

inline double det_dense(std::vector<Vec> a) {
  int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

inline Vec solve_linear(std::vector<Vec> a, Vec b) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) throw std::runtime_error("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < n; ++j) s -= a[r][j] * x[j];
    x[r] = s / a[r][r];
  }
  return x;
}

// Coefficients (ascending) of det(A + tB), degree <= k, by interpolation at
// t = 0..k and a Vandermonde solve.
inline Vec pencil_coeffs(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  int k = static_cast<int>(a.size());
  std::vector<Vec> vand(k + 1, Vec(k + 1));
  Vec d(k + 1);
  for (int s = 0; s <= k; ++s) {
    std::vector<Vec> m(k, Vec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = a[i][j] + s * b[i][j];
    d[s] = det_dense(std::move(m));
    double p = 1.0;
    for (int j = 0; j <= k; ++j) {
      vand[s][j] = p;
      p *= s;
    }
  }
  return solve_linear(std::move(vand), std::move(d));
}

inline void enumerate_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline void push_angle(std::vector<double>& out, double th) {
  th = std::fmod(th, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  out.push_back(th);
}

// All angles where the value of <(cos t, sin t), G> can vanish or kink: for
// every square sub-basis, the roots of det<lambda, u> = 0 (a value of zero
// forces some square sub-basis singular), plus payoff-difference normals
// (argmax breakpoints), axes, and a uniform safety net.
inline std::vector<double> candidate_angles(const Game& g) {
  std::vector<double> angles;
  for (int q = 0; q < 4; ++q) push_angle(angles, q * kTwoPi / 4.0);
  constexpr int kSafetyGrid = 2048;
  for (int s = 0; s < kSafetyGrid; ++s) push_angle(angles, kTwoPi * s / kSafetyGrid);

  std::size_t cells = g.payoffs.size();
  for (std::size_t a = 0; a < cells; ++a)
    for (std::size_t b = a + 1; b < cells; ++b) {
      double d0 = g.payoffs[a][0] - g.payoffs[b][0];
      double d1 = g.payoffs[a][1] - g.payoffs[b][1];
      if (std::fabs(d0) + std::fabs(d1) < 1e-14) continue;
      double th = std::atan2(-d0, d1);
      push_angle(angles, th);
      push_angle(angles, th + kTwoPi / 2.0);
    }

  double scale = 1.0;
  for (const Vec& u : g.payoffs) scale = std::max({scale, std::fabs(u[0]), std::fabs(u[1])});
  int kmax = std::min(g.n1, g.n2);
  for (int k = 1; k <= kmax; ++k) {
    double ref = 1.0;
    for (int e = 0; e < k; ++e) ref *= scale * (k + 1);
    enumerate_subsets(g.n1, k, [&](const std::vector<int>& rows) {
      enumerate_subsets(g.n2, k, [&](const std::vector<int>& cols) {
        std::vector<Vec> a(k, Vec(k)), b(k, Vec(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            const Vec& u = g.at(rows[i], cols[j]);
            a[i][j] = u[0];
            b[i][j] = u[1];
          }
        // Two parametrizations so that roots near the axes stay small:
        // det(A + tB) with t = tan th, and det(B + sA) with s = cot th.
        for (int side = 0; side < 2; ++side) {
          Vec coeffs = side == 0 ? pencil_coeffs(a, b) : pencil_coeffs(b, a);
          double biggest = 0.0;
          for (double c : coeffs) biggest = std::max(biggest, std::fabs(c));
          if (biggest <= 1e-12 * ref) continue;  // identically singular pencil
          for (double root : real_roots(coeffs)) {
            if (std::fabs(root) > 1e8) continue;  // handled by the other side
            double th = side == 0 ? std::atan(root) : std::atan2(1.0, root);
            push_angle(angles, th);
            push_angle(angles, th + kTwoPi / 2.0);
          }
        }
      });
    });
  }

  std::sort(angles.begin(), angles.end());
  std::vector<double> unique;
  for (double th : angles)
    if (unique.empty() || th - unique.back() > 1e-11) unique.push_back(th);
  std::vector<double> out = unique;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    double next = (i + 1 < unique.size()) ? unique[i + 1] : unique.front() + kTwoPi;
    push_angle(out, (unique[i] + next) / 2.0);
  }
  return out;
}

}  // namespace detail

// Exact decision of "v_lambda >= 0 for every lambda" (or "> 0" when strict)
// for m <= 2.  m = 1 needs only the two signs; m = 2 evaluates the value at
// every angle where it can cross zero and between all of them, so the sign
// pattern is complete and boundary games get an exact margin of 0.
inline Verdict check_zero_exact_small(const Game& g, bool strict = false) {
  if (g.m > 2)
    throw std::invalid_argument("check_zero_exact_small: exact route supports m <= 2 only");
  double lip = payoff_bound(g);
  double band = 1e-12 * std::max(1.0, lip);  // residual LP noise on exact candidates
  double min_v = std::numeric_limits<double>::infinity();
  Direction argmin;
  auto consider = [&](Vec lambda) {
    Direction d(std::move(lambda), Direction::Norm::euclidean_unit);
    double v = value_direction(g, d);
    if (v < min_v) {
      min_v = v;
      argmin = d;
    }
  };
  if (g.m == 1) {
    consider(Vec{1.0});
    consider(Vec{-1.0});
  } else {
    for (double th : detail::candidate_angles(g)) consider(Vec{std::cos(th), std::sin(th)});
  }
  Verdict out;
  out.margin = min_v;
  if (min_v < -band) {
    out.status = Verdict::Status::Fails;
    out.witness = {argmin, min_v, std::nullopt, std::nullopt, "direction with negative value"};
    return out;
  }
  out.certificate = {0.0, min_v, lip, "exact candidate-angle evaluation"};
  if (!strict || min_v > band) {
    out.status = Verdict::Status::Holds;
  } else {
    out.status = Verdict::Status::Fails;  // value attains 0: not strictly positive
    out.witness = {argmin, min_v, std::nullopt, std::nullopt,
                   "direction with value 0 (strict positivity fails)"};
  }
  return out;
}

// Combined zero check: exact for m <= 2, certified sweep otherwise.
inline Verdict check_zero(const Game& g, double h, bool strict) {
  if (g.m <= 2) return check_zero_exact_small(g, strict);
  return check_zero_attainable(g, h, strict);
}

// ---------------------------------------------------------------------------
// Target-specific conditions.

// Largest delta >= 0 with u(p, q) = delta * x for some row mixture p, or
// nullopt when even delta = 0 is unreachable against this q.
inline std::optional<double> delta_star(const Game& g, const Vec& x, const MixedAction& q) {
  if (static_cast<int>(x.size()) != g.m)
    throw std::invalid_argument("delta_star: target dimension mismatch");
  if (is_zero(x)) throw std::invalid_argument("delta_star: target must be nonzero");
  if (q.size() != g.n2) throw std::invalid_argument("delta_star: q size mismatch");
  std::vector<Vec> a(g.m + 1, Vec(g.n1 + 1, 0.0));
  Vec b(g.m + 1, 0.0), c(g.n1 + 1, 0.0);
  for (int i = 0; i < g.n1; ++i) {
    for (int j = 0; j < g.n2; ++j) {
      if (q[j] == 0.0) continue;
      const Vec& u = g.at(i, j);
      for (int d = 0; d < g.m; ++d) a[d][i] += q[j] * u[d];
    }
    a[g.m][i] = 1.0;
  }
  for (int d = 0; d < g.m; ++d) a[d][g.n1] = -x[d];
  b[g.m] = 1.0;
  c[g.n1] = 1.0;
  lp::Result r = lp::max_equality(a, b, c);
  if (r.status == lp::Status::infeasible) return std::nullopt;
  if (r.status != lp::Status::optimal)
    throw std::runtime_error("delta_star: unbounded program (x = 0 should be rejected)");
  return r.objective;
}

namespace detail {

inline std::vector<MixedAction> simplex_grid(int n, int denom) {
  std::vector<MixedAction> out;
  std::vector<int> k(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i + 1 == n) {
      k[i] = left;
      std::vector<double> w(n);
      for (int d = 0; d < n; ++d) w[d] = static_cast<double>(k[d]) / denom;
      out.push_back(MixedAction(std::move(w)));
      return;
    }
    for (int take = 0; take <= left; ++take) {
      k[i] = take;
      self(self, i + 1, left - take);
    }
  };
  rec(rec, 0, denom);
  return out;
}

}  // namespace detail

// Evidence pass over the proportional-feed condition: is inf_q delta*(q)
// bounded away from 0?  delta* may be discontinuous in q, so sampling cannot
// certify a positive infimum; the outcome is either Fails (an infeasible q,
// or the sampled infimum keeps halving under refinement) or Undecided with
// the gathered evidence.  The binding decision route is check_B4.
inline Verdict check_B3(const Game& g, const Vec& x, int grid_k) {
  if (grid_k < 1) throw std::invalid_argument("check_B3: grid_k must be >= 1");
  double threshold = 0.25 * payoff_bound(g) / std::max(1.0, norm2(x));
  std::vector<double> infs;
  std::vector<MixedAction> arg;
  Verdict out;
  for (int level = 0; level < 3; ++level) {
    int denom = grid_k << level;
    double inf = std::numeric_limits<double>::infinity();
    MixedAction worst;
    for (const MixedAction& q : detail::simplex_grid(g.n2, denom)) {
      std::optional<double> d = delta_star(g, x, q);
      if (!d) {
        out.status = Verdict::Status::Fails;
        out.margin = 0.0;
        out.witness = {std::nullopt, std::nullopt, q, std::nullopt,
                       "no row mixture feeds any delta >= 0 of the target against this q"};
        return out;
      }
      if (*d < inf) {
        inf = *d;
        worst = q;
      }
    }
    infs.push_back(inf);
    arg.push_back(worst);
  }
  std::string history = "sampled infima across refinements: ";
  for (std::size_t i = 0; i < infs.size(); ++i)
    history += (i ? ", " : "") + std::to_string(infs[i]);
  bool decays = infs[1] <= threshold && infs[2] <= threshold &&
                infs[1] <= 0.5 * infs[0] + 1e-12 && infs[2] <= 0.5 * infs[1] + 1e-12;
  out.margin = infs[2];
  if (decays) {
    out.status = Verdict::Status::Fails;
    out.witness = {std::nullopt, infs[2], arg[2], std::nullopt,
                   "sampled infimum of delta*(q) decays toward 0 under grid refinement; " + history};
    return out;
  }
  out.status = Verdict::Status::Undecided;
  out.certificate = {0.0, infs[2], 0.0,
                     (infs[2] > threshold ? "sampled infimum stable above threshold (evidence only); "
                                          : "inconclusive sampling; ") +
                         history};
  return out;
}

inline std::vector<double> default_delta_schedule() {
  std::vector<double> out;
  double d = 1.0;
  for (int i = 0; i < 16; ++i, d /= 2.0) out.push_back(d);
  return out;
}

// Looks for delta > 0 with zero attainable in the shifted game G - delta*x.
// First success wins; when every sampled delta produces a certified negative
// witness the verdict is Fails (evidence over the schedule, not a proof for
// all delta); anything else is Undecided.
inline Verdict check_B4(const Game& g, const Vec& x, const std::vector<double>& delta_schedule,
                        double h) {
  if (static_cast<int>(x.size()) != g.m)
    throw std::invalid_argument("check_B4: target dimension mismatch");
  if (is_zero(x)) throw std::invalid_argument("check_B4: target must be nonzero");
  if (delta_schedule.empty() || delta_schedule.front() <= 0.0)
    throw std::invalid_argument("check_B4: schedule must be nonempty, positive, decreasing");
  for (std::size_t i = 1; i < delta_schedule.size(); ++i)
    if (delta_schedule[i] >= delta_schedule[i - 1] || delta_schedule[i] <= 0.0)
      throw std::invalid_argument("check_B4: schedule must be nonempty, positive, decreasing");

  bool all_failed = true;
  Verdict last_fail;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (double delta : delta_schedule) {
    Vec shift(x);
    for (double& v : shift) v *= delta;
    Verdict z = check_zero(translate(g, shift), h, /*strict=*/false);
    if (z.holds()) {
      Verdict out;
      out.status = Verdict::Status::Holds;
      out.margin = z.margin;
      out.certificate = z.certificate;
      if (out.certificate)
        out.certificate->note += "; zero attainable in the game shifted by delta * target";
      out.witness = {std::nullopt, std::nullopt, std::nullopt, std::make_pair(delta, delta),
                     "witness delta"};
      return out;
    }
    if (z.fails()) {
      last_fail = z;
    } else {
      all_failed = false;
      best_margin = std::max(best_margin, z.margin);
    }
  }
  Verdict out;
  if (all_failed) {
    out.status = Verdict::Status::Fails;
    out.margin = last_fail.margin;
    out.witness = last_fail.witness;
    if (out.witness) {
      out.witness->delta_range = std::make_pair(delta_schedule.back(), delta_schedule.front());
      out.witness->note +=
          "; every sampled delta in the schedule leaves zero unattainable in the shifted game";
    }
  } else {
    out.status = Verdict::Status::Undecided;
    out.margin = best_margin;
    out.certificate = {h, best_margin, payoff_bound(g),
                       "no sampled delta certified; sweep inconclusive for some shifts"};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Combined verdict.

struct CheckerParams {
  double resolution = 0.01;            // sweep spacing for m > 2
  std::vector<double> delta_schedule;  // empty -> default_delta_schedule()
  int b3_grid = 4;                     // base refinement for the evidence pass
  bool b3_evidence = true;
};

struct AttainabilityReport {
  Verdict verdict;                        // combined answer for the target
  std::optional<Verdict> every_vector;    // strict all-directions check
  std::optional<Verdict> zero;            // weak all-directions check (zero target)
  std::optional<Verdict> shifted_zero;    // schedule over G - delta*x
  std::optional<Verdict> proportional;    // evidence-only inf_q delta*(q) pass
};

inline nlohmann::json to_json(const AttainabilityReport& r) {
  nlohmann::json j;
  j["verdict"] = to_json(r.verdict);
  if (r.every_vector) j["every_vector"] = to_json(*r.every_vector);
  if (r.zero) j["zero"] = to_json(*r.zero);
  if (r.shifted_zero) j["shifted_zero"] = to_json(*r.shifted_zero);
  if (r.proportional) j["proportional"] = to_json(*r.proportional);
  return j;
}

// Decision cascade for a target x:
//   x = 0: the weak zero check is the whole answer.
//   x != 0: strict positivity over all directions makes every target
//   attainable.  Failing that, zero must be attainable (necessary), and the
//   shifted-game schedule decides; the proportional-feed sampling is attached
//   as corroborating evidence only.
inline AttainabilityReport attainability_report(const Game& g, const Vec& x,
                                                const CheckerParams& params = {}) {
  if (static_cast<int>(x.size()) != g.m)
    throw std::invalid_argument("attainability_report: target dimension mismatch");
  AttainabilityReport rep;
  if (is_zero(x)) {
    rep.zero = check_zero(g, params.resolution, /*strict=*/false);
    rep.verdict = *rep.zero;
    return rep;
  }
  rep.every_vector = check_zero(g, params.resolution, /*strict=*/true);
  if (rep.every_vector->holds()) {
    rep.verdict = *rep.every_vector;
    if (rep.verdict.certificate)
      rep.verdict.certificate->note += "; every target is attainable, including this one";
    return rep;
  }
  rep.zero = check_zero(g, params.resolution, /*strict=*/false);
  if (rep.zero->fails()) {
    rep.verdict = *rep.zero;
    if (rep.verdict.witness)
      rep.verdict.witness->note += "; zero unattainable, so no target is attainable";
    return rep;
  }
  std::vector<double> schedule =
      params.delta_schedule.empty() ? default_delta_schedule() : params.delta_schedule;
  rep.shifted_zero = check_B4(g, x, schedule, params.resolution);
  if (params.b3_evidence) rep.proportional = check_B3(g, x, params.b3_grid);
  if (!rep.zero->holds()) {
    rep.verdict.status = Verdict::Status::Undecided;
    rep.verdict.margin = rep.zero->margin;
    rep.verdict.certificate = {params.resolution, rep.zero->margin, payoff_bound(g),
                               "zero check inconclusive; cannot combine"};
    return rep;
  }
  rep.verdict = *rep.shifted_zero;
  if (rep.verdict.fails() && rep.verdict.witness)
    rep.verdict.witness->note += "; verdict from the sampled shift schedule";
  return rep;
}

inline Verdict attainability_verdict(const Game& g, const Vec& x,
                                     const CheckerParams& params = {}) {
  return attainability_report(g, x, params).verdict;
}

}  // namespace attain
