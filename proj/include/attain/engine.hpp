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

// Continuous-time match execution over piecewise-constant controls.
//
// Strategies update at their own increasing times tau^0 = 0 < tau^1 < ...
// and hold a constant mixed action per block.  The engine runs the merged
// event sequence; a player's block policy only ever receives the opponent's
// control truncated strictly before that player's own updating time, so
// non-anticipation is structural, not a convention.  When both players
// update at the same instant Player 1 is evaluated first; both see only
// strictly-prior play, so the order is for reproducibility only.
//
// Integration is closed-form (interval length times bilinear payoff), never
// quadrature, so trajectories are exact up to roundoff and bit-identical
// across runs.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "attain/game.hpp"
#include "json.hpp"

namespace attain {

// A control: constant mixed action per interval, tiling [0, infinity) from 0
// (the last action extends forever until another block is pushed).
struct PiecewiseControl {
  std::vector<double> breakpoints;  // increasing, breakpoints[0] == 0
  std::vector<MixedAction> actions;

  int segments() const { return static_cast<int>(actions.size()); }

  void push(double start, MixedAction a) {
    if (breakpoints.empty()) {
      if (start != 0.0) throw std::invalid_argument("PiecewiseControl: must start at 0");
    } else if (start <= breakpoints.back()) {
      throw std::invalid_argument("PiecewiseControl: breakpoints must increase");
    }
    breakpoints.push_back(start);
    actions.push_back(std::move(a));
  }

  const MixedAction& at(double t) const {
    if (breakpoints.empty() || t < 0.0)
      throw std::out_of_range("PiecewiseControl: no action at requested time");
    int lo = 0, hi = segments() - 1;
    while (lo < hi) {  // last breakpoint <= t
      int mid = (lo + hi + 1) / 2;
      if (breakpoints[mid] <= t) lo = mid;
      else hi = mid - 1;
    }
    return actions[lo];
  }
};

// Read-only window [0, end_time) onto a control.  This is all a delay
// strategy is ever shown of its opponent.
class ControlView {
 public:
  ControlView(const PiecewiseControl& c, double end_time) : c_(&c), end_(end_time) {
    n_ = static_cast<int>(std::lower_bound(c.breakpoints.begin(), c.breakpoints.end(), end_) -
                          c.breakpoints.begin());
  }

  double end_time() const { return end_; }
  int segments() const { return n_; }
  double seg_start(int i) const { return c_->breakpoints[i]; }
  double seg_end(int i) const { return (i + 1 < n_) ? c_->breakpoints[i + 1] : end_; }
  const MixedAction& action(int i) const { return c_->actions[i]; }

  // Index of the segment containing t (clamped to the first segment).
  int index_at(double t) const {
    auto begin = c_->breakpoints.begin();
    int i = static_cast<int>(std::upper_bound(begin, begin + n_, t) - begin) - 1;
    return std::max(i, 0);
  }

  bool empty() const { return n_ == 0; }

 private:
  const PiecewiseControl* c_;
  double end_;
  int n_;
};

// Exact integral of the payoff vector over [from, to), where both views must
// cover the range.
inline Vec integrate_payoff(const Game& g, const ControlView& own, const ControlView& opp,
                            double from, double to) {
  Vec acc(g.m, 0.0);
  if (to <= from) return acc;
  if (own.end_time() < to || opp.end_time() < to)
    throw std::invalid_argument("integrate_payoff: views do not cover the range");
  int i = own.index_at(from), j = opp.index_at(from);
  double t = from;
  while (t < to) {
    double stop = std::min({own.seg_end(i), opp.seg_end(j), to});
    if (stop > t) {
      Vec u = mixed_payoff(g, own.action(i), opp.action(j));
      for (int d = 0; d < g.m; ++d) acc[d] += (stop - t) * u[d];
      t = stop;
    }
    if (t >= to) break;
    if (own.seg_end(i) <= t && i + 1 < own.segments()) ++i;
    if (opp.seg_end(j) <= t && j + 1 < opp.segments()) ++j;
  }
  return acc;
}

// Strategy interface the engine drives.  The engine calls block_action
// exactly once per block, in increasing k, so implementations may keep
// incremental state (e.g. a running payoff integral).
class DelayStrategy {
 public:
  virtual ~DelayStrategy() = default;

  // tau^k; must return 0 for k = 0, be strictly increasing, and diverge
  // (infinity is fine and means "no further update").
  virtual double update_time(int k) const = 0;

  // Constant action on [tau^k, tau^{k+1}).  `opponent` is truncated at this
  // player's tau^k; `own` holds this player's past blocks.
  virtual MixedAction block_action(int k, const ControlView& opponent,
                                   const ControlView& own) = 0;
};

struct MatchOptions {
  int max_blocks = 100000;         // per player; exceeding this aborts the match
  std::size_t max_points = 1000000;  // trajectory breakpoints; no silent decimation
};

struct Trajectory {
  std::vector<double> times;  // merged breakpoints, first 0, last horizon
  std::vector<Vec> gamma;     // cumulative payoff at each time; gamma[0] = 0
  PiecewiseControl control1, control2;
  int blocks1 = 0, blocks2 = 0;
  double horizon = 0.0;

  // gamma is piecewise linear; evaluate anywhere inside [0, horizon].
  Vec gamma_at(double t) const {
    if (t < 0.0 || t > horizon) throw std::out_of_range("gamma_at: outside [0, horizon]");
    int lo = 0, hi = static_cast<int>(times.size()) - 1;
    while (lo < hi) {
      int mid = (lo + hi + 1) / 2;
      if (times[mid] <= t) lo = mid;
      else hi = mid - 1;
    }
    if (lo + 1 == static_cast<int>(times.size()) || times[lo] == t) return gamma[lo];
    double w = (t - times[lo]) / (times[lo + 1] - times[lo]);
    Vec out(gamma[lo].size());
    for (std::size_t d = 0; d < out.size(); ++d)
      out[d] = gamma[lo][d] + w * (gamma[lo + 1][d] - gamma[lo][d]);
    return out;
  }
};

inline Trajectory run_match(const Game& g, DelayStrategy& s1, DelayStrategy& s2, double horizon,
                            const MatchOptions& opts = {}) {
  if (horizon <= 0.0) throw std::invalid_argument("run_match: horizon must be positive");
  PiecewiseControl c1, c2;
  int k1 = -1, k2 = -1;
  double next1 = 0.0, next2 = 0.0;
  while (true) {
    double t = std::min(next1, next2);
    if (t >= horizon) break;
    if (next1 == t) {
      ++k1;
      if (k1 >= opts.max_blocks)
        throw std::runtime_error(
            "run_match: player 1 horizon " + std::to_string(horizon) + " unreachable within " +
            std::to_string(opts.max_blocks) + " blocks (reached t=" + std::to_string(t) + ")");
      MixedAction a = s1.block_action(k1, ControlView(c2, t), ControlView(c1, t));
      if (a.size() != g.n1) throw std::runtime_error("run_match: player 1 action size mismatch");
      c1.push(t, std::move(a));
      next1 = s1.update_time(k1 + 1);
      if (next1 <= t) throw std::runtime_error("run_match: player 1 update times not increasing");
    }
    if (next2 == t) {
      ++k2;
      if (k2 >= opts.max_blocks)
        throw std::runtime_error(
            "run_match: player 2 horizon " + std::to_string(horizon) + " unreachable within " +
            std::to_string(opts.max_blocks) + " blocks (reached t=" + std::to_string(t) + ")");
      MixedAction a = s2.block_action(k2, ControlView(c1, t), ControlView(c2, t));
      if (a.size() != g.n2) throw std::runtime_error("run_match: player 2 action size mismatch");
      c2.push(t, std::move(a));
      next2 = s2.update_time(k2 + 1);
      if (next2 <= t) throw std::runtime_error("run_match: player 2 update times not increasing");
    }
  }

  Trajectory traj;
  traj.horizon = horizon;
  traj.blocks1 = k1 + 1;
  traj.blocks2 = k2 + 1;
  std::vector<double> merged;
  merged.reserve(c1.breakpoints.size() + c2.breakpoints.size() + 1);
  std::merge(c1.breakpoints.begin(), c1.breakpoints.end(), c2.breakpoints.begin(),
             c2.breakpoints.end(), std::back_inserter(merged));
  merged.push_back(horizon);
  std::vector<double> times;
  for (double t : merged)
    if ((times.empty() || t > times.back()) && t <= horizon) times.push_back(t);
  if (times.back() != horizon) times.push_back(horizon);
  if (times.size() > opts.max_points)
    throw std::runtime_error("run_match: trajectory would exceed " +
                             std::to_string(opts.max_points) + " breakpoints");

  traj.times = std::move(times);
  traj.gamma.assign(traj.times.size(), Vec(g.m, 0.0));
  int i = 0, j = 0;
  for (std::size_t s = 0; s + 1 < traj.times.size(); ++s) {
    double a = traj.times[s], b = traj.times[s + 1];
    while (i + 1 < c1.segments() && c1.breakpoints[i + 1] <= a) ++i;
    while (j + 1 < c2.segments() && c2.breakpoints[j + 1] <= a) ++j;
    Vec u = mixed_payoff(g, c1.actions[i], c2.actions[j]);
    for (int d = 0; d < g.m; ++d) traj.gamma[s + 1][d] = traj.gamma[s][d] + (b - a) * u[d];
  }
  traj.control1 = std::move(c1);
  traj.control2 = std::move(c2);
  return traj;
}

// Sup over t in [from_time, horizon] of the Euclidean distance from gamma(t)
// to the point target.  The distance to a point (or any convex set) is
// convex along each linear piece, so the per-segment maximum sits at an
// endpoint and the sup is exact.
inline double distance_to_target(const Trajectory& traj, const Vec& target, double from_time) {
  if (from_time > traj.horizon)
    throw std::invalid_argument("distance_to_target: from_time beyond horizon");
  auto dist = [&](const Vec& p) {
    Vec d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - target[i];
    return norm2(d);
  };
  double best = dist(traj.gamma_at(std::max(from_time, 0.0)));
  for (std::size_t s = 0; s < traj.times.size(); ++s)
    if (traj.times[s] >= from_time) best = std::max(best, dist(traj.gamma[s]));
  return best;
}

// CSV export: one row per breakpoint.  The p/q columns hold the controls of
// the interval starting at that row's time (the final row repeats the last
// interval, since no control follows the horizon).
inline void write_csv(std::ostream& out, const Trajectory& traj) {
  int m = static_cast<int>(traj.gamma.front().size());
  int n1 = traj.control1.actions.front().size();
  int n2 = traj.control2.actions.front().size();
  out << "t";
  for (int d = 1; d <= m; ++d) out << ",gamma_" << d;
  for (int i = 1; i <= n1; ++i) out << ",p_" << i;
  for (int j = 1; j <= n2; ++j) out << ",q_" << j;
  out << "\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << ',' << buf;
  };
  int i = 0, j = 0;
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    double t = traj.times[s];
    while (i + 1 < traj.control1.segments() && traj.control1.breakpoints[i + 1] <= t) ++i;
    while (j + 1 < traj.control2.segments() && traj.control2.breakpoints[j + 1] <= t) ++j;
    std::snprintf(buf, sizeof buf, "%.17g", t);
    out << buf;
    for (int d = 0; d < m; ++d) emit(traj.gamma[s][d]);
    for (int a = 0; a < n1; ++a) emit(traj.control1.actions[i][a]);
    for (int b = 0; b < n2; ++b) emit(traj.control2.actions[j][b]);
    out << "\n";
  }
}

inline nlohmann::json summary_json(const Trajectory& traj,
                                   const std::optional<Vec>& target = std::nullopt,
                                   double from_time = 0.0) {
  nlohmann::json j;
  j["horizon"] = traj.horizon;
  j["points"] = traj.times.size();
  j["blocks"] = {traj.blocks1, traj.blocks2};
  j["final_gamma"] = traj.gamma.back();
  if (target) {
    j["target"] = *target;
    j["from_time"] = from_time;
    j["sup_distance"] = distance_to_target(traj, *target, from_time);
  }
  return j;
}

}  // namespace attain
