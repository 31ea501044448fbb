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

// Documented claims for the bundled scenarios.  Each claim is a
// self-contained check with pinned tolerances; `scenario run <name>` and
// the acceptance harness both execute these, so a claim failing here is
// the same event as the corresponding release criterion failing.

#include <cmath>
#include <map>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "attain/checker.hpp"
#include "attain/discrete.hpp"
#include "attain/engine.hpp"
#include "attain/scenarios.hpp"
#include "attain/strategy.hpp"

namespace attain {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string description;
  std::function<ClaimResult()> run;
};

struct Scenario {
  std::string name;
  Game game;
  std::vector<Claim> claims;
};

namespace claims {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- Harmonic steering runs (shared by the bound and recursion claims) ----

struct SteeringRun {
  std::string adversary;
  double eta = 0.0;
  double horizon = 0.0;   // horizon actually simulated
  bool reached = false;   // horizon covers the [2, 2.2] audit window
  Trajectory traj;
  std::vector<BlockState> log;
};

// Horizon reachable under the block cap, capped below the requested one.
inline double reachable_horizon(double eta, double want, int max_blocks) {
  double h = 0.0;
  for (int k = 1; k <= max_blocks; ++k) {
    h += 1.0 / k;
    if (eta * h >= want) return want;
  }
  return 0.95 * eta * h;
}

inline std::vector<std::pair<std::string, StrategyPtr>> steering_adversaries() {
  auto col = [](int j) { return MixedAction::pure(2, j); };
  std::vector<std::pair<std::string, StrategyPtr>> out;
  out.emplace_back("stationary-first-col", stationary(col(0)));
  out.emplace_back("stationary-second-col", stationary(col(1)));
  out.emplace_back("stationary-uniform", stationary(MixedAction::uniform(2)));
  out.emplace_back("block-switcher", switcher(0.3, {col(0), col(1)}));
  return out;
}

inline std::vector<SteeringRun> steering_suite(double eta, double want_horizon, int max_blocks) {
  Game g = example1_game();
  double horizon = reachable_horizon(eta, want_horizon, max_blocks);
  std::vector<SteeringRun> runs;
  for (auto& [name, adv] : steering_adversaries()) {
    ZeroAttainer z(g, eta);
    MatchOptions opts;
    opts.max_blocks = max_blocks;
    SteeringRun r;
    r.adversary = name;
    r.eta = eta;
    r.horizon = horizon;
    // The audit window is [2, horizon]; a capped run that still clears t = 2
    // is auditable, just over a shorter window.
    r.reached = horizon > 2.0;
    r.traj = run_match(g, z, *adv, horizon, opts);
    r.log = z.history();
    runs.push_back(std::move(r));
  }
  return runs;
}

// One set of runs per eta, shared by the bound and recursion claims (the
// recursion is audited on exactly the runs the bound claim made).
inline const std::vector<SteeringRun>& steering_runs_cached(double eta) {
  static std::map<double, std::vector<SteeringRun>> cache;
  auto it = cache.find(eta);
  if (it == cache.end()) it = cache.emplace(eta, steering_suite(eta, 2.2, 40000)).first;
  return it->second;
}

// |gamma^t| <= 9*2*eta + U*(current block width) for all t >= 2, with U = 3.
inline ClaimResult steering_bound(const std::vector<SteeringRun>& runs) {
  ClaimResult res{true, ""};
  for (const auto& r : runs) {
    if (!r.reached) {
      res.pass = false;
      res.detail += "[" + r.adversary + " eta=" + fmt(r.eta) + "] blocked: needs ~" +
                    fmt(ZeroAttainer::blocks_needed(r.eta, 2.0)) +
                    " blocks to reach t=2, ran to t=" + fmt(r.horizon) + "; ";
      continue;
    }
    const auto& bp = r.traj.control1.breakpoints;
    double worst = -1e300;
    auto audit = [&](double t, double gamma_abs) {
      int k = static_cast<int>(std::upper_bound(bp.begin(), bp.end(), t) - bp.begin()) - 1;
      double width = r.eta / (k + 1);
      worst = std::max(worst, gamma_abs - (9.0 * 2.0 * r.eta + 3.0 * width));
    };
    audit(2.0, std::fabs(r.traj.gamma_at(2.0)[0]));
    for (std::size_t i = 0; i < r.traj.times.size(); ++i)
      if (r.traj.times[i] >= 2.0) audit(r.traj.times[i], std::fabs(r.traj.gamma[i][0]));
    if (worst > 1e-8) {
      res.pass = false;
      res.detail += "[" + r.adversary + " eta=" + fmt(r.eta) + "] bound exceeded by " +
                    fmt(worst) + "; ";
    } else {
      res.detail += "[" + r.adversary + " eta=" + fmt(r.eta) + "] slack " + fmt(-worst) + "; ";
    }
  }
  return res;
}

// ||S_k||^2 <= ||S_{k-1}||^2 + (3*eta/k)^2 and ||S_k|| <= 6*eta, every block.
inline ClaimResult steering_recursion(const std::vector<SteeringRun>& runs) {
  ClaimResult res{true, ""};
  for (const auto& r : runs) {
    double worst_step = -1e300, worst_norm = -1e300;
    for (std::size_t k = 0; k < r.log.size(); ++k) {
      double n2 = dot(r.log[k].s, r.log[k].s);
      worst_norm = std::max(worst_norm, std::sqrt(n2) - 6.0 * r.eta);
      if (k == 0) continue;
      double prev = dot(r.log[k - 1].s, r.log[k - 1].s);
      double step = 3.0 * r.eta / static_cast<double>(k);
      worst_step = std::max(worst_step, n2 - (prev + step * step));
    }
    if (worst_step > 1e-8 || worst_norm > 1e-8) {
      res.pass = false;
      res.detail += "[" + r.adversary + " eta=" + fmt(r.eta) + "] recursion violated (step " +
                    fmt(worst_step) + ", norm " + fmt(worst_norm) + "); ";
    }
  }
  if (res.pass && !runs.empty())
    res.detail = "eta=" + fmt(runs.front().eta) + ": recursion holds on " +
                 std::to_string(runs.size()) + " runs";
  return res;
}

// ---- Discrete impossibility ----

inline ClaimResult discrete_sign_bounce(int stages) {
  Game g = example1_game();
  auto counter = sign_counter_discrete();
  ClaimResult res{true, ""};
  for (auto& [name, strat] : scripted_row_strategies(2)) {
    auto t = run_discrete(g, strat, counter, stages);
    int bounces = 0;
    for (int l = 0; l + 1 <= stages; ++l) {
      double s = t.cumulative[l][0], nxt = t.cumulative[l + 1][0];
      bool inside = s >= -0.5 && s <= 0.5;
      bool next_inside = nxt >= -0.5 && nxt <= 0.5;
      if (inside) {
        ++bounces;
        if (next_inside) {
          res.pass = false;
          res.detail += "[" + name + "] stayed inside the band at stage " + std::to_string(l) + "; ";
        }
      }
    }
    res.detail += "[" + name + "] " + std::to_string(bounces) + " band exits; ";
  }
  return res;
}

// ---- Scalar boundary game ----

inline ClaimResult boundary_values_exact() {
  Game g = example2_game();
  double vp = value_direction(g, Direction({1.0}));
  double vm = value_direction(g, Direction({-1.0}));
  Verdict weak = check_zero_exact_small(g, false);
  Verdict strict = check_zero_exact_small(g, true);
  bool pass = vp == 0.0 && vm == 0.0 && weak.holds() && weak.margin == 0.0 && strict.fails();
  return {pass, "v(+1)=" + fmt(vp) + " v(-1)=" + fmt(vm) + " weak=" + to_string(weak.status) +
                    " strict=" + to_string(strict.status)};
}

inline ClaimResult locker_blocks_asymptotic() {
  Game g = example2_game();
  ZeroAttainer z(g, 0.2);
  TwoPhaseLocker locker(0.05);
  Trajectory t = run_match(g, z, locker, 2.0);
  double c = 1e300;
  c = std::min(c, std::fabs(t.gamma_at(1.0)[0]));
  for (std::size_t i = 0; i < t.times.size(); ++i)
    if (t.times[i] >= 1.0) c = std::min(c, std::fabs(t.gamma[i][0]));
  return {c >= 0.01, "measured c = " + fmt(c) + " (need >= 0.01)"};
}

// ---- Plane game suite ----

inline ClaimResult always_b_freezes() {
  Game g = example4_game();
  ClaimResult res{true, ""};
  for (auto& [name, adv] : steering_adversaries()) {
    Stationary b(MixedAction::pure(3, 2));
    Trajectory t = run_match(g, b, *adv, 3.0);
    for (const Vec& gm : t.gamma)
      if (gm[0] != 0.0 || gm[1] != 0.0) {
        res.pass = false;
        res.detail += "[" + name + "] gamma left (0,0); ";
      }
  }
  if (res.pass) res.detail = "gamma identically (0,0) against the whole suite";
  return res;
}

inline ClaimResult weak_attainment(double eps) {
  Game g = example4_game();
  ClaimResult res{true, ""};
  for (auto& [name, adv] : steering_adversaries()) {
    WeakAttainerEx4 w(eps);
    Trajectory t = run_match(g, w, *adv, 3.0 / eps);
    double sup = distance_to_target(t, {1.0, 1.0}, 1.0 / eps);
    bool ok = sup < eps;
    res.detail += "[" + name + "] sup=" + fmt(sup);
    // When 1/eps is itself a grid time, a stationary second column makes the
    // trajectory tangent to the ball: sup equals eps exactly and the strict
    // inequality cannot hold.  Surface the margin so a boundary miss is
    // distinguishable from a blow-up.
    if (!ok) res.detail += " (sup-eps=" + fmt(sup - eps) + ")";
    res.detail += "; ";
    if (!ok) res.pass = false;
  }
  return res;
}

inline ClaimResult shift_rate_decay() {
  Game g = example4_game();
  const Vec x = {1.0, 1.0};
  const double cap = 1.5;  // delta* <= C * t with C = 1.5
  ClaimResult res{true, ""};
  double prev = 1e300;
  for (double t : {0.25, 0.0625, 0.015625}) {
    auto ds = delta_star(g, x, MixedAction({1.0 - t, t}));
    if (!ds) return {false, "delta_star infeasible at t=" + fmt(t)};
    res.detail += "t=" + fmt(t) + " delta*=" + fmt(*ds) + "; ";
    if (!(*ds <= cap * t) || !(*ds < prev)) res.pass = false;
    prev = *ds;
  }
  res.detail += "decays toward 0";
  return res;
}

inline std::vector<double> b4_claim_schedule() {
  std::vector<double> sched;
  for (int i = 0; i <= 10; ++i) sched.push_back(std::ldexp(1.0, -i));
  return sched;
}

inline ClaimResult b4_all_deltas_fail() {
  Game g = example4_game();
  const Vec x = {1.0, 1.0};
  auto sched = b4_claim_schedule();
  Verdict v = check_B4(g, x, sched, 0.01);
  if (!v.fails()) return {false, std::string("expected Fails, got ") + to_string(v.status)};
  ClaimResult res{true, "all " + std::to_string(sched.size()) + " shifts refuted; "};
  for (double d : sched) {
    Vec dx = {d * x[0], d * x[1]};
    Verdict shifted = check_zero_exact_small(translate(g, dx), false);
    if (!shifted.fails() || !shifted.witness || !shifted.witness->direction) {
      res.pass = false;
      res.detail += "no witness at delta=" + fmt(d) + "; ";
      continue;
    }
    double re = value_direction(translate(g, dx), *shifted.witness->direction);
    if (!(re < -1e-8)) {
      res.pass = false;
      res.detail += "witness at delta=" + fmt(d) + " re-checks to " + fmt(re) + "; ";
    }
  }
  return res;
}

inline ClaimResult plane_target_unattainable() {
  Game g = example4_game();
  AttainabilityReport rep = attainability_report(g, {1.0, 1.0});
  bool pass = rep.verdict.fails() && rep.shifted_zero && rep.shifted_zero->fails();
  return {pass, std::string("verdict=") + to_string(rep.verdict.status)};
}

// ---- Network game ----

inline ClaimResult network_table_matches_formula() {
  // build_network_game() itself cross-checks every entry and throws on any
  // mismatch; re-derive here anyway and spot-check the two corner entries.
  Game g = build_network_game();
  const double flows[8][3] = {{5, 5, 5},  {5, 5, -5},  {5, -5, 5},  {5, -5, -5},
                              {-5, 5, 5}, {-5, 5, -5}, {-5, -5, 5}, {-5, -5, -5}};
  const double demands[4][2] = {{-3, -3}, {-3, 2}, {2, -3}, {2, 2}};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j) {
      double u0 = flows[i][0] - flows[i][1] - demands[j][0];
      double u1 = flows[i][1] + flows[i][2] - demands[j][1];
      const Vec& e = g.at(i, j);
      if (e[0] != u0 || e[1] != u1) return {false, "entry mismatch at " + std::to_string(i)};
    }
  bool corners = g.at(0, 0) == Vec{3.0, 13.0} && g.at(7, 3) == Vec{-2.0, -12.0};
  return {corners, corners ? "all 32 entries match the flow formula" : "corner entries wrong"};
}

// Independent value oracle for separable payoffs: u(p, q) is bilinear and
// splits as f(p) - h(q), so the minimax value in direction lambda is just
// max_i min_j <lambda, u(i, j)>.
inline double separable_value(const Game& g, const Vec& lambda) {
  double best = -1e300;
  for (int i = 0; i < g.n1; ++i) {
    double worst = 1e300;
    for (int j = 0; j < g.n2; ++j) worst = std::min(worst, dot(lambda, g.at(i, j)));
    best = std::max(best, worst);
  }
  return best;
}

inline ClaimResult network_strict_sweep() {
  Game g = build_network_game();
  Verdict v = check_zero_attainable(g, 0.01, true);
  if (!v.holds() || !v.certificate) return {false, "expected certified Holds"};
  double oracle = 1e300;
  const int n = 8192;
  for (int a = 0; a < n; ++a) {
    double th = 2.0 * std::numbers::pi * a / n;
    oracle = std::min(oracle, separable_value(g, {std::cos(th), std::sin(th)}));
  }
  double diff = std::fabs(v.certificate->min_value - oracle);
  return {diff <= 1e-3, "certified min " + fmt(v.certificate->min_value) + ", oracle " +
                            fmt(oracle) + ", diff " + fmt(diff)};
}

inline ClaimResult network_every_target() {
  Game g = build_network_game();
  ClaimResult res{true, ""};
  for (const Vec& x : std::vector<Vec>{{1.0, 1.0}, {7.0, -4.0}, {0.0, -3.0}}) {
    AttainabilityReport rep = attainability_report(g, x);
    bool ok = rep.verdict.holds() && rep.every_vector && rep.every_vector->holds();
    res.detail += "(" + fmt(x[0]) + "," + fmt(x[1]) + ")=" + to_string(rep.verdict.status) + "; ";
    if (!ok) res.pass = false;
  }
  return res;
}

inline ClaimResult network_cone_closure() {
  Game g = build_network_game();
  const std::vector<Vec> base = {{1.0, 1.0}, {7.0, -4.0}, {0.0, -3.0}};
  ClaimResult res{true, ""};
  auto holds_for = [&](const Vec& x) { return attainability_verdict(g, x).holds(); };
  for (const Vec& x : base) {
    if (!holds_for({2.0 * x[0], 2.0 * x[1]}) || !holds_for({0.5 * x[0], 0.5 * x[1]}))
      res.pass = false;
  }
  for (std::size_t a = 0; a < base.size(); ++a)
    for (std::size_t b = a + 1; b < base.size(); ++b)
      if (!holds_for({0.5 * (base[a][0] + base[b][0]), 0.5 * (base[a][1] + base[b][1])}))
        res.pass = false;
  res.detail = res.pass ? "doubling, halving and midpoints all stay attainable"
                        : "cone closure violated";
  return res;
}

inline ClaimResult scalar_value_one() {
  double v = value_direction(example1_game(), Direction({1.0}));
  return {v == 1.0, "value in direction +1 is " + fmt(v)};
}

inline ClaimResult scalar_every_target() {
  Game g = example1_game();
  Verdict strict = check_zero_exact_small(g, true);
  AttainabilityReport rep = attainability_report(g, {5.0});
  bool pass = strict.holds() && rep.verdict.holds();
  return {pass, std::string("strict zero check ") + to_string(strict.status) + ", target 5 " +
                    to_string(rep.verdict.status)};
}

}  // namespace claims

inline const std::vector<Scenario>& bundled_scenarios() {
  static const std::vector<Scenario> all = [] {
    using namespace claims;
    std::vector<Scenario> v;

    Scenario e1{"example1", example1_game(), {}};
    e1.claims.push_back({"value-direction-one", "scalarized value in direction +1 equals 1",
                         [] { return scalar_value_one(); }});
    e1.claims.push_back(
        {"every-target-attainable", "strictly positive values make every scalar target attainable",
         [] { return scalar_every_target(); }});
    e1.claims.push_back({"steering-bound",
                         "harmonic steering keeps |gamma| within 18*eta + 3*width after t=2 "
                         "for eta in {0.05, 0.1, 0.2}",
                         [] {
                           ClaimResult combined{true, ""};
                           for (double eta : {0.05, 0.1, 0.2}) {
                             ClaimResult r = steering_bound(steering_runs_cached(eta));
                             combined.pass = combined.pass && r.pass;
                             combined.detail += r.detail;
                           }
                           return combined;
                         }});
    e1.claims.push_back({"block-norm-recursion",
                         "block norms obey ||S_k||^2 <= ||S_{k-1}||^2 + (3 eta/k)^2",
                         [] {
                           ClaimResult combined{true, ""};
                           for (double eta : {0.05, 0.1, 0.2}) {
                             ClaimResult r = steering_recursion(steering_runs_cached(eta));
                             combined.pass = combined.pass && r.pass;
                             combined.detail += r.detail + " | ";
                           }
                           return combined;
                         }});
    e1.claims.push_back({"discrete-sign-bounce",
                         "against the sign counter the cumulative sum cannot stay in [-1/2, 1/2]",
                         [] { return discrete_sign_bounce(1000); }});
    v.push_back(std::move(e1));

    Scenario e2{"example2", example2_game(), {}};
    e2.claims.push_back({"boundary-values-exact", "both directional values are exactly zero",
                         [] { return boundary_values_exact(); }});
    e2.claims.push_back({"locker-blocks-asymptotic",
                         "the two-phase locker keeps |gamma| >= 0.01 for all t >= 1",
                         [] { return locker_blocks_asymptotic(); }});
    v.push_back(std::move(e2));

    Scenario e4{"example4", example4_game(), {}};
    e4.claims.push_back({"always-b-freezes", "the third row pins gamma at (0,0) exactly",
                         [] { return always_b_freezes(); }});
    e4.claims.push_back({"weak-attainment",
                         "eps-blocks reach and hold the eps-ball around (1,1) for eps in "
                         "{0.05, 0.1}",
                         [] {
                           ClaimResult a = weak_attainment(0.05);
                           ClaimResult b = weak_attainment(0.1);
                           return ClaimResult{a.pass && b.pass,
                                              "eps=0.05: " + a.detail + "eps=0.1: " + b.detail};
                         }});
    e4.claims.push_back({"shift-rate-decay",
                         "the feasible shift rate along q_t = [(1-t), t] decays like t",
                         [] { return shift_rate_decay(); }});
    e4.claims.push_back({"b4-all-deltas-fail",
                         "every shifted game in the schedule has a re-checkable negative "
                         "direction",
                         [] { return b4_all_deltas_fail(); }});
    e4.claims.push_back({"target-unattainable", "(1,1) is not attainable",
                         [] { return plane_target_unattainable(); }});
    v.push_back(std::move(e4));

    Scenario net{"network", build_network_game(), {}};
    net.claims.push_back({"table-matches-formula",
                          "all 32 payoff entries reproduce the flow formula exactly",
                          [] { return network_table_matches_formula(); }});
    net.claims.push_back({"strict-zero-sweep",
                          "the strict sweep at h=0.01 certifies a positive minimum matching "
                          "the separable oracle",
                          [] { return network_strict_sweep(); }});
    net.claims.push_back({"every-target-attainable",
                          "(1,1), (7,-4) and (0,-3) are all attainable",
                          [] { return network_every_target(); }});
    net.claims.push_back({"cone-closure",
                          "attainability is closed under scaling and midpoints",
                          [] { return network_cone_closure(); }});
    v.push_back(std::move(net));
    return v;
  }();
  return all;
}

inline const Scenario* find_scenario(const std::string& name) {
  for (const Scenario& s : bundled_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace attain
