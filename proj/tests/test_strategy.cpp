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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "attain/engine.hpp"
#include "attain/scenarios.hpp"
#include "attain/strategy.hpp"

using namespace attain;

namespace {

MixedAction row(int i) { return MixedAction::pure(2, i); }

double sq(double x) { return x * x; }

// ||s - x||^2 with x = 0 allowed via empty target.
double offset_norm2(const Vec& s, const Vec& x) {
  double acc = 0.0;
  for (std::size_t d = 0; d < s.size(); ++d) acc += sq(s[d] - (x.empty() ? 0.0 : x[d]));
  return acc;
}

// The per-block recursion satisfied by harmonic steering: against any
// opponent, ||S_k - x||^2 grows by at most (block_width * U)^2 per block.
void check_steering_recursion(const std::vector<BlockState>& log, const Vec& x, double bound_u) {
  for (std::size_t k = 1; k < log.size(); ++k) {
    double width = log[k].time - log[k - 1].time;
    REQUIRE(offset_norm2(log[k].s, x) <=
            offset_norm2(log[k - 1].s, x) + sq(width * bound_u) + 1e-9);
  }
}

}  // namespace

TEST_CASE("zero attainer harmonic schedule") {
  ZeroAttainer z(example1_game(), 0.2);
  CHECK(z.update_time(0) == 0.0);
  CHECK(z.update_time(1) == 0.2 * 1.0);
  CHECK(z.update_time(3) == 0.2 * ((1.0 + 1.0 / 2.0) + 1.0 / 3.0));
  double needed = ZeroAttainer::blocks_needed(0.2, 2.0);
  CHECK(needed > 1.0e4);
  CHECK(needed < 2.5e4);
  CHECK(ZeroAttainer::blocks_needed(0.05, 2.0) > 1.0e17);
  CHECK_THROWS_AS(ZeroAttainer(example1_game(), 0.0), std::invalid_argument);
}

TEST_CASE("zero attainer keeps the cumulative payoff near zero") {
  Game g = example1_game();
  const double eta = 0.2;
  const double bound_u = payoff_bound(g);  // 3
  ZeroAttainer z(g, eta);
  Stationary opp(MixedAction::uniform(2));
  Trajectory t = run_match(g, z, opp, 2.2);

  const auto& log = z.history();
  REQUIRE(static_cast<int>(log.size()) == t.blocks1);
  check_steering_recursion(log, {}, bound_u);
  for (const auto& b : log) REQUIRE(std::fabs(b.s[0]) <= 6.0 * eta);

  // Each block action is minimax-optimal against the running direction:
  // the scalarized game has value >= ||S||, so every pure reply keeps
  // <-S, u> at least that large.
  for (const auto& b : log) {
    double s = b.s[0];
    if (std::fabs(s) < 1e-12) continue;
    const MixedAction& p = t.control1.actions[b.k];
    for (int j = 0; j < g.n2; ++j) {
      Vec u = mixed_payoff(g, p, MixedAction::pure(2, j));
      CHECK(-s * u[0] >= std::fabs(s) - 1e-8);
    }
  }

  CHECK(std::fabs(t.gamma.back()[0]) <= 6.0 * eta);
  CHECK(std::fabs(t.gamma_at(2.0)[0]) <= 6.0 * eta);
}

TEST_CASE("zero attainer against the two-phase locker parks at a nonzero payoff") {
  Game g = example2_game();
  ZeroAttainer z(g, 0.2);
  TwoPhaseLocker locker(0.05);
  Trajectory t = run_match(g, z, locker, 2.0);

  // Block 0 steers with S = 0, whose scalarized game is all zeros: the
  // solver picks the first row, which row 0 of this game rewards under
  // column 0.  The locker sees that mass and locks column 0; once the
  // attainer's own payoff went positive it switches to row 1, freezing
  // gamma at 0.2 forever.
  CHECK(t.control2.actions.back() == row(0));
  double frozen = t.gamma_at(0.2)[0];
  CHECK(frozen == Catch::Approx(0.2).margin(1e-12));
  for (std::size_t i = 0; i < t.times.size(); ++i)
    if (t.times[i] >= 1.0) CHECK(t.gamma[i][0] == frozen);
  CHECK(std::fabs(t.gamma.back()[0]) >= 0.01);
}

TEST_CASE("two-phase locker hand trajectories") {
  Game g = example2_game();
  {
    Stationary s1(row(0));  // row 0 forever: locker locks column 0
    TwoPhaseLocker s2(0.05);
    Trajectory t = run_match(g, s1, s2, 2.0);
    CHECK(t.gamma.back()[0] == Catch::Approx(2.0).margin(1e-12));
  }
  {
    Stationary s1(row(1));  // no row-0 mass: locks column 1, payoff -1
    TwoPhaseLocker s2(0.05);
    Trajectory t = run_match(g, s1, s2, 2.0);
    CHECK(t.gamma.back()[0] == Catch::Approx(-1.95).margin(1e-12));
  }
  CHECK_THROWS_AS(TwoPhaseLocker(0.0), std::invalid_argument);
}

TEST_CASE("acceleration equivariance: gamma^t = (1/beta) gamma^{beta t}") {
  Game g = example1_game();
  const double beta = 2.0;
  auto base_opp = [] { return Switcher(0.3, {row(0), row(1)}); };
  auto fast_opp = [] { return Switcher(0.15, {row(0), row(1)}); };

  ZeroAttainer base(g, 0.5);
  Switcher o1 = base_opp();
  Trajectory tb = run_match(g, base, o1, 2.0);

  Accelerate fast(zero_attainer(g, 0.5), beta);
  Switcher o2 = fast_opp();
  Trajectory tf = run_match(g, fast, o2, 1.0);

  REQUIRE(tb.times.size() == tf.times.size());
  for (std::size_t i = 0; i < tb.times.size(); ++i) {
    CHECK(tf.times[i] == tb.times[i] / beta);
    CHECK(tf.gamma[i][0] == tb.gamma[i][0] / beta);
  }
  REQUIRE(tb.control1.actions.size() == tf.control1.actions.size());
  for (std::size_t k = 0; k < tb.control1.actions.size(); ++k)
    CHECK(tb.control1.actions[k] == tf.control1.actions[k]);
}

TEST_CASE("acceleration round-trips exactly") {
  Game g = example1_game();
  ZeroAttainer plain(g, 0.5);
  Switcher o1(0.3, {row(0), row(1)});
  Trajectory ta = run_match(g, plain, o1, 2.0);

  Accelerate wrapped(accelerate(zero_attainer(g, 0.5), 2.0), 0.5);
  Switcher o2(0.3, {row(0), row(1)});
  Trajectory tw = run_match(g, wrapped, o2, 2.0);

  CHECK(ta.times == tw.times);
  CHECK(ta.gamma == tw.gamma);
  CHECK(ta.control1.breakpoints == tw.control1.breakpoints);
  CHECK_THROWS_AS(Accelerate(nullptr, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Accelerate(stationary(row(0)), 0.0), std::invalid_argument);
}

TEST_CASE("interleaving two copies of a stationary strategy changes nothing") {
  Game g = example1_game();
  Interleave both(stationary(MixedAction::uniform(2)), stationary(MixedAction::uniform(2)), 0.5);
  Stationary opp(row(0));
  Trajectory t = run_match(g, both, opp, 3.0);
  Stationary direct(MixedAction::uniform(2));
  Stationary opp2(row(0));
  Trajectory td = run_match(g, direct, opp2, 3.0);
  for (double at : {1.0, 2.0, 3.0})
    CHECK(t.gamma_at(at)[0] == Catch::Approx(td.gamma_at(at)[0]).margin(1e-12));
}

TEST_CASE("interleaving alternates pure blocks with exact window measure") {
  Game g = example1_game();
  Interleave mix(stationary(row(0)), stationary(row(1)), 0.25);
  Stationary opp(row(0));
  Trajectory t = run_match(g, mix, opp, 2.0);
  // Window [l, l+1/4) plays row 0 (payoff -3), the rest row 1 (payoff +1):
  // each unit window nets -3/4 + 3/4 = 0.
  CHECK(t.gamma_at(0.25)[0] == -0.75);
  CHECK(t.gamma_at(1.0)[0] == 0.0);
  CHECK(t.gamma_at(2.0)[0] == 0.0);
  CHECK_THROWS_AS(Interleave(stationary(row(0)), stationary(row(1)), 1.0), std::invalid_argument);
}

TEST_CASE("interleaved strategy replays its parts on compressed clocks") {
  Game g = example1_game();
  const double beta = 0.5;
  Interleave combo(zero_attainer(g, 0.5), stationary(row(1)), beta);
  Stationary opp(row(0));
  Trajectory t = run_match(g, combo, opp, 4.0);

  ZeroAttainer solo(g, 0.5);
  Stationary opp2(row(0));
  Trajectory ts = run_match(g, solo, opp2, 2.0);  // inner clock reaches 4 * beta

  // Split the combined run's increments by window part.
  Vec part1(1, 0.0), part2(1, 0.0);
  for (std::size_t i = 0; i + 1 < t.times.size(); ++i) {
    double mid = 0.5 * (t.times[i] + t.times[i + 1]);
    double frac = mid - std::floor(mid);
    double inc = t.gamma[i + 1][0] - t.gamma[i][0];
    (frac < beta ? part1 : part2)[0] += inc;
  }
  CHECK(part1[0] + part2[0] == Catch::Approx(t.gamma.back()[0]).margin(1e-12));
  CHECK(part1[0] == Catch::Approx(ts.gamma.back()[0]).margin(1e-9));
  CHECK(part2[0] == Catch::Approx(2.0 * 1.0).margin(1e-9));  // row 1 vs col 0 pays +1
}

TEST_CASE("x attainer with zero target degenerates to the zero attainer") {
  Game g = example1_game();
  XAttainer xa(g, {0.0}, 1.0, 1.0, 1.2);
  Stationary o1(row(0));
  Trajectory tx = run_match(g, xa, o1, 0.8);

  ZeroAttainer z(g, XAttainer::eta_for(g, 1.2));
  Stationary o2(row(0));
  Trajectory tz = run_match(g, z, o2, 0.8);

  CHECK(tx.times == tz.times);
  CHECK(tx.gamma == tz.gamma);
}

TEST_CASE("x attainer phases: scalar game, target 5") {
  Game g = example1_game();
  const Vec x = {5.0};
  XAttainer xa(g, x, 1.0, 1.5, 6.0);
  CHECK(xa.phase_boundary() == 1.0);

  Stationary opp(MixedAction::uniform(2));
  Trajectory t = run_match(g, xa, opp, 3.0);

  // The first phase-2 block opens exactly at 1/delta.
  bool seam_seen = false;
  for (double b : t.control1.breakpoints) {
    if (b == 1.0) seam_seen = true;
    if (b > 1.0 && !seam_seen) FAIL("no block boundary at the phase seam");
  }
  CHECK(seam_seen);

  // Phase 2 steers S toward the target with the harmonic recursion.
  const auto& log = xa.history();
  REQUIRE(!log.empty());
  for (const auto& b : log) REQUIRE(b.time >= 1.0);
  check_steering_recursion(log, x, payoff_bound(g));

  // Every phase-2 block is minimax-optimal for the offset direction.
  for (const auto& b : log) {
    double d = x[0] - b.s[0];
    if (std::fabs(d) < 1e-12) continue;
    const MixedAction& p = t.control1.actions[b.k];
    for (int j = 0; j < g.n2; ++j) {
      Vec u = mixed_payoff(g, p, MixedAction::pure(2, j));
      CHECK(d * u[0] >= std::fabs(d) - 1e-8);
    }
  }

  CHECK(std::fabs(t.gamma.back()[0] - 5.0) < 5.0);
  CHECK_THROWS_AS(XAttainer(g, {1.0, 2.0}, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(XAttainer(g, {5.0}, 0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(XAttainer(g, {5.0}, 1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("x attainer on the network game") {
  Game g = build_network_game();
  const Vec x = {1.0, 1.0};
  XAttainer xa(g, x, 0.5, 2.0, 16.0);
  CHECK(xa.phase_boundary() == 2.0);
  Stationary opp(MixedAction::pure(4, 0));
  Trajectory t = run_match(g, xa, opp, 2.5);
  check_steering_recursion(xa.history(), x, payoff_bound(g));
  CHECK(t.gamma.back().size() == 2);
}

TEST_CASE("weak attainer: approach, enter the ball, freeze") {
  const double eps = 0.07;
  Game g = example4_game();
  {
    WeakAttainerEx4 w(eps);
    Stationary opp(row(0));  // column 0
    Trajectory t = run_match(g, w, opp, 16.0);
    // Drift (0.07, 0.07) per unit time; first block time with
    // sqrt(2)*|0.0049k - 1| < 0.07 is k = 194, so gamma freezes there.
    Vec fin = t.gamma.back();
    CHECK(fin[0] == Catch::Approx(0.0049 * 194).margin(1e-9));
    CHECK(fin[1] == Catch::Approx(0.0049 * 194).margin(1e-9));
    double sup = 0.0;
    for (std::size_t i = 0; i < t.times.size(); ++i)
      if (t.times[i] >= 1.0 / eps)
        sup = std::max(sup, std::hypot(t.gamma[i][0] - 1.0, t.gamma[i][1] - 1.0));
    CHECK(sup < eps);
    CHECK(t.control1.actions.back() == MixedAction::pure(3, 2));
  }
  {
    WeakAttainerEx4 w(eps);
    Stationary opp(row(1));  // column 1: drift (1-eps, 1) per unit time
    Trajectory t = run_match(g, w, opp, 16.0);
    double d = std::hypot(t.gamma.back()[0] - 1.0, t.gamma.back()[1] - 1.0);
    CHECK(d < eps);
    CHECK(t.control1.actions.back() == MixedAction::pure(3, 2));
  }
  CHECK_THROWS_AS(WeakAttainerEx4(0.0), std::invalid_argument);
  CHECK_THROWS_AS(WeakAttainerEx4(1.0), std::invalid_argument);
}

TEST_CASE("weak attainer against always-first-column never leaves the drift mix") {
  // Against column 0 the drift is slow; before entering the ball the mix
  // (eps, 1-eps, 0) is played throughout, so entry cannot happen before
  // t = (1 - eps) / eps.
  const double eps = 0.1;
  Game g = example4_game();
  WeakAttainerEx4 w(eps);
  Stationary opp(row(0));
  Trajectory t = run_match(g, w, opp, 12.0);
  for (std::size_t i = 0; i + 1 < t.times.size(); ++i) {
    double mid = 0.5 * (t.times[i] + t.times[i + 1]);
    Vec gm = t.gamma_at(t.times[i]);
    bool inside = std::hypot(gm[0] - 1.0, gm[1] - 1.0) < eps;
    const MixedAction& a = t.control1.at(mid);
    if (!inside && t.times[i] < 1.0 / eps - 1.0) CHECK(a[2] == 0.0);
  }
}

TEST_CASE("switcher validation") {
  CHECK_THROWS_AS(Switcher(0.0, {row(0)}), std::invalid_argument);
  CHECK_THROWS_AS(Switcher(1.0, {}), std::invalid_argument);
}
