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

// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Randomized batteries (criteria 7 and 8) honor ATTAIN_SEED; everything
// else is deterministic.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "attain/claims.hpp"
#include "attain/matrix_solver.hpp"
#include "attain/strategy.hpp"

namespace {

using namespace attain;

// Pinned tolerances.
constexpr double kSlack = 1e-8;        // inequality slack (criteria 1, 2, 7, 8)
constexpr double kSweepOracle = 1e-3;  // certified min vs support oracle (6b)
constexpr double kAccelTol = 1e-10;    // acceleration equivariance (9)
constexpr double kLockerFloor = 0.01;  // measured asymptotic gap (4)
constexpr double kNetworkBudget = 60.0;  // seconds (6)

int failures = 0;

void report(int n, const std::string& name, const ClaimResult& r) {
  std::printf("[%s] criterion %d: %s\n", r.pass ? "PASS" : "FAIL", n, name.c_str());
  if (!r.detail.empty()) std::printf("         %s\n", r.detail.c_str());
  if (!r.pass) ++failures;
}

ClaimResult join(std::initializer_list<std::pair<const char*, ClaimResult>> parts) {
  ClaimResult out{true, ""};
  for (const auto& [tag, r] : parts) {
    out.pass = out.pass && r.pass;
    out.detail += std::string(r.pass ? "(pass) " : "(FAIL) ") + tag + ": " + r.detail + "\n         ";
  }
  if (!out.detail.empty()) out.detail.erase(out.detail.find_last_not_of(" \n") + 1);
  return out;
}

std::mt19937 seeded_rng() {
  unsigned long seed = 20260815ul;
  if (const char* env = std::getenv("ATTAIN_SEED")) seed = std::strtoul(env, nullptr, 10);
  return std::mt19937(static_cast<std::mt19937::result_type>(seed));
}

// --- criterion 7: solver certificates on random matrices ---

ClaimResult solver_battery() {
  std::mt19937 rng = seeded_rng();
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  double worst_gap = 0.0, worst_oracle = -1e300;
  int oracle_count = 0;
  for (int trial = 0; trial < 500; ++trial) {
    MatrixGame mg(size(rng), size(rng));
    for (double& e : mg.entries) e = entry(rng);
    GameSolution s = solve(mg);
    worst_gap = std::max(worst_gap, s.gap);
    if (mg.n1 <= 4 && mg.n2 <= 4) {
      const int grid_k = 200;
      double est = value_oracle(mg, grid_k);
      double allowed = mg.max_abs_entry() * 5.0 / grid_k;
      worst_oracle = std::max(worst_oracle, std::fabs(est - s.value) - allowed);
      ++oracle_count;
    }
  }
  bool pass = worst_gap <= kSlack && (oracle_count == 0 || worst_oracle <= 0.0);
  return {pass, "500 matrices, worst gap " + claims::fmt(worst_gap) + "; oracle checked on " +
                    std::to_string(oracle_count) + " small matrices, tightest margin " +
                    claims::fmt(-worst_oracle)};
}

// --- criterion 8: Lipschitz and translation identities ---

ClaimResult identity_battery() {
  std::mt19937 rng = seeded_rng();
  std::uniform_int_distribution<int> dim(1, 4), size(1, 6);
  std::uniform_real_distribution<double> entry(-10.0, 10.0), coord(-2.0, 2.0), shift(-5.0, 5.0);
  double worst_lip = -1e300, worst_shift = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng);
    Game g(m, size(rng), size(rng));
    for (Vec& v : g.payoffs)
      for (double& e : v) e = entry(rng);
    Vec lambda(m), mu(m), y(m);
    for (int d = 0; d < m; ++d) lambda[d] = coord(rng), mu[d] = coord(rng), y[d] = shift(rng);
    double vl = value_direction(g, Direction(lambda));
    double vm = value_direction(g, Direction(mu));
    Vec diff(m);
    for (int d = 0; d < m; ++d) diff[d] = lambda[d] - mu[d];
    worst_lip = std::max(worst_lip, std::fabs(vl - vm) - norm2(diff) * payoff_bound(g));
    double vt = value_direction(translate(g, y), Direction(lambda));
    worst_shift = std::max(worst_shift, std::fabs(vt - (vl - dot(lambda, y))));
  }
  bool pass = worst_lip <= kSlack && worst_shift <= kSlack;
  return {pass, "200 tuples, Lipschitz excess " + claims::fmt(worst_lip) + ", translation error " +
                    claims::fmt(worst_shift)};
}

// --- criterion 9: acceleration equivariance and interleave additivity ---

ClaimResult acceleration_equivariance() {
  Game g = example1_game();
  auto row = [](int i) { return MixedAction::pure(2, i); };
  ZeroAttainer base(g, 0.5);
  Switcher slow(0.3, {row(0), row(1)});
  Trajectory tb = run_match(g, base, slow, 2.0);
  Accelerate fast(zero_attainer(g, 0.5), 2.0);
  Switcher quick(0.15, {row(0), row(1)});
  Trajectory tf = run_match(g, fast, quick, 1.0);
  if (tb.times.size() != tf.times.size()) return {false, "breakpoint counts differ"};
  double worst = 0.0;
  for (std::size_t i = 0; i < tb.times.size(); ++i) {
    worst = std::max(worst, std::fabs(tf.times[i] - tb.times[i] / 2.0));
    worst = std::max(worst, std::fabs(tf.gamma[i][0] - tb.gamma[i][0] / 2.0));
  }
  return {worst <= kAccelTol, "max breakpoint deviation " + claims::fmt(worst)};
}

ClaimResult interleave_additivity() {
  // Dyadic construction so every partial sum is exactly representable:
  // windows of width 1/4 play the first row (payoff -2 against the uniform
  // column), the rest plays the second row (payoff +2); per unit of time the
  // two parts contribute exactly -1/2 and +3/2.
  Game g = example1_game();
  auto row = [](int i) { return MixedAction::pure(2, i); };
  Interleave mixed(stationary(row(0)), stationary(row(1)), 0.25);
  Stationary opp(MixedAction::uniform(2));
  Trajectory t = run_match(g, mixed, opp, 3.0);
  for (int l = 1; l <= 3; ++l) {
    double part1 = 0.0, part2 = 0.0;
    for (std::size_t i = 0; i + 1 < t.times.size() && t.times[i + 1] <= l; ++i) {
      double mid = 0.5 * (t.times[i] + t.times[i + 1]);
      double inc = t.gamma[i + 1][0] - t.gamma[i][0];
      (mid - std::floor(mid) < 0.25 ? part1 : part2) += inc;
    }
    double total = t.gamma_at(static_cast<double>(l))[0];
    if (part1 != -0.5 * l || part2 != 1.5 * l || part1 + part2 != total)
      return {false, "additivity broken at t=" + std::to_string(l) + ": " + claims::fmt(part1) +
                         " + " + claims::fmt(part2) + " vs " + claims::fmt(total)};
  }
  return {true, "window/remainder payoffs split exactly at t = 1, 2, 3"};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  using claims::fmt;

  // 1 + 2: the recursion is audited on exactly the runs of criterion 1.
  {
    ClaimResult bound{true, ""}, rec{true, ""};
    for (double eta : {0.05, 0.1, 0.2}) {
      const auto& runs = claims::steering_runs_cached(eta);
      ClaimResult b = claims::steering_bound(runs);
      bound.pass = bound.pass && b.pass;
      bound.detail += b.detail + "\n         ";
      ClaimResult r = claims::steering_recursion(runs);
      rec.pass = rec.pass && r.pass;
      rec.detail += r.detail + "; ";
    }
    bound.detail.erase(bound.detail.find_last_not_of(" \n") + 1);
    report(1, "steering keeps |gamma| within 18*eta + 3*width for t >= 2 (slack 1e-8)", bound);
    report(2, "block norms obey ||S_k||^2 <= ||S_{k-1}||^2 + (3*eta/k)^2, ||S_k|| <= 6*eta", rec);
  }

  report(3, "sign counter forces the cumulative sum out of [-1/2, 1/2] every stage (exact)",
         claims::discrete_sign_bounce(1000));

  report(4, "boundary game: both directional values exactly 0; locker holds |gamma| >= 0.01",
         join({{"exact-values", claims::boundary_values_exact()},
               {"locker", claims::locker_blocks_asymptotic()}}));

  report(5, "freeze row, weak attainment (eps 0.05/0.1), shift-rate decay, shifted refutations",
         join({{"a always-freeze", claims::always_b_freezes()},
               {"b weak-attainment eps=0.05", claims::weak_attainment(0.05)},
               {"b weak-attainment eps=0.1", claims::weak_attainment(0.1)},
               {"c shift-rate-decay", claims::shift_rate_decay()},
               {"d all-shifts-refuted", claims::b4_all_deltas_fail()}}));

  {
    auto t0 = clock::now();
    ClaimResult r = join({{"a table-formula", claims::network_table_matches_formula()},
                          {"b strict-sweep-vs-oracle", claims::network_strict_sweep()},
                          {"c three-targets", claims::network_every_target()}});
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    r.pass = r.pass && secs < kNetworkBudget;
    r.detail += "\n         runtime " + fmt(secs) + " s (budget " + fmt(kNetworkBudget) + ")";
    report(6, "network game: formula table, certified sweep within 1e-3 of oracle, 3 targets", r);
  }

  report(7, "duality gap <= 1e-8 on 500 random matrices; grid oracle within U*5/k", solver_battery());
  report(8, "|v_l - v_m| <= ||l-m||*U + 1e-8 and v(G-y) = v(G) - <l,y> +- 1e-8", identity_battery());

  report(9, "verdict cone closure; acceleration equivariance 1e-10; interleave additivity exact",
         join({{"cone", claims::network_cone_closure()},
               {"accelerate", acceleration_equivariance()},
               {"interleave", interleave_additivity()}}));

  std::printf("%d/9 criteria pass\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
