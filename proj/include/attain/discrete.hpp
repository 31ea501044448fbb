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

// Discrete-stage play.  The one asymmetry worth the flag: the adversary
// here is shown the row player's CURRENT mixed action before answering,
// which is strictly more information than any delay strategy ever gets.
// It exists to demonstrate that a stage-reactive opponent can keep the
// cumulative payoff bouncing across a fixed band forever, which is exactly
// what the continuous-time block structure is designed to rule out.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "attain/game.hpp"

namespace attain {

struct DiscreteContext {
  int stage = 0;                        // 0-based stage index
  const std::vector<MixedAction>& own;  // this player's past actions
  const std::vector<MixedAction>& opp;  // opponent's past actions
  const Vec& cumulative;                // sum of past stage payoffs
};

using DiscreteStrategy = std::function<MixedAction(const DiscreteContext&)>;

// Adversary signature: additionally sees the row player's current action.
using DiscreteAdversary = std::function<MixedAction(const DiscreteContext&, const MixedAction&)>;

struct DiscreteTrajectory {
  std::vector<MixedAction> p, q;  // one per stage
  std::vector<Vec> cumulative;    // cumulative[l] = payoff sum after l stages; [0] = 0
};

inline DiscreteTrajectory run_discrete(const Game& g, const DiscreteStrategy& s1,
                                       const DiscreteAdversary& s2, int n_stages) {
  if (n_stages < 0) throw std::invalid_argument("run_discrete: negative stage count");
  DiscreteTrajectory traj;
  traj.cumulative.push_back(Vec(g.m, 0.0));
  for (int l = 0; l < n_stages; ++l) {
    DiscreteContext c1{l, traj.p, traj.q, traj.cumulative.back()};
    MixedAction p = s1(c1);
    if (p.size() != g.n1) throw std::runtime_error("run_discrete: row action size mismatch");
    DiscreteContext c2{l, traj.q, traj.p, traj.cumulative.back()};
    MixedAction q = s2(c2, p);
    if (q.size() != g.n2) throw std::runtime_error("run_discrete: column action size mismatch");
    Vec u = mixed_payoff(g, p, q);
    Vec s = traj.cumulative.back();
    for (int d = 0; d < g.m; ++d) s[d] += u[d];
    traj.p.push_back(std::move(p));
    traj.q.push_back(std::move(q));
    traj.cumulative.push_back(std::move(s));
  }
  return traj;
}

// Column adversary for scalar two-column games: answers column 0 when the
// row player's current weight on row 0 is at least 1/2, else column 1.
inline DiscreteAdversary sign_counter_discrete() {
  return [](const DiscreteContext&, const MixedAction& p) {
    return MixedAction::pure(2, p[0] >= 0.5 ? 0 : 1);
  };
}

// Scripted row strategies used to exercise the sign counter: constant pure
// rows, the uniform mix, strict alternation, and a counter-steerer that
// plays row 0 when the (scalar) cumulative payoff is nonnegative.
inline std::vector<std::pair<std::string, DiscreteStrategy>> scripted_row_strategies(int n1) {
  std::vector<std::pair<std::string, DiscreteStrategy>> out;
  out.emplace_back("pure_first", [n1](const DiscreteContext&) { return MixedAction::pure(n1, 0); });
  out.emplace_back("pure_last",
                   [n1](const DiscreteContext&) { return MixedAction::pure(n1, n1 - 1); });
  out.emplace_back("uniform", [n1](const DiscreteContext&) { return MixedAction::uniform(n1); });
  out.emplace_back("alternating", [n1](const DiscreteContext& c) {
    return MixedAction::pure(n1, c.stage % 2 == 0 ? 0 : n1 - 1);
  });
  out.emplace_back("counter_steering", [n1](const DiscreteContext& c) {
    return MixedAction::pure(n1, c.cumulative[0] >= 0.0 ? 0 : n1 - 1);
  });
  return out;
}

}  // namespace attain
