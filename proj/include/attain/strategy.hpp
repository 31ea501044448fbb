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

// Delay-strategy constructions.
//
// The centerpiece is ZeroAttainer: blocks on the harmonic schedule
// tau^k = eta * (1 + 1/2 + ... + 1/k), each block playing an optimal mixed
// action of the scalar game <-S_k, G> where S_k is the cumulative payoff at
// the block start.  When every direction has nonnegative game value this
// steers the cumulative payoff to 0 with error O(eta).  On top of it:
// translation (XAttainer drives the cumulative payoff to an arbitrary
// point and parks there), time acceleration, and interleaving of two
// strategies on alternating time windows.  The harmonic schedule means the
// number of blocks to reach time t grows like exp(t/eta); runs that would
// exceed the block cap fail loudly rather than decimate.

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "attain/engine.hpp"
#include "attain/game.hpp"
#include "attain/matrix_solver.hpp"
#include "attain/scenarios.hpp"

namespace attain {

using StrategyPtr = std::shared_ptr<DelayStrategy>;

// One entry of the block log kept by steering strategies: the cumulative
// payoff S at the moment block k was chosen.
struct BlockState {
  int k = 0;
  double time = 0.0;
  Vec s;
};

namespace detail {

// Harmonic prefix cache: h(k) = sum_{l=1..k} 1/l, grown on demand.
class HarmonicTable {
 public:
  double operator()(int k) const {
    if (k < 0) throw std::invalid_argument("harmonic index negative");
    while (static_cast<int>(h_.size()) <= k) h_.push_back(h_.back() + 1.0 / h_.size());
    return h_[k];
  }

 private:
  mutable std::vector<double> h_{0.0};
};

}  // namespace detail

// Plays, on each harmonic block, an optimal action of the game scalarized
// against the current cumulative payoff.
class ZeroAttainer : public DelayStrategy {
 public:
  ZeroAttainer(Game g, double eta) : g_(std::move(g)), eta_(eta) {
    g_.validate();
    if (!(eta > 0.0)) throw std::invalid_argument("ZeroAttainer: eta must be positive");
  }

  double update_time(int k) const override { return eta_ * harmonic_(k); }

  MixedAction block_action(int k, const ControlView& opponent, const ControlView& own) override {
    double now = update_time(k);
    if (s_.empty()) s_.assign(g_.m, 0.0);
    // Dilated views can fall short of `now` by an ulp; integrate what both
    // views cover and resume from there next block.
    double upto = std::min({now, own.end_time(), opponent.end_time()});
    Vec inc = integrate_payoff(g_, own, opponent, integrated_to_, upto);
    for (int d = 0; d < g_.m; ++d) s_[d] += inc[d];
    integrated_to_ = std::max(integrated_to_, upto);
    log_.push_back({k, now, s_});
    Vec lambda(g_.m);
    for (int d = 0; d < g_.m; ++d) lambda[d] = -s_[d];
    return solve(scalarize(g_, lambda)).p_star;
  }

  const std::vector<BlockState>& history() const { return log_; }
  double eta() const { return eta_; }

  // Approximate number of blocks needed to reach time t (harmonic growth).
  static double blocks_needed(double eta, double t) {
    return std::exp(t / eta - 0.57721566490153286);
  }

 private:
  Game g_;
  double eta_;
  detail::HarmonicTable harmonic_;
  Vec s_;
  double integrated_to_ = 0.0;
  std::vector<BlockState> log_;
};

// Drives the cumulative payoff to x and keeps it there.  Phase 1, on
// [0, 1/delta], is the zero-steering strategy for the translated game
// g - delta*x, accelerated by delta*T; its cumulative payoff in g then
// sits near x at time 1/delta.  Phase 2 restarts harmonic blocks steering
// the offset S - x to zero, which parks the trajectory at x.  With x = 0
// this degenerates to plain zero-steering.
class XAttainer : public DelayStrategy {
 public:
  XAttainer(Game g, Vec x, double delta, double horizon_T, double eps)
      : g_(std::move(g)), x_(std::move(x)), delta_(delta), big_t_(horizon_T), eps_(eps) {
    g_.validate();
    if (static_cast<int>(x_.size()) != g_.m) throw std::invalid_argument("XAttainer: x dimension");
    if (!(eps > 0.0)) throw std::invalid_argument("XAttainer: eps must be positive");
    if (is_zero(x_)) {
      degenerate_ = std::make_unique<ZeroAttainer>(g_, eta_for(g_, eps_));
      return;
    }
    if (!(delta > 0.0) || !(horizon_T > 0.0))
      throw std::invalid_argument("XAttainer: delta and T must be positive");
    Vec dx(g_.m);
    for (int d = 0; d < g_.m; ++d) dx[d] = delta_ * x_[d];
    Game shifted = translate(g_, dx);
    eta1_ = eta_for(shifted, eps_);
    phase1_ = std::make_unique<ZeroAttainer>(shifted, eta1_);
    eta2_ = eta_for(g_, eps_);
  }

  double update_time(int k) const override {
    if (degenerate_) return degenerate_->update_time(k);
    while (static_cast<int>(times_.size()) <= k) grow_times_();
    return times_[k];
  }

  MixedAction block_action(int k, const ControlView& opponent, const ControlView& own) override {
    if (degenerate_) return degenerate_->block_action(k, opponent, own);
    update_time(k);  // ensure phase bookkeeping covers k
    double now = times_[k];
    if (phase1_blocks_ < 0 || k < phase1_blocks_) {
      // Run the translated-game attainer on its own (accelerated) clock.
      double beta = delta_ * big_t_;
      dil_opp_ = dilate_(opponent, beta);
      dil_own_ = dilate_(own, beta);
      return phase1_->block_action(k, ControlView(dil_opp_, opponent.end_time() * beta),
                                   ControlView(dil_own_, own.end_time() * beta));
    }
    if (s_.empty()) s_.assign(g_.m, 0.0);
    double upto = std::min({now, own.end_time(), opponent.end_time()});
    Vec inc = integrate_payoff(g_, own, opponent, integrated_to_, upto);
    for (int d = 0; d < g_.m; ++d) s_[d] += inc[d];
    integrated_to_ = std::max(integrated_to_, upto);
    log_.push_back({k, now, s_});
    Vec lambda(g_.m);
    for (int d = 0; d < g_.m; ++d) lambda[d] = x_[d] - s_[d];
    return solve(scalarize(g_, lambda)).p_star;
  }

  // Offset block log (phase 2 only): s holds the raw cumulative payoff.
  const std::vector<BlockState>& history() const { return log_; }
  double phase_boundary() const { return degenerate_ ? 0.0 : 1.0 / delta_; }

  static double eta_for(const Game& g, double eps) {
    return eps / (4.0 * std::max(payoff_bound(g), 1e-9));
  }

 private:
  void grow_times_() const {
    int k = static_cast<int>(times_.size());
    if (phase1_blocks_ < 0) {
      double t = phase1_->update_time(k) / (delta_ * big_t_);
      if (t < 1.0 / delta_) {
        times_.push_back(t);
        return;
      }
      phase1_blocks_ = k;
    }
    int j = k - phase1_blocks_;
    times_.push_back(1.0 / delta_ + eta2_ * harmonic_(j));
  }

  static PiecewiseControl dilate_(const ControlView& v, double beta) {
    PiecewiseControl c;
    for (int i = 0; i < v.segments(); ++i) c.push(v.seg_start(i) * beta, v.action(i));
    if (c.breakpoints.empty()) c.push(0.0, MixedAction::pure(1, 0));
    return c;
  }

  Game g_;
  Vec x_;
  double delta_ = 0.0, big_t_ = 0.0, eps_ = 0.0;
  double eta1_ = 0.0, eta2_ = 0.0;
  std::unique_ptr<ZeroAttainer> degenerate_;
  std::unique_ptr<ZeroAttainer> phase1_;
  mutable std::vector<double> times_;
  mutable int phase1_blocks_ = -1;
  detail::HarmonicTable harmonic_;
  PiecewiseControl dil_opp_, dil_own_;
  Vec s_;
  double integrated_to_ = 0.0;
  std::vector<BlockState> log_;
};

// Runs `inner` at beta times its speed: updating times shrink by beta and
// the opponent's control is shown on the dilated clock.  The cumulative
// payoff satisfies gamma^t(accelerated) = (1/beta) * gamma^{beta t}(inner)
// against the correspondingly dilated opponent.
class Accelerate : public DelayStrategy {
 public:
  Accelerate(StrategyPtr inner, double beta) : inner_(std::move(inner)), beta_(beta) {
    if (!inner_) throw std::invalid_argument("Accelerate: null inner strategy");
    if (!(beta > 0.0)) throw std::invalid_argument("Accelerate: beta must be positive");
  }

  double update_time(int k) const override { return inner_->update_time(k) / beta_; }

  MixedAction block_action(int k, const ControlView& opponent, const ControlView& own) override {
    dil_opp_ = dilate_(opponent, beta_);
    dil_own_ = dilate_(own, beta_);
    return inner_->block_action(k, ControlView(dil_opp_, opponent.end_time() * beta_),
                                ControlView(dil_own_, own.end_time() * beta_));
  }

 private:
  static PiecewiseControl dilate_(const ControlView& v, double beta) {
    PiecewiseControl c;
    for (int i = 0; i < v.segments(); ++i) c.push(v.seg_start(i) * beta, v.action(i));
    if (c.breakpoints.empty()) c.push(0.0, MixedAction::pure(1, 0));
    return c;
  }

  StrategyPtr inner_;
  double beta_;
  PiecewiseControl dil_opp_, dil_own_;
};

// Plays sx on T1 = union of [l, l+beta) and sy on T2 = union of [l+beta,
// l+1), each on its own compressed clock (time advances for sx only inside
// T1 windows, likewise for sy).  Each inner strategy sees the opponent's
// control compressed to its own windows, so the two runs are genuinely
// independent replays.
class Interleave : public DelayStrategy {
 public:
  Interleave(StrategyPtr sx, StrategyPtr sy, double beta)
      : sx_(std::move(sx)), sy_(std::move(sy)), beta_(beta) {
    if (!sx_ || !sy_) throw std::invalid_argument("Interleave: null inner strategy");
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("Interleave: beta in (0,1)");
  }

  double update_time(int k) const override {
    while (static_cast<int>(events_.size()) <= k) grow_events_();
    return events_[k].t;
  }

  MixedAction block_action(int k, const ControlView& opponent, const ControlView& own) override {
    update_time(k + 1);  // need the block end for window classification
    const Event& e = events_[k];
    double mid = 0.5 * (e.t + events_[k + 1].t);
    bool first_part = (mid - std::floor(mid)) < beta_;
    if (first_part) {
      if (e.x_index >= 0) {
        double end = sx_->update_time(e.x_index);
        PiecewiseControl copp = compress_(opponent, true);
        PiecewiseControl cown = compress_(own, true);
        ax_ = sx_->block_action(e.x_index, ControlView(copp, end), ControlView(cown, end));
      }
      return ax_;
    }
    if (e.y_index >= 0) {
      double end = sy_->update_time(e.y_index);
      PiecewiseControl copp = compress_(opponent, false);
      PiecewiseControl cown = compress_(own, false);
      ay_ = sy_->block_action(e.y_index, ControlView(copp, end), ControlView(cown, end));
    }
    return ay_;
  }

 private:
  struct Event {
    double t = 0.0;
    int x_index = -1;  // inner sx block starting here, if any
    int y_index = -1;
  };

  // Real time of inner time s on the sx clock (windows [l, l+beta)).
  double lift_x_(double s) const {
    if (!std::isfinite(s)) return s;
    double l = std::floor(s / beta_);
    if ((l + 1.0) * beta_ <= s) l += 1.0;  // guard fp at window boundaries
    return l + (s - l * beta_);
  }

  // Real time of inner time s on the sy clock (windows [l+beta, l+1)).
  double lift_y_(double s) const {
    if (!std::isfinite(s)) return s;
    double w = 1.0 - beta_;
    double l = std::floor(s / w);
    if ((l + 1.0) * w <= s) l += 1.0;
    return l + beta_ + (s - l * w);
  }

  void grow_events_() const {
    double tx = lift_x_(sx_->update_time(next_x_));
    double ty = lift_y_(sy_->update_time(next_y_));
    double tb = next_boundary_;
    double t = std::min({tx, ty, tb});
    Event e;
    e.t = t;
    if (tx == t) e.x_index = next_x_++;
    if (ty == t) e.y_index = next_y_++;
    if (tb == t) {
      // advance boundary stream: l, l+beta, l+1, ...
      next_boundary_ = boundary_is_mid_ ? std::floor(tb) + 1.0 : tb + beta_;
      boundary_is_mid_ = !boundary_is_mid_;
    }
    if (!events_.empty() && !(t > events_.back().t))
      throw std::logic_error("Interleave: event times not increasing");
    events_.push_back(e);
  }

  // Opponent (or own) control restricted to this part's windows,
  // concatenated onto the compressed clock by accumulating piece lengths.
  PiecewiseControl compress_(const ControlView& v, bool first_part) const {
    PiecewiseControl c;
    double clock = 0.0;
    double width = first_part ? beta_ : 1.0 - beta_;
    double offset = first_part ? 0.0 : beta_;
    for (double l = 0.0;; l += 1.0) {
      double w0 = l + offset, w1 = w0 + width;
      if (w0 >= v.end_time()) break;
      for (int i = 0; i < v.segments(); ++i) {
        double a = std::max(v.seg_start(i), w0);
        double b = std::min(std::min(v.seg_end(i), w1), v.end_time());
        if (b <= a) continue;
        if (c.breakpoints.empty() || !(c.actions.back() == v.action(i))) c.push(clock, v.action(i));
        clock += b - a;
      }
    }
    if (c.breakpoints.empty()) c.push(0.0, MixedAction::pure(1, 0));
    return c;
  }

  StrategyPtr sx_, sy_;
  double beta_;
  mutable std::vector<Event> events_;
  mutable int next_x_ = 0, next_y_ = 0;
  mutable double next_boundary_ = 0.0;
  mutable bool boundary_is_mid_ = false;  // next boundary is an l+beta point
  MixedAction ax_ = MixedAction::pure(1, 0), ay_ = MixedAction::pure(1, 0);
};

// One infinite block.
class Stationary : public DelayStrategy {
 public:
  explicit Stationary(MixedAction q) : q_(std::move(q)) {}
  double update_time(int k) const override {
    return k == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  MixedAction block_action(int, const ControlView&, const ControlView&) override { return q_; }

 private:
  MixedAction q_;
};

// Cycles through fixed actions on an arithmetic schedule.
class Switcher : public DelayStrategy {
 public:
  Switcher(double period, std::vector<MixedAction> cycle)
      : period_(period), cycle_(std::move(cycle)) {
    if (!(period > 0.0)) throw std::invalid_argument("Switcher: period must be positive");
    if (cycle_.empty()) throw std::invalid_argument("Switcher: empty cycle");
  }
  double update_time(int k) const override { return period_ * k; }
  MixedAction block_action(int k, const ControlView&, const ControlView&) override {
    return cycle_[static_cast<std::size_t>(k) % cycle_.size()];
  }

 private:
  double period_;
  std::vector<MixedAction> cycle_;
};

// Column player for two-column games: watches the opponent on [0, window),
// then locks column 0 forever if the opponent put any mass on row 0 there,
// else locks column 1.
class TwoPhaseLocker : public DelayStrategy {
 public:
  explicit TwoPhaseLocker(double window) : window_(window) {
    if (!(window > 0.0)) throw std::invalid_argument("TwoPhaseLocker: window must be positive");
  }
  double update_time(int k) const override {
    if (k == 0) return 0.0;
    if (k == 1) return window_;
    return std::numeric_limits<double>::infinity();
  }
  MixedAction block_action(int k, const ControlView& opponent, const ControlView&) override {
    if (k == 0) return MixedAction::pure(2, 0);
    double mass = 0.0;
    for (int i = 0; i < opponent.segments(); ++i)
      mass += (opponent.seg_end(i) - opponent.seg_start(i)) * opponent.action(i)[0];
    return MixedAction::pure(2, mass > 0.0 ? 0 : 1);
  }

 private:
  double window_;
};

// Row player bound to the 3x2 game of the bundled example4 scenario.
// Blocks of fixed width eps; inside each block plays the third row (which
// freezes the cumulative payoff) whenever gamma is already inside the open
// eps-ball around (1,1), otherwise the mix eps*row0 + (1-eps)*row1 that
// drifts toward (1,1).
class WeakAttainerEx4 : public DelayStrategy {
 public:
  explicit WeakAttainerEx4(double eps) : g_(example4_game()), eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("WeakAttainerEx4: eps in (0,1)");
  }
  double update_time(int k) const override { return eps_ * k; }
  MixedAction block_action(int k, const ControlView& opponent, const ControlView& own) override {
    double now = update_time(k);
    if (s_.empty()) s_.assign(2, 0.0);
    double upto = std::min({now, own.end_time(), opponent.end_time()});
    Vec inc = integrate_payoff(g_, own, opponent, integrated_to_, upto);
    for (int d = 0; d < 2; ++d) s_[d] += inc[d];
    integrated_to_ = std::max(integrated_to_, upto);
    // Closed ball with a rounding guard: the grid kε can meet the ball
    // boundary exactly (a stationary second column puts gamma at distance
    // exactly eps at t = 1, the only grid time inside the ball's passage
    // window), so the boundary case must count as inside despite integration
    // noise of a few ulp.
    Vec diff = {s_[0] - 1.0, s_[1] - 1.0};
    if (norm2(diff) <= eps_ * (1.0 + 1e-12)) return MixedAction::pure(3, 2);
    return MixedAction({eps_, 1.0 - eps_, 0.0});
  }

 private:
  Game g_;
  double eps_;
  Vec s_;
  double integrated_to_ = 0.0;
};

inline StrategyPtr zero_attainer(Game g, double eta) {
  return std::make_shared<ZeroAttainer>(std::move(g), eta);
}
inline StrategyPtr x_attainer(Game g, Vec x, double delta, double horizon_T, double eps) {
  return std::make_shared<XAttainer>(std::move(g), std::move(x), delta, horizon_T, eps);
}
inline StrategyPtr accelerate(StrategyPtr inner, double beta) {
  return std::make_shared<Accelerate>(std::move(inner), beta);
}
inline StrategyPtr interleave(StrategyPtr sx, StrategyPtr sy, double beta) {
  return std::make_shared<Interleave>(std::move(sx), std::move(sy), beta);
}
inline StrategyPtr stationary(MixedAction q) { return std::make_shared<Stationary>(std::move(q)); }
inline StrategyPtr switcher(double period, std::vector<MixedAction> cycle) {
  return std::make_shared<Switcher>(period, std::move(cycle));
}
inline StrategyPtr two_phase_locker(double window) {
  return std::make_shared<TwoPhaseLocker>(window);
}
inline StrategyPtr weak_attainer_ex4(double eps) { return std::make_shared<WeakAttainerEx4>(eps); }

}  // namespace attain
