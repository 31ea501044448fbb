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

// Command-line front end.  Exit codes: 0 success, 1 claim or run failure,
// 2 usage/input error, 3 a check came back Undecided where a decision was
// required.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "attain/checker.hpp"
#include "attain/claims.hpp"
#include "attain/discrete.hpp"
#include "attain/engine.hpp"
#include "attain/game_io.hpp"
#include "attain/scenarios.hpp"
#include "attain/strategy.hpp"

namespace {

using namespace attain;

constexpr int kOk = 0, kFail = 1, kUsage = 2, kUndecided = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// A <game> argument is a path to a game text file, or the name of a
// bundled scenario.
Game resolve_game(const std::string& spec) {
  std::ifstream in(spec);
  if (in.good()) {
    try {
      return parse_game(in);
    } catch (const ParseError& e) {
      throw UsageError(spec + ": " + e.what());  // what() carries "line N: ..."
    }
  }
  // Accept both the bundled scenario name and its conventional file name, so
  // "example1.game" works even when the file is not in the working directory.
  std::string stem = spec;
  if (stem.size() > 5 && stem.compare(stem.size() - 5, 5, ".game") == 0)
    stem.resize(stem.size() - 5);
  for (const Scenario& s : bundled_scenarios())
    if (s.name == spec || s.name == stem) return s.game;
  throw UsageError("cannot open game file or find bundled scenario '" + spec + "'");
}

// ---- strategy spec parsing: name(key=value, key=[v1,v2], ...) ----

struct StratSpec {
  std::string name;
  std::map<std::string, double> nums;
  std::map<std::string, std::vector<double>> vecs;

  double num(const std::string& key) const {
    auto it = nums.find(key);
    if (it == nums.end()) throw UsageError("strategy '" + name + "' needs parameter " + key);
    return it->second;
  }
  std::vector<double> vec(const std::string& key) const {
    auto it = vecs.find(key);
    if (it == vecs.end()) throw UsageError("strategy '" + name + "' needs parameter " + key);
    return it->second;
  }
};

StratSpec parse_strategy_spec(const std::string& text) {
  StratSpec out;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& why) -> std::runtime_error {
    return UsageError("bad strategy spec '" + text + "' at offset " + std::to_string(i) + ": " + why);
  };
  skip();
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
    out.name += text[i++];
  if (out.name.empty()) throw fail("expected strategy name");
  skip();
  if (i == text.size()) return out;
  if (text[i] != '(') throw fail("expected '('");
  ++i;
  auto number = [&]() -> double {
    skip();
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(text.substr(i), &used);
    } catch (const std::exception&) {
      throw fail("expected a number");
    }
    i += used;
    return v;
  };
  while (true) {
    skip();
    if (i < text.size() && text[i] == ')') break;
    std::string key;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      key += text[i++];
    if (key.empty()) throw fail("expected parameter name");
    skip();
    if (i >= text.size() || text[i] != '=') throw fail("expected '='");
    ++i;
    skip();
    if (i < text.size() && text[i] == '[') {
      ++i;
      std::vector<double> vals;
      while (true) {
        vals.push_back(number());
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      skip();
      if (i >= text.size() || text[i] != ']') throw fail("expected ']'");
      ++i;
      out.vecs[key] = std::move(vals);
    } else {
      out.nums[key] = number();
    }
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
  }
  if (i >= text.size() || text[i] != ')') throw fail("expected ')'");
  ++i;
  skip();
  if (i != text.size()) throw fail("trailing characters");
  return out;
}

MixedAction pure_of(int n, double idx) {
  int i = static_cast<int>(idx);
  if (i < 0 || i >= n) throw UsageError("action index " + std::to_string(i) + " out of range");
  return MixedAction::pure(n, i);
}

StrategyPtr build_strategy(const Game& g, const std::string& text, bool row_player) {
  StratSpec s = parse_strategy_spec(text);
  const int n = row_player ? g.n1 : g.n2;
  if (s.name == "stationary") {
    Vec q = s.vec("q");
    if (static_cast<int>(q.size()) != n)
      throw UsageError("stationary: q has " + std::to_string(q.size()) + " weights, need " +
                       std::to_string(n));
    return stationary(MixedAction(std::move(q)));
  }
  if (s.name == "pure") return stationary(pure_of(n, s.num("i")));
  if (s.name == "uniform") return stationary(MixedAction::uniform(n));
  if (s.name == "switcher") {
    std::vector<MixedAction> cycle;
    for (double v : s.vec("cycle")) cycle.push_back(pure_of(n, v));
    return switcher(s.num("period"), std::move(cycle));
  }
  if (s.name == "zero_attainer") {
    if (!row_player) throw UsageError("zero_attainer is a row-player strategy");
    return zero_attainer(g, s.num("eta"));
  }
  if (s.name == "x_attainer") {
    if (!row_player) throw UsageError("x_attainer is a row-player strategy");
    return x_attainer(g, s.vec("x"), s.num("delta"), s.num("T"), s.num("eps"));
  }
  if (s.name == "weak_attainer_ex4") {
    if (!row_player) throw UsageError("weak_attainer_ex4 is a row-player strategy");
    if (g.m != 2 || g.n1 != 3 || g.n2 != 2)
      throw UsageError("weak_attainer_ex4 is bound to the example4 game shape (m=2, 3x2)");
    return weak_attainer_ex4(s.num("eps"));
  }
  if (s.name == "locker") {
    if (row_player) throw UsageError("locker is a column-player strategy");
    if (g.n2 != 2) throw UsageError("locker needs a two-column game");
    return two_phase_locker(s.num("window"));
  }
  throw UsageError("unknown strategy '" + s.name + "'");
}

void attach_seed(nlohmann::json& j) {
  if (const char* seed = std::getenv("ATTAIN_SEED")) j["seed"] = std::string(seed);
}

int exit_for(const Verdict& v) {
  return v.status == Verdict::Status::Undecided ? kUndecided : kOk;
}

// ---- subcommand implementations ----

int cmd_value(const std::string& game_spec, const std::vector<double>& lambda) {
  Game g = resolve_game(game_spec);
  if (static_cast<int>(lambda.size()) != g.m)
    throw UsageError("--lambda has " + std::to_string(lambda.size()) + " entries, game has m=" +
                     std::to_string(g.m));
  std::cout << fmt(value_direction(g, Direction(lambda))) << "\n";
  return kOk;
}

int cmd_check_zero(const std::string& game_spec, bool strict, double h, bool as_json) {
  Game g = resolve_game(game_spec);
  Verdict v = check_zero(g, h, strict);
  if (as_json) {
    nlohmann::json j = to_json(v);
    attach_seed(j);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (strict ? "strict" : "weak") << " zero attainability: " << to_string(v.status)
              << " (margin " << fmt(v.margin) << ")\n";
    if (v.witness && v.witness->direction) {
      std::cout << "  witness direction:";
      for (double d : v.witness->direction->lambda) std::cout << " " << fmt(d);
      if (v.witness->value) std::cout << " (value " << fmt(*v.witness->value) << ")";
      std::cout << "\n";
    }
  }
  return exit_for(v);
}

int cmd_check_point(const std::string& game_spec, const std::vector<double>& x,
                    const std::vector<double>& schedule, double h, bool as_json) {
  Game g = resolve_game(game_spec);
  CheckerParams params;
  params.resolution = h;
  params.delta_schedule = schedule;
  AttainabilityReport rep = attainability_report(g, x, params);
  if (as_json) {
    nlohmann::json j = to_json(rep);
    attach_seed(j);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "attainability of target: " << to_string(rep.verdict.status) << " (margin "
              << fmt(rep.verdict.margin) << ")\n";
  }
  return exit_for(rep.verdict);
}

int cmd_check_all(const std::string& game_spec, double h, bool as_json) {
  Game g = resolve_game(game_spec);
  Verdict weak = check_zero(g, h, false);
  Verdict strict = check_zero(g, h, true);
  if (as_json) {
    nlohmann::json j;
    j["zero_attainable"] = to_json(weak);
    j["every_vector_attainable"] = to_json(strict);
    attach_seed(j);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "zero attainable:         " << to_string(weak.status) << "\n";
    std::cout << "every vector attainable: " << to_string(strict.status) << "\n";
  }
  return std::max(exit_for(weak), exit_for(strict));
}

int cmd_simulate(const std::string& game_spec, const std::string& p1, const std::string& p2,
                 double horizon, const std::string& csv_path, const std::vector<double>& target,
                 double from_time, int max_blocks, long max_points) {
  Game g = resolve_game(game_spec);
  StrategyPtr s1 = build_strategy(g, p1, true);
  StrategyPtr s2 = build_strategy(g, p2, false);
  MatchOptions opts;
  opts.max_blocks = max_blocks;
  opts.max_points = static_cast<std::size_t>(max_points);
  Trajectory traj = run_match(g, *s1, *s2, horizon, opts);
  std::optional<Vec> tgt;
  if (!target.empty()) {
    if (static_cast<int>(target.size()) != g.m) throw UsageError("--target dimension mismatch");
    tgt = target;
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw UsageError("cannot write CSV to " + csv_path);
    write_csv(out, traj);
  }
  nlohmann::json j = summary_json(traj, tgt, from_time);
  attach_seed(j);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_discrete(const std::string& game_spec, int stages, const std::string& p1,
                 const std::string& csv_path) {
  Game g = resolve_game(game_spec);
  if (g.n2 != 2) throw UsageError("discrete mode plays against the sign counter (two columns)");
  DiscreteStrategy s1;
  for (auto& [name, s] : scripted_row_strategies(g.n1))
    if (name == p1) s1 = s;
  if (!s1) {
    StratSpec spec = parse_strategy_spec(p1);
    if (spec.name == "stationary") {
      Vec q = spec.vec("q");
      if (static_cast<int>(q.size()) != g.n1) throw UsageError("stationary: weight count");
      MixedAction a(std::move(q));
      s1 = [a](const DiscreteContext&) { return a; };
    } else if (spec.name == "pure") {
      MixedAction a = pure_of(g.n1, spec.num("i"));
      s1 = [a](const DiscreteContext&) { return a; };
    } else {
      throw UsageError("unknown discrete strategy '" + p1 + "'");
    }
  }
  DiscreteTrajectory t = run_discrete(g, s1, sign_counter_discrete(), stages);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw UsageError("cannot write CSV to " + csv_path);
    out << "stage";
    for (int d = 1; d <= g.m; ++d) out << ",s_" << d;
    out << "\n";
    for (std::size_t l = 0; l < t.cumulative.size(); ++l) {
      out << l;
      for (double v : t.cumulative[l]) out << "," << fmt(v);
      out << "\n";
    }
  }
  nlohmann::json j;
  j["stages"] = stages;
  j["final_cumulative"] = t.cumulative.back();
  attach_seed(j);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_scenario_list() {
  for (const Scenario& s : bundled_scenarios()) {
    std::cout << s.name << " (" << s.game.m << "-dim payoffs, " << s.game.n1 << "x" << s.game.n2
              << ", " << s.claims.size() << " claims)\n";
    for (const Claim& c : s.claims) std::cout << "  " << c.id << ": " << c.description << "\n";
  }
  return kOk;
}

int cmd_scenario_run(const std::string& name, const std::string& only_claim) {
  const Scenario* s = find_scenario(name);
  if (!s) throw UsageError("unknown scenario '" + name + "' (try: scenario list)");
  bool all_pass = true;
  bool any_run = false;
  for (const Claim& c : s->claims) {
    if (!only_claim.empty() && c.id != only_claim) continue;
    any_run = true;
    ClaimResult r = c.run();
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << s->name << "/" << c.id << "\n";
    if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
  }
  if (!any_run) throw UsageError("scenario '" + name + "' has no claim '" + only_claim + "'");
  return all_pass ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attainability analysis for repeated games with vector payoffs"};
  app.require_subcommand(1);

  std::string game_spec, p1, p2, csv_path;

  // value
  auto* value = app.add_subcommand("value", "minimax value of the game scalarized in a direction");
  std::vector<double> lambda;
  value->add_option("game", game_spec, "game file or bundled scenario name")->required();
  value->add_option("--lambda", lambda, "direction (comma- or space-separated)")
      ->required()
      ->delimiter(',');

  // check-zero
  auto* cz = app.add_subcommand("check-zero", "is the zero vector attainable?");
  bool strict = false, as_json = false;
  double resolution = 0.01;
  cz->add_option("game", game_spec, "game file or bundled scenario name")->required();
  cz->add_flag("--strict", strict, "require strictly positive directional values");
  cz->add_option("--resolution", resolution, "direction-grid spacing for the certified sweep")
      ->check(CLI::PositiveNumber);
  cz->add_flag("--json", as_json, "emit the verdict as JSON");

  // check-point
  auto* cp = app.add_subcommand("check-point", "is a given payoff vector attainable?");
  std::vector<double> x, schedule;
  cp->add_option("game", game_spec, "game file or bundled scenario name")->required();
  cp->add_option("--x", x, "target vector")->required()->delimiter(',');
  cp->add_option("--delta-schedule", schedule, "decreasing shift rates to probe")->delimiter(',');
  cp->add_option("--resolution", resolution, "direction-grid spacing")->check(CLI::PositiveNumber);
  cp->add_flag("--json", as_json, "emit the full report as JSON");

  // check-all
  auto* ca = app.add_subcommand("check-all", "zero and every-vector attainability in one run");
  ca->add_option("game", game_spec, "game file or bundled scenario name")->required();
  ca->add_option("--resolution", resolution, "direction-grid spacing")->check(CLI::PositiveNumber);
  ca->add_flag("--json", as_json, "emit JSON");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a continuous-time match");
  double horizon = 0.0, from_time = 0.0;
  std::vector<double> target;
  int max_blocks = 100000;
  long max_points = 1000000;
  sim->add_option("game", game_spec, "game file or bundled scenario name")->required();
  sim->add_option("--p1", p1, "row strategy, e.g. zero_attainer(eta=0.1)")->required();
  sim->add_option("--p2", p2, "column strategy, e.g. stationary(q=[0.3,0.7])")->required();
  sim->add_option("--horizon", horizon, "simulation end time")->required()->check(CLI::PositiveNumber);
  sim->add_option("--csv", csv_path, "write the trajectory as CSV");
  sim->add_option("--target", target, "report sup-distance to this point")->delimiter(',');
  sim->add_option("--from", from_time, "start of the sup-distance window");
  sim->add_option("--max-blocks", max_blocks, "per-player block cap");
  sim->add_option("--max-points", max_points, "trajectory breakpoint cap");

  // discrete
  auto* disc = app.add_subcommand("discrete", "stage game against the sign counter");
  int stages = 0;
  disc->add_option("game", game_spec, "game file or bundled scenario name")->required();
  disc->add_option("--stages", stages, "number of stages")->required()->check(CLI::PositiveNumber);
  disc->add_option("--p1", p1, "scripted name (pure_first, pure_last, uniform, alternating, "
                               "counter_steering) or stationary(q=[...]) / pure(i=...)")
      ->required();
  disc->add_option("--csv", csv_path, "write per-stage cumulative sums as CSV");

  // scenario
  auto* sc = app.add_subcommand("scenario", "bundled scenarios and their documented claims");
  sc->require_subcommand(1);
  auto* sc_list = sc->add_subcommand("list", "list scenarios and claims");
  auto* sc_run = sc->add_subcommand("run", "run a scenario's claims");
  std::string scenario_name, only_claim;
  sc_run->add_option("name", scenario_name, "scenario name")->required();
  sc_run->add_option("--claim", only_claim, "run only this claim id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (value->parsed()) return cmd_value(game_spec, lambda);
    if (cz->parsed()) return cmd_check_zero(game_spec, strict, resolution, as_json);
    if (cp->parsed()) return cmd_check_point(game_spec, x, schedule, resolution, as_json);
    if (ca->parsed()) return cmd_check_all(game_spec, resolution, as_json);
    if (sim->parsed())
      return cmd_simulate(game_spec, p1, p2, horizon, csv_path, target, from_time, max_blocks,
                          max_points);
    if (disc->parsed()) return cmd_discrete(game_spec, stages, p1, csv_path);
    if (sc->parsed()) {
      if (sc_list->parsed()) return cmd_scenario_list();
      if (sc_run->parsed()) return cmd_scenario_run(scenario_name, only_claim);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
