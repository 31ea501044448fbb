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

// The bundled scenario games.
//
//   example1  m=1, 2x2: either player can force the sign of the payoff rate.
//   example2  m=1, 2x2: boundary game, v_lambda = 0 for both directions;
//             zero is attainable but cannot be locked in asymptotically.
//   example4  m=2, 3x2: zero attainable; (1,1) only weakly attainable.
//   network   m=2, 8x4: flow-routing game, payoff = F*a1 - a2 with
//             F = [[1,-1,0],[0,1,1]], a1 in {+5,-5}^3, a2 the demand pairs.

#include <stdexcept>
#include <string>

#include "attain/game.hpp"

namespace attain {

inline Game example1_game() {
  Game g(1, 2, 2);
  g.at(0, 0) = {-3.0};
  g.at(0, 1) = {-1.0};
  g.at(1, 0) = {1.0};
  g.at(1, 1) = {3.0};
  g.labels1 = {"U", "B"};
  g.labels2 = {"L", "R"};
  return g;
}

inline Game example2_game() {
  Game g(1, 2, 2);
  g.at(0, 0) = {1.0};
  g.at(0, 1) = {0.0};
  g.at(1, 0) = {0.0};
  g.at(1, 1) = {-1.0};
  g.labels1 = {"U", "B"};
  g.labels2 = {"L", "R"};
  return g;
}

inline Game example4_game() {
  Game g(2, 3, 2);
  g.at(0, 0) = {1.0, 1.0};
  g.at(0, 1) = {0.0, 1.0};
  g.at(1, 0) = {0.0, 0.0};
  g.at(1, 1) = {1.0, 1.0};
  g.at(2, 0) = {0.0, 0.0};
  g.at(2, 1) = {0.0, 0.0};
  g.labels1 = {"U", "M", "B"};
  g.labels2 = {"L", "R"};
  return g;
}

namespace detail {

// Hand-derived reference payoffs for the network game, row-major over the
// action orders below.  One transcription slip in the source table was
// corrected to match the generating formula, which is authoritative.
constexpr double kNetworkReference[8][4][2] = {
    {{3, 13}, {3, 8}, {-2, 13}, {-2, 8}},
    {{3, 3}, {3, -2}, {-2, 3}, {-2, -2}},
    {{13, 3}, {13, -2}, {8, 3}, {8, -2}},
    {{13, -7}, {13, -12}, {8, -7}, {8, -12}},
    {{-7, 13}, {-7, 8}, {-12, 13}, {-12, 8}},
    {{-7, 3}, {-7, -2}, {-12, 3}, {-12, -2}},
    {{3, 3}, {3, -2}, {-2, 3}, {-2, -2}},
    {{3, -7}, {3, -12}, {-2, -7}, {-2, -12}},
};

}  // namespace detail

// Flow-routing game: Player 1 routes +/-5 units on three links, Player 2
// picks a demand pair; the payoff vector is the net excess F*a1 - a2.  The
// generated entries are verified against the reference table; a mismatch
// means the builder itself is broken, so it aborts.
inline Game build_network_game() {
  const double flows[8][3] = {{5, 5, 5},    {5, 5, -5},   {5, -5, 5},   {5, -5, -5},
                              {-5, 5, 5},   {-5, 5, -5},  {-5, -5, 5},  {-5, -5, -5}};
  const double demands[4][2] = {{-3, -3}, {-3, 2}, {2, -3}, {2, 2}};
  const double f[2][3] = {{1, -1, 0}, {0, 1, 1}};
  Game g(2, 8, 4);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 4; ++j) {
      Vec u(2, 0.0);
      for (int d = 0; d < 2; ++d) {
        for (int k = 0; k < 3; ++k) u[d] += f[d][k] * flows[i][k];
        u[d] -= demands[j][d];
        if (u[d] != detail::kNetworkReference[i][j][d])
          throw std::logic_error("build_network_game: entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") disagrees with the reference table");
      }
      g.at(i, j) = std::move(u);
    }
  }
  auto tuple3 = [](const double* a) {
    auto n = [](double v) { return std::to_string(static_cast<int>(v)); };
    return "(" + n(a[0]) + "," + n(a[1]) + "," + n(a[2]) + ")";
  };
  for (int i = 0; i < 8; ++i) g.labels1.push_back(tuple3(flows[i]));
  for (int j = 0; j < 4; ++j)
    g.labels2.push_back("(" + std::to_string(static_cast<int>(demands[j][0])) + "," +
                        std::to_string(static_cast<int>(demands[j][1])) + ")");
  return g;
}

inline Game scenario_game(const std::string& name) {
  if (name == "example1") return example1_game();
  if (name == "example2") return example2_game();
  if (name == "example4") return example4_game();
  if (name == "network") return build_network_game();
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace attain
