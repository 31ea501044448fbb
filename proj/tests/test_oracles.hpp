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

// Test-only geometric oracle for the network game, independent of the LP
// path.  The payoff separates into (routing image) - (demand), so
//   v_lambda = h_image(lambda) - h_box(lambda)
// with h the support function: the image polygon is the hexagon
// {|x| <= 10, |y| <= 10, |x+y| <= 10} and the demand set the box [-3,2]^2.

#include <algorithm>
#include <vector>

#include "attain/game.hpp"

namespace attain {
namespace oracle {

inline double support(const std::vector<Vec>& vertices, const Vec& lambda) {
  double best = -1e300;
  for (const Vec& v : vertices) best = std::max(best, dot(lambda, v));
  return best;
}

inline double network_value(const Vec& lambda) {
  static const std::vector<Vec> image = {{10, 0}, {0, 10}, {-10, 10},
                                         {-10, 0}, {0, -10}, {10, -10}};
  static const std::vector<Vec> box = {{-3, -3}, {-3, 2}, {2, -3}, {2, 2}};
  return support(image, lambda) - support(box, lambda);
}

}  // namespace oracle
}  // namespace attain
