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

// Unit-sphere covering grids.  The construction guarantees
//     cover_radius <= resolution / 2,
// i.e. every unit vector is within resolution/2 (Euclidean) of a grid point,
// which is what the Lipschitz certificates in the checker consume.
//
//   m = 1   the two signs, cover radius 0.
//   m >= 2  grids on the faces of the cube [-1,1]^m pushed onto the sphere.
//           A face grid of spacing s covers the face within s*sqrt(m-1)/2,
//           and radial normalization from the cube surface (where every point
//           has norm >= 1) does not expand distances, so s = h/sqrt(m-1)
//           gives the h/2 bound.  Face corners are kept, so every diagonal
//           direction (+-1, ..., +-1)/sqrt(m) is sampled exactly; planar
//           minima of support-function differences often sit there.

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "attain/game.hpp"

namespace attain {

struct SphereGrid {
  int m = 0;
  double resolution = 0.0;    // requested max spacing h
  double cover_radius = 0.0;  // certified covering radius (<= h/2)
  std::vector<Vec> points;    // unit vectors

  int size() const { return static_cast<int>(points.size()); }
};

inline SphereGrid make_sphere_grid(int m, double h) {
  if (m <= 0) throw std::invalid_argument("make_sphere_grid: dimension must be positive");
  if (h <= 0.0) throw std::invalid_argument("make_sphere_grid: resolution must be positive");
  SphereGrid grid;
  grid.m = m;
  grid.resolution = h;
  if (m == 1) {
    grid.points = {Vec{1.0}, Vec{-1.0}};
    grid.cover_radius = 0.0;
    return grid;
  }
  double root = std::sqrt(static_cast<double>(m - 1));
  int steps = static_cast<int>(std::ceil(2.0 * root / h));  // face spacing 2/steps
  grid.cover_radius = root / steps;
  std::set<Vec> seen;
  std::vector<double> ticks(steps + 1);
  for (int t = 0; t <= steps; ++t) ticks[t] = -1.0 + 2.0 * t / steps;
  Vec point(m);
  for (int axis = 0; axis < m; ++axis)
    for (double face : {-1.0, 1.0}) {
      std::vector<int> idx(m - 1, 0);
      while (true) {
        point[axis] = face;
        for (int d = 0, k = 0; d < m; ++d)
          if (d != axis) point[d] = ticks[idx[k++]];
        double n = norm2(point);
        Vec unit(point);
        for (double& v : unit) v /= n;
        if (seen.insert(unit).second) grid.points.push_back(unit);
        int d = m - 2;
        while (d >= 0 && idx[d] == steps) idx[d--] = 0;
        if (d < 0) break;
        ++idx[d];
      }
    }
  return grid;
}

}  // namespace attain
