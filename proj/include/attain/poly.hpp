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

// Small-degree polynomial root finding (Durand-Kerner).  Good enough for the
// determinant polynomials of sub-bases (degree <= min(n1, n2)); callers must
// bracket or re-verify roots, which the sign sweep in the checker does anyway
// by evaluating between candidates.

#include <cmath>
#include <complex>
#include <vector>

namespace attain {

using Complex = std::complex<double>;

// Coefficients in ascending order: c[0] + c[1] t + ... + c[k] t^k.
inline Complex poly_eval(const std::vector<double>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline std::vector<Complex> poly_roots(std::vector<double> c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {Complex(-c[0] / c[1], 0.0)};
  if (deg == 2) {
    double a = c[2], b = c[1], d = b * b - 4.0 * a * c[0];
    if (d >= 0.0) {
      double s = std::sqrt(d);
      // Stable pairing: avoid cancellation in the smaller root.
      double r1 = (b >= 0.0) ? (-b - s) / (2.0 * a) : (-b + s) / (2.0 * a);
      double r0 = (r1 != 0.0) ? c[0] / (a * r1) : -b / (2.0 * a);
      return {Complex(r0, 0.0), Complex(r1, 0.0)};
    }
    double re = -b / (2.0 * a), im = std::sqrt(-d) / (2.0 * a);
    return {Complex(re, im), Complex(re, -im)};
  }
  for (double& x : c) x /= c.back();
  std::vector<Complex> z(deg);
  Complex seed(0.4, 0.9);
  z[0] = seed;
  for (int j = 1; j < deg; ++j) z[j] = z[j - 1] * seed;
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int j = 0; j < deg; ++j) {
      Complex denom(1.0, 0.0);
      for (int k = 0; k < deg; ++k)
        if (k != j) denom *= z[j] - z[k];
      if (denom == Complex(0.0, 0.0)) {
        z[j] += Complex(1e-8, 1e-8);
        worst = 1.0;
        continue;
      }
      Complex step = poly_eval(c, z[j]) / denom;
      z[j] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// Real parts of all roots whose imaginary part is below im_tol, ascending.
inline std::vector<double> real_roots(const std::vector<double>& c, double im_tol = 1e-7) {
  std::vector<double> out;
  for (const Complex& z : poly_roots(c))
    if (std::fabs(z.imag()) <= im_tol * std::max(1.0, std::fabs(z.real())))
      out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace attain
