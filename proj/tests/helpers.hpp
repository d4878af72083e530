/*
 * Copyright 2026 the astrocat authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef ASTROCAT_TESTS_HELPERS_HPP_
#define ASTROCAT_TESTS_HELPERS_HPP_

#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "astrocat/types.hpp"

// Test-only oracles, kept independent of the library's analytic paths.
namespace oracle {

// Nodes/weights for n-point Gauss-Legendre on [-1, 1], computed by Newton
// iteration on the Legendre recurrence.
inline void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(astrocat::kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Tensor-product 2-D quadrature of f over [ax,bx] x [ay,by].
inline double integrate2d(const std::function<double(double, double)>& f, double ax,
                          double bx, double ay, double by, int n = 80) {
  std::vector<double> xs, ws;
  gauss_legendre(n, xs, ws);
  const double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      acc += ws[i] * ws[j] * f(cx + hx * xs[i], cy + hy * xs[j]);
  return acc * hx * hy;
}

inline double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
}

inline double variance(const std::vector<double>& xs) {
  const double m = mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return acc / (xs.size() - 1);
}

inline double stddev(const std::vector<double>& xs) { return std::sqrt(variance(xs)); }

// Standard error of the mean.
inline double sem(const std::vector<double>& xs) {
  return stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
}

// Central finite-difference gradient of a scalar function.
inline Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& x, double h = 1e-5) {
  Eigen::VectorXd g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

}  // namespace oracle

#endif  // ASTROCAT_TESTS_HELPERS_HPP_
