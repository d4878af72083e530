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
#ifndef ASTROCAT_ESS_HPP_
#define ASTROCAT_ESS_HPP_

#include <cmath>
#include <vector>

#include "astrocat/common.hpp"

namespace astrocat {

/// Effective sample size of a correlated scalar sequence via the
/// initial-positive-sequence estimator: autocorrelations are summed while
/// consecutive even/odd pairs stay positive. Result is clipped to
/// (0, length].
inline double effective_sample_size(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 10) throw ModelError("effective_sample_size: need at least 10 samples");
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += square(x - mean);
  var /= n;
  if (!(var > 1e-24 * (1.0 + square(mean))))
    throw ModelError("effective_sample_size: constant sequence");

  auto rho = [&](int lag) {
    double acc = 0.0;
    for (int i = 0; i + lag < n; ++i) acc += (xs[i] - mean) * (xs[i + lag] - mean);
    return acc / (n * var);
  };

  double sum = 0.0;
  for (int k = 1; k + 1 < n; k += 2) {
    const double pair = rho(k) + rho(k + 1);
    if (pair <= 0.0) break;
    sum += pair;
  }
  const double ess = n / (1.0 + 2.0 * sum);
  return std::min(std::max(ess, 1e-12), static_cast<double>(n));
}

}  // namespace astrocat

#endif  // ASTROCAT_ESS_HPP_
