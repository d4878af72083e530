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
#ifndef ASTROCAT_SLICE_HPP_
#define ASTROCAT_SLICE_HPP_

#include <cmath>
#include <random>

#include "astrocat/common.hpp"

namespace astrocat {

/// One univariate slice-sampling update (step-out then shrinkage) leaving
/// exp(logpdf) invariant. `scale` is the initial bracket width; the
/// procedure adapts to the local slice automatically.
template <typename LogPdf>
double slice_sample(LogPdf&& logpdf, double x0, double scale, Rng& rng,
                    int max_stepout = 64) {
  const double fx0 = logpdf(x0);
  if (!std::isfinite(fx0)) throw ModelError("slice_sample: non-finite density at start");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double level = fx0 + std::log(unit(rng));

  double left = x0 - scale * unit(rng);
  double right = left + scale;
  for (int i = 0; i < max_stepout && logpdf(left) > level; ++i) left -= scale;
  for (int i = 0; i < max_stepout && logpdf(right) > level; ++i) right += scale;

  for (int i = 0; i < 1000; ++i) {
    const double x1 = left + (right - left) * unit(rng);
    if (logpdf(x1) > level) return x1;
    if (x1 < x0)
      left = x1;
    else
      right = x1;
    if (right - left < 1e-300) break;
  }
  return x0;
}

}  // namespace astrocat

#endif  // ASTROCAT_SLICE_HPP_
