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
#ifndef ASTROCAT_PROFILE_TABLE_HPP_
#define ASTROCAT_PROFILE_TABLE_HPP_

#include "astrocat/types.hpp"

namespace astrocat {

// Scale-mixture-of-Gaussians decompositions of the two extremal galaxy
// profiles, at unit half-light radius:
//   row 0: de Vaucouleurs, I(r) = exp(-7.67 (r^{1/4} - 1))
//   row 1: exponential,    I(r) = exp(-r)
// Each profile is normalized to unit mass on r in (0, 8] and approximated
// by K = 8 circular Gaussians with weights alpha and variances tau.
// The table was produced by weighted least squares (see tools/profile_fit);
// tests/test_model.cpp re-checks it against the radial profiles.
inline const ProfileTable& galaxy_profile_table() {
  static const ProfileTable table = [] {
    ProfileTable t;
    t.weights.resize(2, 8);
    t.scales.resize(2, 8);
    t.weights.row(0) << 1.116021362e-03, 6.884427483e-03, 2.8638651163e-02,
        8.473832392e-02, 1.76450590335e-01, 2.50062336954e-01,
        2.49659901742e-01, 2.02449747042e-01;
    t.scales.row(0) << 2.079995632260e-05, 2.208525328144e-04,
        1.830213099858e-03, 1.286500974123e-02, 8.028824756596e-02,
        4.499873188036e-01, 2.295523051056e+00, 1.319940597823e+01;
    t.weights.row(1) << 1.494393168111e-04, 1.766235781450e-03,
        1.085825828904e-02, 4.538063245030e-02, 1.415147995197e-01,
        3.147399330509e-01, 3.545883344824e-01, 1.310023671094e-01;
    t.scales.row(1) << 2.804677513626e-03, 1.983716673543e-02,
        8.035465448519e-02, 2.486190124051e-01, 6.572754037799e-01,
        1.603126753098e+00, 3.658085830615e+00, 8.156257493042e+00;
    // Renormalize rows exactly so downstream weight sums are 1 to
    // double precision.
    for (int i = 0; i < 2; ++i) t.weights.row(i) /= t.weights.row(i).sum();
    return t;
  }();
  return table;
}

}  // namespace astrocat

#endif  // ASTROCAT_PROFILE_TABLE_HPP_
