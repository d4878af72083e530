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

// Audits and regenerates the galaxy profile table: least-squares fit of K
// circular Gaussians to each extremal radial profile, normalized to unit
// mass on r in (0, 8]. The optimizer starts from the checked-in table, so
// the printed drift measures how far the shipped constants sit from the
// locally optimal fit.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <vector>

#include "astrocat/profile_table.hpp"

namespace {

using astrocat::kPi;

constexpr int kComponents = 8;
constexpr double kMaxRadius = 8.0;

double dev_profile(double r) { return std::exp(-7.67 * (std::pow(r, 0.25) - 1.0)); }
double exp_profile(double r) { return std::exp(-r); }

double radial_mass(double (*profile)(double)) {
  const int n = 400000;
  const double h = kMaxRadius / n;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * h;
    acc += profile(r) * 2 * kPi * r * h;
  }
  return acc;
}

struct Fit {
  Eigen::VectorXd alpha;  // weights
  Eigen::VectorXd tau;    // variances
};

// Mass-weighted + relative residuals on a log-spaced radius grid, solved by
// Levenberg-Marquardt over log-parameters.
Fit fit_profile(double (*profile)(double), const Eigen::VectorXd& alpha0,
                const Eigen::VectorXd& tau0) {
  const double mass = radial_mass(profile);
  const int grid_n = 1200;
  Eigen::VectorXd r(grid_n), target(grid_n), w_abs(grid_n);
  const double lo = std::log(3e-3), hi = std::log(kMaxRadius);
  for (int i = 0; i < grid_n; ++i) {
    r[i] = std::exp(lo + (hi - lo) * i / (grid_n - 1));
    target[i] = profile(r[i]) / mass;
  }
  for (int i = 0; i < grid_n; ++i) {
    const double dr = (i + 1 < grid_n ? r[i + 1] : r[i]) - (i > 0 ? r[i - 1] : 0.0);
    w_abs[i] = std::sqrt(kPi * r[i] * std::abs(dr));
  }
  const double w_rel = 0.03;
  const int m = 2 * grid_n + 1;  // residuals: absolute, relative, unit-mass tie
  const int p = 2 * kComponents;

  Eigen::VectorXd theta(p);
  for (int j = 0; j < kComponents; ++j) {
    theta[j] = std::log(alpha0[j]);
    theta[kComponents + j] = std::log(tau0[j]);
  }

  auto residuals = [&](const Eigen::VectorXd& th, Eigen::VectorXd& res,
                       Eigen::MatrixXd* jac) {
    res.resize(m);
    if (jac) jac->setZero(m, p);
    double asum = 0.0;
    for (int j = 0; j < kComponents; ++j) asum += std::exp(th[j]);
    for (int i = 0; i < grid_n; ++i) {
      double model = 0.0;
      for (int j = 0; j < kComponents; ++j) {
        const double a = std::exp(th[j]),
                     tau = std::exp(th[kComponents + j]);
        const double g = a * std::exp(-r[i] * r[i] / (2 * tau)) / (2 * kPi * tau);
        model += g;
        if (jac) {
          (*jac)(i, j) = w_abs[i] * g;
          (*jac)(i, kComponents + j) = w_abs[i] * g * (r[i] * r[i] / (2 * tau) - 1.0);
          (*jac)(grid_n + i, j) = w_rel * g / target[i];
          (*jac)(grid_n + i, kComponents + j) =
              w_rel * g * (r[i] * r[i] / (2 * tau) - 1.0) / target[i];
        }
      }
      res[i] = w_abs[i] * (model - target[i]);
      res[grid_n + i] = w_rel * (model - target[i]) / target[i];
    }
    res[2 * grid_n] = 100.0 * (asum - 1.0);
    if (jac)
      for (int j = 0; j < kComponents; ++j) (*jac)(2 * grid_n, j) = 100.0 * std::exp(th[j]);
  };

  Eigen::VectorXd res;
  Eigen::MatrixXd jac;
  residuals(theta, res, &jac);
  double cost = res.squaredNorm(), mu = 1e-3;
  for (int iter = 0; iter < 600; ++iter) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * res;
    const Eigen::VectorXd step =
        (jtj + mu * Eigen::MatrixXd(jtj.diagonal().asDiagonal())).ldlt().solve(-jtr);
    Eigen::VectorXd trial = theta + step;
    Eigen::VectorXd trial_res;
    residuals(trial, trial_res, nullptr);
    if (trial_res.squaredNorm() < cost) {
      theta = trial;
      mu = std::max(mu * 0.3, 1e-12);
      residuals(theta, res, &jac);
      const double new_cost = res.squaredNorm();
      if (cost - new_cost < 1e-14 * cost) {
        cost = new_cost;
        break;
      }
      cost = new_cost;
    } else {
      mu *= 3.0;
      if (mu > 1e12) break;
    }
  }

  Fit fit;
  fit.alpha.resize(kComponents);
  fit.tau.resize(kComponents);
  for (int j = 0; j < kComponents; ++j) {
    fit.alpha[j] = std::exp(theta[j]);
    fit.tau[j] = std::exp(theta[kComponents + j]);
  }
  // Sort by scale and renormalize the weights exactly.
  std::vector<int> order(kComponents);
  for (int j = 0; j < kComponents; ++j) order[j] = j;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return fit.tau[a] < fit.tau[b]; });
  Eigen::VectorXd a2(kComponents), t2(kComponents);
  for (int j = 0; j < kComponents; ++j) {
    a2[j] = fit.alpha[order[j]];
    t2[j] = fit.tau[order[j]];
  }
  fit.alpha = a2 / a2.sum();
  fit.tau = t2;
  return fit;
}

double max_rel_err(const Fit& fit, double (*profile)(double)) {
  const double mass = radial_mass(profile);
  double worst = 0.0;
  for (double r = 0.05; r <= 6.0; r += 0.01) {
    double mix = 0.0;
    for (int j = 0; j < kComponents; ++j)
      mix += fit.alpha[j] * std::exp(-r * r / (2 * fit.tau[j])) / (2 * kPi * fit.tau[j]);
    worst = std::max(worst, std::abs(mix - profile(r) / mass) / (profile(r) / mass));
  }
  return worst;
}

}  // namespace

int main() {
  const char* names[2] = {"de Vaucouleurs", "exponential"};
  double (*profiles[2])(double) = {dev_profile, exp_profile};
  const auto& shipped = astrocat::galaxy_profile_table();
  for (int i = 0; i < 2; ++i) {
    const Fit fit =
        fit_profile(profiles[i], shipped.weights.row(i).transpose(),
                    shipped.scales.row(i).transpose());
    std::printf("%s profile (max relative error on r in [0.05, 6]: %.4f)\n", names[i],
                max_rel_err(fit, profiles[i]));
    std::printf("  alpha:");
    for (int j = 0; j < kComponents; ++j) std::printf(" %.9e", fit.alpha[j]);
    std::printf("\n  tau:  ");
    for (int j = 0; j < kComponents; ++j) std::printf(" %.9e", fit.tau[j]);
    double drift = 0.0;
    for (int j = 0; j < kComponents; ++j) {
      drift = std::max(drift, std::abs(fit.alpha[j] - shipped.weights(i, j)));
      drift = std::max(drift,
                       std::abs(fit.tau[j] - shipped.scales(i, j)) / shipped.scales(i, j));
    }
    std::printf("\n  max drift vs shipped table: %.3e\n", drift);
  }
  return 0;
}
