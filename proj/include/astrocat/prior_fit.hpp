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
#ifndef ASTROCAT_PRIOR_FIT_HPP_
#define ASTROCAT_PRIOR_FIT_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "astrocat/priors.hpp"

namespace astrocat {

inline double digamma(double x) {
  double acc = 0.0;
  while (x < 6.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  return acc + std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 / 252));
}

inline double trigamma(double x) {
  double acc = 0.0;
  while (x < 6.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x, inv2 = inv * inv;
  return acc + inv * (1.0 + inv * (0.5 + inv * (1.0 / 6 - inv2 * (1.0 / 30 - inv2 / 42))));
}

inline LogNormalParams fit_log_normal(const std::vector<double>& xs) {
  if (xs.size() < 2) throw FitError("fit_log_normal: need at least 2 samples");
  double m = 0.0;
  for (double x : xs) m += std::log(x);
  m /= xs.size();
  double v = 0.0;
  for (double x : xs) v += square(std::log(x) - m);
  v /= xs.size();
  return {m, std::max(v, 1e-12)};
}

/// Beta maximum likelihood: moment-matched start, then damped coordinate
/// Newton updates on the two shape parameters.
inline BetaParams fit_beta(const std::vector<double>& xs) {
  if (xs.size() < 2) throw FitError("fit_beta: need at least 2 samples");
  const double n = static_cast<double>(xs.size());
  double mean = 0.0, slx = 0.0, sl1x = 0.0;
  for (double x : xs) {
    mean += x;
    slx += std::log(x);
    sl1x += std::log1p(-x);
  }
  mean /= n;
  double var = 0.0;
  for (double x : xs) var += square(x - mean);
  var = std::max(var / n, 1e-10);
  double common = mean * (1.0 - mean) / var - 1.0;
  common = std::max(common, 1e-3);
  double a = std::max(mean * common, 1e-3);
  double b = std::max((1.0 - mean) * common, 1e-3);
  for (int iter = 0; iter < 500; ++iter) {
    const double ga = n * (digamma(a + b) - digamma(a)) + slx;
    const double ha = n * (trigamma(a + b) - trigamma(a));
    double step_a = (ha < 0.0) ? -ga / ha : 0.0;
    while (a + step_a <= 0.0) step_a *= 0.5;
    a += step_a;
    const double gb = n * (digamma(a + b) - digamma(b)) + sl1x;
    const double hb = n * (trigamma(a + b) - trigamma(b));
    double step_b = (hb < 0.0) ? -gb / hb : 0.0;
    while (b + step_b <= 0.0) step_b *= 0.5;
    b += step_b;
    if (std::abs(step_a) + std::abs(step_b) < 1e-12) break;
  }
  return {a, b};
}

namespace detail {

// k-means++ seeding over the rows of `data`.
inline std::vector<int> kmeanspp_centers(const Eigen::MatrixXd& data, int k, Rng& rng) {
  const int n = static_cast<int>(data.rows());
  std::vector<int> centers;
  std::uniform_int_distribution<int> first(0, n - 1);
  centers.push_back(first(rng));
  Eigen::VectorXd d2 = (data.rowwise() - data.row(centers[0])).rowwise().squaredNorm();
  while (static_cast<int>(centers.size()) < k) {
    std::discrete_distribution<int> pick(d2.data(), d2.data() + n);
    const int c = pick(rng);
    centers.push_back(c);
    d2 = d2.cwiseMin((data.rowwise() - data.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

}  // namespace detail

struct GmmFitResult {
  GmmPrior gmm;
  std::vector<double> loglik_path;  // per EM iteration, total data log-likelihood
};

/// Full-covariance EM from a k-means++ start. Throws FitError if an EM
/// iteration decreases the log-likelihood (beyond round-off).
inline GmmFitResult fit_gmm_once(const Eigen::MatrixXd& data, int k, Rng& rng,
                                 int max_iter = 500, double rel_tol = 1e-8) {
  const int n = static_cast<int>(data.rows());
  const int d = static_cast<int>(data.cols());
  GmmPrior g;
  g.weights = Eigen::VectorXd::Constant(k, 1.0 / k);
  const auto seeds = detail::kmeanspp_centers(data, k, rng);
  double total_var = 0.0;
  const Eigen::RowVectorXd grand_mean = data.colwise().mean();
  total_var = (data.rowwise() - grand_mean).rowwise().squaredNorm().mean() / d;
  for (int c = 0; c < k; ++c) {
    g.means.push_back(data.row(seeds[c]).transpose());
    g.covs.push_back(std::max(total_var, 1e-6) * Eigen::MatrixXd::Identity(d, d));
  }

  GmmFitResult result;
  Eigen::MatrixXd resp(n, k);
  for (int iter = 0; iter < max_iter; ++iter) {
    // E step
    double ll = 0.0;
    for (int r = 0; r < n; ++r) {
      std::vector<double> terms(k);
      for (int c = 0; c < k; ++c) {
        const Eigen::LLT<Eigen::MatrixXd> llt(g.covs[c]);
        const Eigen::VectorXd half = llt.matrixL().solve(data.row(r).transpose() - g.means[c]);
        double logdet = 0.0;
        for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
        terms[c] = std::log(g.weights[c]) -
                   0.5 * (d * std::log(2.0 * kPi) + logdet + half.squaredNorm());
      }
      const double norm = log_sum_exp(terms);
      ll += norm;
      for (int c = 0; c < k; ++c) resp(r, c) = std::exp(terms[c] - norm);
    }
    if (!result.loglik_path.empty() &&
        ll < result.loglik_path.back() - 1e-8 * (1.0 + std::abs(ll)))
      throw FitError("fit_gmm: EM log-likelihood decreased");
    const bool converged =
        !result.loglik_path.empty() &&
        std::abs(ll - result.loglik_path.back()) < rel_tol * (1.0 + std::abs(ll));
    result.loglik_path.push_back(ll);
    if (converged) break;
    // M step
    for (int c = 0; c < k; ++c) {
      const double nc = resp.col(c).sum();
      g.weights[c] = nc / n;
      Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
      for (int r = 0; r < n; ++r) mu += resp(r, c) * data.row(r).transpose();
      mu /= std::max(nc, 1e-300);
      Eigen::MatrixXd cov = 1e-9 * Eigen::MatrixXd::Identity(d, d);
      for (int r = 0; r < n; ++r) {
        const Eigen::VectorXd delta = data.row(r).transpose() - mu;
        cov += resp(r, c) * delta * delta.transpose();
      }
      cov /= std::max(nc, 1e-300);
      g.means[c] = mu;
      g.covs[c] = cov;
    }
  }
  result.gmm = g;
  return result;
}

/// Best of `restarts` EM runs (k-means++ seeding is random).
inline GmmFitResult fit_gmm(const Eigen::MatrixXd& data, int k, Rng& rng,
                            int restarts = 5, int max_iter = 500, double rel_tol = 1e-8) {
  if (data.rows() < k) throw FitError("fit_gmm: fewer samples than components");
  GmmFitResult best;
  for (int r = 0; r < restarts; ++r) {
    GmmFitResult cur = fit_gmm_once(data, k, rng, max_iter, rel_tol);
    if (best.loglik_path.empty() || cur.loglik_path.back() > best.loglik_path.back())
      best = std::move(cur);
  }
  return best;
}

/// Empirical-Bayes fit of every hyperparameter from a catalog of sources.
inline PriorParams fit_priors(const std::vector<SourceParams>& catalog, int gmm_components,
                              std::uint64_t seed = 20260809) {
  PriorParams prior;
  std::vector<const SourceParams*> by_type[2];
  for (const auto& s : catalog) by_type[type_index(s.is_star)].push_back(&s);
  for (int i = 0; i < 2; ++i)
    if (static_cast<int>(by_type[i].size()) < 10 * gmm_components)
      throw FitError("fit_priors: insufficient sources of one type");
  prior.star_prob = static_cast<double>(by_type[1].size()) / catalog.size();

  Vec2 lo = catalog[0].direction, hi = catalog[0].direction;
  for (const auto& s : catalog) {
    lo = lo.cwiseMin(s.direction);
    hi = hi.cwiseMax(s.direction);
  }
  prior.window.origin_deg = lo;
  prior.window.width_deg = std::max(hi[0] - lo[0], 1e-6);
  prior.window.height_deg = std::max(hi[1] - lo[1], 1e-6);

  Rng rng = make_rng_stream(seed, 17);
  for (int i = 0; i < 2; ++i) {
    std::vector<double> fluxes;
    for (const auto* s : by_type[i]) fluxes.push_back(s->ref_flux);
    prior.flux[i] = fit_log_normal(fluxes);
    const int d = static_cast<int>(by_type[i][0]->colors.size());
    Eigen::MatrixXd colors(by_type[i].size(), d);
    for (std::size_t r = 0; r < by_type[i].size(); ++r)
      colors.row(r) = by_type[i][r]->colors.transpose();
    prior.color_gmm[i] = fit_gmm(colors, gmm_components, rng).gmm;
  }

  std::vector<double> radii, profiles, axes;
  for (const auto* s : by_type[0]) {
    radii.push_back(s->shape.half_light_radius);
    profiles.push_back(s->shape.profile_weight);
    axes.push_back(s->shape.axis_ratio);
  }
  prior.radius = fit_log_normal(radii);
  prior.profile = fit_beta(profiles);
  prior.axis = fit_beta(axes);
  return prior;
}

}  // namespace astrocat

#endif  // ASTROCAT_PRIOR_FIT_HPP_
