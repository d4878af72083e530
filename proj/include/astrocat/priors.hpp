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
#ifndef ASTROCAT_PRIORS_HPP_
#define ASTROCAT_PRIORS_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "astrocat/types.hpp"

namespace astrocat {

// Source-type index used throughout: 0 = galaxy, 1 = star (a_s = 1 marks a
// star).
inline int type_index(bool is_star) { return is_star ? 1 : 0; }

struct LogNormalParams {
  double log_mean = 0.0;  // mean of log x
  double log_var = 1.0;   // variance of log x
};

struct BetaParams {
  double alpha = 1.0;
  double beta = 1.0;
};

/// Mixture-of-Gaussians prior over the (B-1)-dimensional color vector.
struct GmmPrior {
  Eigen::VectorXd weights;
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;

  int component_count() const { return static_cast<int>(weights.size()); }
  int dim() const { return means.empty() ? 0 : static_cast<int>(means[0].size()); }

  double logpdf(const Eigen::VectorXd& x) const {
    std::vector<double> terms(weights.size());
    for (int d = 0; d < weights.size(); ++d) {
      const Eigen::LLT<Eigen::MatrixXd> llt(covs[d]);
      const Eigen::VectorXd delta = x - means[d];
      const Eigen::VectorXd half = llt.matrixL().solve(delta);
      double logdet = 0.0;
      for (int i = 0; i < x.size(); ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
      terms[d] = std::log(weights[d]) - 0.5 * (x.size() * std::log(2.0 * kPi) + logdet +
                                               half.squaredNorm());
    }
    return log_sum_exp(terms);
  }

  Eigen::VectorXd sample(Rng& rng) const {
    std::discrete_distribution<int> pick(weights.data(), weights.data() + weights.size());
    const int d = pick(rng);
    std::normal_distribution<double> unit;
    Eigen::VectorXd z(means[d].size());
    for (int i = 0; i < z.size(); ++i) z[i] = unit(rng);
    const Eigen::LLT<Eigen::MatrixXd> llt(covs[d]);
    return means[d] + llt.matrixL() * z;
  }
};

/// Rectangular patch of sky over which source directions are uniform.
struct SkyWindow {
  Vec2 origin_deg = Vec2::Zero();  // lower-left (lon, lat)
  double width_deg = 0.05;
  double height_deg = 0.05;

  bool contains(const Vec2& dir) const {
    return dir[0] >= origin_deg[0] && dir[0] <= origin_deg[0] + width_deg &&
           dir[1] >= origin_deg[1] && dir[1] <= origin_deg[1] + height_deg;
  }
  double log_area() const { return std::log(width_deg * height_deg); }
};

/// The prior's hyperparameters. Arrays are indexed by source type
/// (0 = galaxy, 1 = star).
struct PriorParams {
  double star_prob = 0.5;
  LogNormalParams flux[2];
  GmmPrior color_gmm[2];
  LogNormalParams radius;
  BetaParams profile;
  BetaParams axis;
  SkyWindow window;

  int bands() const { return color_gmm[0].dim() + 1; }

  bool valid(double tol = 1e-10) const {
    if (!(star_prob >= 0.0 && star_prob <= 1.0)) return false;
    for (int i = 0; i < 2; ++i) {
      if (!(flux[i].log_var > 0.0)) return false;
      if (std::abs(color_gmm[i].weights.sum() - 1.0) > tol) return false;
      for (const auto& cov : color_gmm[i].covs) {
        Eigen::LLT<Eigen::MatrixXd> llt(cov);
        if (llt.info() != Eigen::Success) return false;
      }
    }
    return radius.log_var > 0.0 && profile.alpha > 0.0 && profile.beta > 0.0 &&
           axis.alpha > 0.0 && axis.beta > 0.0;
  }
};

inline double log_normal_logpdf(double x, const LogNormalParams& p) {
  if (!(x > 0.0)) return kNegInf;
  const double lx = std::log(x);
  return -lx - 0.5 * std::log(2.0 * kPi * p.log_var) -
         square(lx - p.log_mean) / (2.0 * p.log_var);
}

inline double beta_logpdf(double x, const BetaParams& p) {
  if (!(x > 0.0 && x < 1.0)) return kNegInf;
  const double logb = std::lgamma(p.alpha) + std::lgamma(p.beta) - std::lgamma(p.alpha + p.beta);
  return (p.alpha - 1.0) * std::log(x) + (p.beta - 1.0) * std::log1p(-x) - logb;
}

inline double sample_beta(const BetaParams& p, Rng& rng) {
  std::gamma_distribution<double> ga(p.alpha, 1.0), gb(p.beta, 1.0);
  const double a = ga(rng);
  const double b = gb(rng);
  return a / (a + b);
}

inline double sample_log_normal(const LogNormalParams& p, Rng& rng) {
  std::normal_distribution<double> n(p.log_mean, std::sqrt(p.log_var));
  return std::exp(n(rng));
}

/// Log prior density of the shape vector.
inline double log_prior_shape(const GalaxyShape& shape, const PriorParams& prior) {
  double lp = beta_logpdf(shape.profile_weight, prior.profile);
  lp += -std::log(180.0);
  if (!(shape.angle_deg >= 0.0 && shape.angle_deg < 180.0)) return kNegInf;
  lp += log_normal_logpdf(shape.half_light_radius, prior.radius);
  lp += beta_logpdf(shape.axis_ratio, prior.axis);
  return lp;
}

/// Log density of z_s given its type (the Bernoulli factor excluded).
inline double log_prior_conditional(const SourceParams& source, const PriorParams& prior) {
  if (!prior.window.contains(source.direction)) return kNegInf;
  double lp = -prior.window.log_area();
  const int i = type_index(source.is_star);
  lp += log_normal_logpdf(source.ref_flux, prior.flux[i]);
  lp += prior.color_gmm[i].logpdf(source.colors);
  if (!source.is_star) lp += log_prior_shape(source.shape, prior);
  return lp;
}

/// Joint log prior density including the type indicator.
inline double log_prior(const SourceParams& source, const PriorParams& prior) {
  const double pa = source.is_star ? prior.star_prob : 1.0 - prior.star_prob;
  if (!(pa > 0.0)) return kNegInf;
  return std::log(pa) + log_prior_conditional(source, prior);
}

/// Draws one source from the prior hierarchy.
inline SourceParams sample_source(const PriorParams& prior, Rng& rng) {
  SourceParams s;
  std::bernoulli_distribution type(prior.star_prob);
  s.is_star = type(rng);
  std::uniform_real_distribution<double> ux(0.0, prior.window.width_deg);
  std::uniform_real_distribution<double> uy(0.0, prior.window.height_deg);
  s.direction = prior.window.origin_deg + Vec2(ux(rng), uy(rng));
  const int i = type_index(s.is_star);
  s.ref_flux = sample_log_normal(prior.flux[i], rng);
  s.colors = prior.color_gmm[i].sample(rng);
  if (!s.is_star) {
    s.shape.profile_weight = sample_beta(prior.profile, rng);
    std::uniform_real_distribution<double> ua(0.0, 180.0);
    s.shape.angle_deg = ua(rng);
    s.shape.half_light_radius = sample_log_normal(prior.radius, rng);
    s.shape.axis_ratio = sample_beta(prior.axis, rng);
  }
  return s;
}

/// Sensible desk-scale default prior over 5 bands: stars are brighter and
/// tighter in color space; galaxies are extended with half-light radii of
/// a couple of arcseconds.
inline PriorParams default_prior(int bands = 5) {
  PriorParams p;
  p.star_prob = 0.5;
  p.flux[1] = {1.6, 1.0};   // stars: median ~5 nmgy
  p.flux[0] = {1.2, 0.7};   // galaxies: median ~3.3 nmgy
  const int d = bands - 1;
  auto make_gmm = [&](std::vector<std::vector<double>> mus, double spread) {
    GmmPrior g;
    const int n = static_cast<int>(mus.size());
    g.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (const auto& mu : mus) {
      Eigen::VectorXd m = Eigen::VectorXd::Zero(d);
      for (int k = 0; k < d && k < static_cast<int>(mu.size()); ++k) m[k] = mu[k];
      g.means.push_back(m);
      g.covs.push_back(square(spread) * Eigen::MatrixXd::Identity(d, d));
    }
    return g;
  };
  p.color_gmm[1] = make_gmm({{1.2, 0.7, 0.3, 0.15}, {0.5, 0.25, 0.1, 0.05}}, 0.15);
  p.color_gmm[0] = make_gmm({{1.0, 0.8, 0.45, 0.3}, {1.6, 1.1, 0.6, 0.4}}, 0.3);
  p.radius = {0.6, 0.25};  // median ~1.8 arcsec
  p.profile = {0.8, 0.8};
  p.axis = {2.0, 2.0};
  return p;
}

}  // namespace astrocat

#endif  // ASTROCAT_PRIORS_HPP_
