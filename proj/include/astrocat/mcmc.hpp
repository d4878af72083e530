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
#ifndef ASTROCAT_MCMC_HPP_
#define ASTROCAT_MCMC_HPP_

#include <array>
#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "astrocat/ess.hpp"
#include "astrocat/priors.hpp"
#include "astrocat/region.hpp"
#include "astrocat/slice.hpp"

namespace astrocat {

struct AisConfig {
  int temperatures = 200;  // T
  int chains = 25;         // N'
  int post_steps = 25;     // B'
  std::vector<double> schedule;   // gamma_0..gamma_T; (t/T)^2 when empty
  double dir_halfwidth_px = 4.0;  // direction prior box around the region center
  std::uint64_t seed = 1;

  std::vector<double> make_schedule() const {
    if (!schedule.empty()) {
      if (static_cast<int>(schedule.size()) != temperatures + 1 || schedule.front() != 0.0 ||
          schedule.back() != 1.0)
        throw ModelError("AisConfig: schedule endpoints must be exactly 0 and 1");
      for (std::size_t t = 1; t < schedule.size(); ++t)
        if (!(schedule[t] > schedule[t - 1]))
          throw ModelError("AisConfig: schedule must be strictly increasing");
      return schedule;
    }
    std::vector<double> s(temperatures + 1);
    for (int t = 0; t <= temperatures; ++t)
      s[t] = square(static_cast<double>(t) / temperatures);
    s.front() = 0.0;
    s.back() = 1.0;
    return s;
  }

  bool valid() const {
    return temperatures >= 1 && chains >= 1 && post_steps >= 0 && dir_halfwidth_px > 0;
  }
};

/// Maps one source's parameters to an unconstrained vector: raw direction
/// and colors, log flux, and for galaxies logit profile, raw angle
/// (folded into [0,180) on unpacking), log radius, logit axis.
struct UnconstrainedMap {
  bool is_star = true;
  int bands = 5;

  int dim() const { return 3 + (bands - 1) + (is_star ? 0 : 4); }

  Eigen::VectorXd pack(const SourceParams& z) const {
    Eigen::VectorXd th(dim());
    th[0] = z.direction[0];
    th[1] = z.direction[1];
    th[2] = std::log(z.ref_flux);
    th.segment(3, bands - 1) = z.colors;
    if (!is_star) {
      const int o = 3 + bands - 1;
      th[o] = logit(z.shape.profile_weight);
      th[o + 1] = z.shape.angle_deg;
      th[o + 2] = std::log(z.shape.half_light_radius);
      th[o + 3] = logit(z.shape.axis_ratio);
    }
    return th;
  }

  SourceParams unpack(const Eigen::VectorXd& th) const {
    SourceParams z;
    z.is_star = is_star;
    z.direction = Vec2(th[0], th[1]);
    z.ref_flux = std::exp(th[2]);
    z.colors = th.segment(3, bands - 1);
    if (!is_star) {
      const int o = 3 + bands - 1;
      z.shape.profile_weight = sigmoid(th[o]);
      z.shape.angle_deg = fold_angle_deg(th[o + 1]);
      z.shape.half_light_radius = std::exp(th[o + 2]);
      z.shape.axis_ratio = sigmoid(th[o + 3]);
    }
    return z;
  }

  // log |dz/dtheta| for the change of variables.
  double log_jacobian(const Eigen::VectorXd& th) const {
    double lj = th[2];
    if (!is_star) {
      const int o = 3 + bands - 1;
      const double p = sigmoid(th[o]), a = sigmoid(th[o + 3]);
      lj += std::log(p * (1.0 - p)) + th[o + 2] + std::log(a * (1.0 - a));
    }
    return lj;
  }

  // Slice-sampling bracket widths per coordinate (degrees for direction).
  Eigen::VectorXd slice_widths(double px_per_degree) const {
    Eigen::VectorXd w(dim());
    w[0] = w[1] = 1.0 / px_per_degree;
    w[2] = 0.5;
    for (int b = 0; b + 1 < bands; ++b) w[3 + b] = 0.4;
    if (!is_star) {
      const int o = 3 + bands - 1;
      w[o] = 1.0;
      w[o + 1] = 40.0;
      w[o + 2] = 0.5;
      w[o + 3] = 1.0;
    }
    return w;
  }
};

/// Tempered single-source target over the region's pixels: the
/// type-conditional prior (direction restricted to a small box around the
/// region center) plus gamma times the Poisson log-likelihood of the
/// region. Caches the pixel response of the committed state so flux and
/// color updates never re-evaluate the spatial kernels, and evaluates the
/// per-pixel terms with vectorized array ops over each band's rectangle.
class SingleSourceTarget {
 public:
  SingleSourceTarget(const SourceRegion& region, const PriorParams& prior,
                     const ProfileTable& table, int ref_band, bool is_star,
                     double dir_halfwidth_px = 4.0)
      : region_(&region),
        prior_(&prior),
        table_(&table),
        ref_band_(ref_band),
        map_{is_star, prior.bands()} {
    const Mat2& lin = region.bands.front().image->wcs.linear;
    px_per_degree_ = std::sqrt(std::abs(lin.determinant()));
    dir_half_deg_ = Vec2(dir_halfwidth_px / std::abs(lin(0, 0)),
                         dir_halfwidth_px / std::max(std::abs(lin(1, 1)), 1e-12));
    log_box_area_ = std::log(4.0 * dir_half_deg_[0] * dir_half_deg_[1]);

    bands_.resize(region.bands.size());
    shared_geometry_ = true;
    const ImageModel& first = *region.bands.front().image;
    for (std::size_t b = 0; b < region.bands.size(); ++b) {
      const BandRegion& br = region.bands[b];
      BandData& bd = bands_[b];
      const int cells = br.width * br.height;
      bd.f.setZero(cells);
      bd.tmp.setZero(cells);
      bd.base = Eigen::Map<const Eigen::ArrayXd>(br.base_rate.data(), cells);
      bd.log_base = bd.base.log();
      bd.count_masked.setZero(cells);
      bd.calib_masked.setZero(cells);
      for (int c = 0; c < cells; ++c)
        if (br.in_disk[c]) {
          bd.count_masked[c] = br.count[c];
          bd.calib_masked[c] = br.image->calib[br.x0 + c % br.width];
        }
      const ImageModel& image = *br.image;
      if (image.wcs.linear != first.wcs.linear || image.wcs.ref_dir != first.wcs.ref_dir ||
          image.wcs.ref_px != first.wcs.ref_px || image.psf.size() != first.psf.size() ||
          br.x0 != region.bands.front().x0 || br.y0 != region.bands.front().y0 ||
          br.width != region.bands.front().width || br.height != region.bands.front().height)
        shared_geometry_ = false;
      else
        for (std::size_t k = 0; k < image.psf.size(); ++k)
          if (image.psf[k].weight != first.psf[k].weight ||
              image.psf[k].mean != first.psf[k].mean || image.psf[k].cov != first.psf[k].cov)
            shared_geometry_ = false;
    }
  }

  const UnconstrainedMap& map() const { return map_; }
  bool is_star() const { return map_.is_star; }

  bool in_dir_box(const Vec2& dir) const {
    const Vec2 d = dir - region_->center_dir;
    return std::abs(d[0]) <= dir_half_deg_[0] && std::abs(d[1]) <= dir_half_deg_[1];
  }

  /// Type-conditional log prior in the unconstrained chart, Jacobian
  /// included. The direction factor is uniform over the association box.
  double log_prior_u(const Eigen::VectorXd& th) const {
    if (!in_dir_box(Vec2(th[0], th[1]))) return kNegInf;
    double lp = -log_box_area_;
    const int i = type_index(map_.is_star);
    lp += -0.5 * std::log(2.0 * kPi * prior_->flux[i].log_var) -
          square(th[2] - prior_->flux[i].log_mean) / (2.0 * prior_->flux[i].log_var);
    lp += prior_->color_gmm[i].logpdf(th.segment(3, map_.bands - 1));
    if (!map_.is_star) {
      const int o = 3 + map_.bands - 1;
      const double p = sigmoid(th[o]), a = sigmoid(th[o + 3]);
      lp += beta_logpdf(p, prior_->profile) + std::log(p * (1.0 - p));
      lp += -std::log(180.0);
      lp += -0.5 * std::log(2.0 * kPi * prior_->radius.log_var) -
            square(th[o + 2] - prior_->radius.log_mean) / (2.0 * prior_->radius.log_var);
      lp += beta_logpdf(a, prior_->axis) + std::log(a * (1.0 - a));
    }
    return lp;
  }

  SourceParams sample_prior(Rng& rng) const {
    SourceParams z;
    z.is_star = map_.is_star;
    std::uniform_real_distribution<double> ux(-dir_half_deg_[0], dir_half_deg_[0]);
    std::uniform_real_distribution<double> uy(-dir_half_deg_[1], dir_half_deg_[1]);
    z.direction = region_->center_dir + Vec2(ux(rng), uy(rng));
    const int i = type_index(z.is_star);
    z.ref_flux = sample_log_normal(prior_->flux[i], rng);
    z.colors = prior_->color_gmm[i].sample(rng);
    if (!z.is_star) {
      z.shape.profile_weight = sample_beta(prior_->profile, rng);
      std::uniform_real_distribution<double> ua(0.0, 180.0);
      z.shape.angle_deg = ua(rng);
      z.shape.half_light_radius = sample_log_normal(prior_->radius, rng);
      z.shape.axis_ratio = sample_beta(prior_->axis, rng);
    }
    return z;
  }

  /// Full evaluation: commits the response caches for the given state and
  /// returns the region log-likelihood.
  double commit(const Eigen::VectorXd& th) {
    const SourceParams z = map_.unpack(th);
    flux_ = band_fluxes(z.ref_flux, z.colors, ref_band_);
    fill_all(z);
    committed_loglike_ = loglike_from_cache(flux_);
    return committed_loglike_;
  }

  double committed_loglike() const { return committed_loglike_; }

  /// One slice-sampling-within-Gibbs pass over every coordinate at inverse
  /// temperature gamma. Leaves the caches committed at the final state and
  /// returns its log-likelihood.
  double gibbs_pass(Eigen::VectorXd& th, double gamma, Rng& rng) {
    const Eigen::VectorXd widths = map_.slice_widths(px_per_degree_);
    for (int k = 0; k < map_.dim(); ++k) {
      const bool geometry = k < 2 || k >= 3 + map_.bands - 1;
      th[k] = slice_sample(
          [&](double v) {
            Eigen::VectorXd cand = th;
            cand[k] = v;
            return tempered_logpdf(cand, gamma, geometry);
          },
          th[k], widths[k], rng);
      // Re-commit the winning coordinate so later coordinates see it.
      const SourceParams z = map_.unpack(th);
      if (geometry)
        fill_all(z);
      else
        flux_ = band_fluxes(z.ref_flux, z.colors, ref_band_);
    }
    committed_loglike_ = loglike_from_cache(flux_);
    return committed_loglike_;
  }

  /// Log-likelihood of an arbitrary state (overwrites the response cache).
  double loglike(const SourceParams& z) {
    fill_all(z);
    return loglike_from_cache(band_fluxes(z.ref_flux, z.colors, ref_band_));
  }

 private:
  struct BandData {
    Eigen::ArrayXd f;             // response density per cell (no calibration)
    Eigen::ArrayXd tmp;           // scratch
    Eigen::ArrayXd base;          // sky + neighbors
    Eigen::ArrayXd log_base;
    Eigen::ArrayXd count_masked;  // counts, zero outside the disk
    Eigen::ArrayXd calib_masked;  // per-cell calibration, zero outside the disk
  };

  void fill_all(const SourceParams& z) {
    if (shared_geometry_) {
      fill_band(0, z);
      for (std::size_t b = 1; b < bands_.size(); ++b) bands_[b].f = bands_[0].f;
    } else {
      for (std::size_t b = 0; b < bands_.size(); ++b) fill_band(b, z);
    }
  }

  // Accumulates the source's response density over the band rectangle with
  // row-contiguous vectorized evaluation.
  void fill_band(std::size_t b, const SourceParams& z) {
    const BandRegion& band = region_->bands[b];
    const ImageModel& image = *band.image;
    const SourceResponse resp = z.is_star
                                    ? star_response(image, z.direction)
                                    : galaxy_response(image, z.direction, z.shape, *table_);
    BandData& bd = bands_[b];
    bd.f.setZero();
    const double trunc = resp.trunc_radius_px;
    const Vec2 sc = resp.center_px;
    for (const auto& g : resp.comps) {
      const Vec2 mean = sc + g.mean_off;
      const double reach = std::sqrt(g.cut2);
      const int ylo = std::max(band.y0, static_cast<int>(std::ceil(
                                            std::max(mean[1] - reach, sc[1] - trunc))));
      const int yhi = std::min(band.y0 + band.height - 1,
                               static_cast<int>(std::floor(
                                   std::min(mean[1] + reach, sc[1] + trunc))));
      for (int y = ylo; y <= yhi; ++y) {
        const double dy = y - mean[1];
        // Intersect the component's reach with the truncation disk on
        // this row.
        const double half_c = std::sqrt(std::max(g.cut2 - dy * dy, 0.0));
        const double dy_t = y - sc[1];
        const double half_t = std::sqrt(std::max(square(trunc) - dy_t * dy_t, 0.0));
        const double lo = std::max(mean[0] - half_c, sc[0] - half_t);
        const double hi = std::min(mean[0] + half_c, sc[0] + half_t);
        const int xlo = std::max(band.x0, static_cast<int>(std::ceil(lo)));
        const int xhi =
            std::min(band.x0 + band.width - 1, static_cast<int>(std::floor(hi)));
        if (xlo > xhi) continue;
        const int len = xhi - xlo + 1;
        const int c0 = band.cell(xlo, y);
        const double dx0 = xlo - mean[0];
        // quad(i) = p00 (dx0+i)^2 + 2 p01 (dx0+i) dy + p11 dy^2, expanded
        // into a linear-coefficient form over the row.
        auto seg = bd.tmp.segment(c0, len);
        seg = Eigen::ArrayXd::LinSpaced(len, dx0, dx0 + (len - 1));
        seg = g.lognorm -
              0.5 * (g.p00 * seg.square() + (2.0 * g.p01 * dy) * seg + g.p11 * dy * dy);
        bd.f.segment(c0, len) += g.weight * seg.exp();
      }
    }
  }

  double loglike_from_cache(const Eigen::VectorXd& flux) {
    double acc = 0.0;
    for (std::size_t b = 0; b < bands_.size(); ++b) {
      const BandRegion& band = region_->bands[b];
      BandData& bd = bands_[b];
      const double lb = flux[band.image->band];
      bd.tmp = lb * bd.calib_masked * bd.f;
      acc += band.base_ll_total - bd.tmp.sum() +
             (bd.count_masked * ((bd.base + bd.tmp).log() - bd.log_base)).sum();
    }
    return acc;
  }

  double tempered_logpdf(const Eigen::VectorXd& th, double gamma, bool geometry) {
    const double lp = log_prior_u(th);
    if (!std::isfinite(lp)) return kNegInf;
    if (gamma == 0.0) return lp;
    const SourceParams z = map_.unpack(th);
    double ll;
    if (geometry) {
      fill_all(z);
      ll = loglike_from_cache(flux_);
    } else {
      ll = loglike_from_cache(band_fluxes(z.ref_flux, z.colors, ref_band_));
    }
    return lp + gamma * ll;
  }

  const SourceRegion* region_;
  const PriorParams* prior_;
  const ProfileTable* table_;
  int ref_band_;
  UnconstrainedMap map_;
  double px_per_degree_ = 1.0;
  Vec2 dir_half_deg_ = Vec2::Zero();
  double log_box_area_ = 0.0;
  bool shared_geometry_ = false;

  std::vector<BandData> bands_;
  Eigen::VectorXd flux_;
  double committed_loglike_ = 0.0;
};

/// Generic slice-sampling-within-Gibbs transition for a black-box
/// unnormalized log density over one source's parameters. Coordinates are
/// updated once each in a fixed order (direction, flux, colors, then shape
/// for galaxies), in the unconstrained chart with Jacobians included.
template <typename Target>
SourceParams within_gibbs_transition(Target&& target, const SourceParams& z, Rng& rng,
                                     double px_per_degree = 5000.0) {
  UnconstrainedMap map{z.is_star, static_cast<int>(z.colors.size()) + 1};
  Eigen::VectorXd th = map.pack(z);
  const Eigen::VectorXd widths = map.slice_widths(px_per_degree);
  const double f0 = target(z) + map.log_jacobian(th);
  if (!std::isfinite(f0))
    throw ModelError("within_gibbs_transition: target not finite at start");
  for (int k = 0; k < map.dim(); ++k) {
    th[k] = slice_sample(
        [&](double v) {
          Eigen::VectorXd cand = th;
          cand[k] = v;
          return target(map.unpack(cand)) + map.log_jacobian(cand);
        },
        th[k], widths[k], rng);
  }
  SourceParams out = map.unpack(th);
  if (z.is_star) out.shape = z.shape;  // shape coordinates are never sampled for stars
  return out;
}

/// Scalar AIS: the same temperature-path estimator over a univariate state
/// with slice-sampling transitions. `z0` must be a draw from the prior.
template <typename LogLike, typename PriorLogPdf>
double ais_log_evidence_1d(LogLike&& loglike, PriorLogPdf&& prior_logpdf, double z0,
                           const std::vector<double>& schedule, double slice_scale,
                           Rng& rng) {
  double z = z0;
  double ll = loglike(z);
  double log_z = 0.0;
  for (std::size_t t = 1; t < schedule.size(); ++t) {
    const double increment = (schedule[t] - schedule[t - 1]) * ll;
    if (!std::isfinite(increment))
      throw ModelError("ais_log_evidence_1d: non-finite weight increment at step " +
                       std::to_string(t));
    log_z += increment;
    const double gamma = schedule[t];
    z = slice_sample([&](double v) { return prior_logpdf(v) + gamma * loglike(v); }, z,
                     slice_scale, rng);
    ll = loglike(z);
  }
  return log_z;
}

struct AisResult {
  double log_z = 0.0;
  SourceParams final_state;
};

/// Annealed importance sampling for one source type: draws from the
/// type-conditional prior, anneals through the schedule with slice
/// transitions, and returns the consistent log marginal-likelihood
/// estimate together with the final (approximately posterior) state.
inline AisResult run_ais(SingleSourceTarget& target, const AisConfig& config, Rng& rng) {
  if (!config.valid()) throw ModelError("run_ais: invalid config");
  const std::vector<double> schedule = config.make_schedule();
  SourceParams z0 = target.sample_prior(rng);
  Eigen::VectorXd th = target.map().pack(z0);
  double loglike = target.commit(th);
  double log_z = 0.0;
  for (int t = 1; t < static_cast<int>(schedule.size()); ++t) {
    const double increment = (schedule[t] - schedule[t - 1]) * loglike;
    if (!std::isfinite(increment))
      throw ModelError("run_ais: non-finite weight increment at step " + std::to_string(t));
    log_z += increment;
    loglike = target.gibbs_pass(th, schedule[t], rng);
  }
  AisResult result;
  result.log_z = log_z;
  result.final_state = target.map().unpack(th);
  return result;
}

/// Posterior summary for one source produced by the AIS-MCMC procedure.
struct SourcePosterior {
  double star_prob_estimate = 0.5;
  std::array<std::vector<double>, 2> log_evidence;     // [type][chain]
  std::array<std::vector<SourceParams>, 2> samples;    // [type][chain*post_steps]
  std::map<std::string, double> ess;                   // per parameter, dominant type
  double sampling_seconds = 0.0;
};

namespace detail {

inline std::vector<std::string> parameter_names(bool is_star, int bands) {
  std::vector<std::string> names = {"dir_lon", "dir_lat", "log_flux"};
  for (int b = 0; b + 1 < bands; ++b) names.push_back("color_" + std::to_string(b));
  if (!is_star) {
    names.push_back("logit_profile");
    names.push_back("angle");
    names.push_back("log_radius");
    names.push_back("logit_axis");
  }
  return names;
}

}  // namespace detail

/// Runs N' independent AIS estimators per source type, extends each
/// endpoint with B' posterior slice-sampling steps, and classifies by
/// Bayes rule with log-mean-exp-averaged evidence estimates.
inline SourcePosterior classify_and_sample(const SourceRegion& region,
                                           const PriorParams& prior,
                                           const ProfileTable& table, int ref_band,
                                           const AisConfig& config, Rng& rng) {
  const auto t_start = std::chrono::steady_clock::now();
  SourcePosterior posterior;
  for (int type = 0; type < 2; ++type) {
    const bool is_star = type == 1;
    SingleSourceTarget target(region, prior, table, ref_band, is_star,
                              config.dir_halfwidth_px);
    for (int chain = 0; chain < config.chains; ++chain) {
      try {
        const AisResult ais = run_ais(target, config, rng);
        posterior.log_evidence[type].push_back(ais.log_z);
        Eigen::VectorXd th = target.map().pack(ais.final_state);
        target.commit(th);
        for (int step = 0; step < config.post_steps; ++step) {
          target.gibbs_pass(th, 1.0, rng);
          posterior.samples[type].push_back(target.map().unpack(th));
        }
      } catch (const ModelError&) {
        // A failed chain is dropped; classification needs at least one
        // surviving chain per type.
      }
    }
    if (posterior.log_evidence[type].empty())
      throw FitError("classify_and_sample: all AIS runs failed for a type");
  }

  const double log_star =
      std::log(std::max(prior.star_prob, 1e-300)) + log_mean_exp(posterior.log_evidence[1]);
  const double log_gal = std::log(std::max(1.0 - prior.star_prob, 1e-300)) +
                         log_mean_exp(posterior.log_evidence[0]);
  posterior.star_prob_estimate = std::exp(log_star - log_sum_exp({log_star, log_gal}));

  // Effective sample sizes on the dominant type's concatenated chains.
  const int dom = posterior.star_prob_estimate >= 0.5 ? 1 : 0;
  if (!posterior.samples[dom].empty()) {
    UnconstrainedMap map{dom == 1, prior.bands()};
    const auto names = detail::parameter_names(dom == 1, prior.bands());
    for (int k = 0; k < map.dim(); ++k) {
      std::vector<double> series;
      series.reserve(posterior.samples[dom].size());
      for (const auto& z : posterior.samples[dom]) series.push_back(map.pack(z)[k]);
      try {
        posterior.ess[names[k]] = effective_sample_size(series);
      } catch (const ModelError&) {
        // Constant series carry no mixing information.
      }
    }
  }
  posterior.sampling_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return posterior;
}

/// Draws one posterior state from a SourcePosterior per the two-stage rule:
/// type by the classification probability, then a uniform pick from that
/// type's sample pool.
inline SourceParams sample_posterior_state(const SourcePosterior& posterior, Rng& rng) {
  std::bernoulli_distribution pick_star(posterior.star_prob_estimate);
  int type = pick_star(rng) ? 1 : 0;
  if (posterior.samples[type].empty()) type = 1 - type;
  std::uniform_int_distribution<std::size_t> pick(0, posterior.samples[type].size() - 1);
  return posterior.samples[type][pick(rng)];
}

/// One Gibbs pass over the catalog: each source is re-sampled by
/// classify_and_sample with every other source's current state fixed.
inline std::vector<SourcePosterior> gibbs_sweep(std::vector<SourceParams>& catalog,
                                                const std::vector<ImageModel>& images,
                                                const PriorParams& prior,
                                                const ProfileTable& table, int ref_band,
                                                const AisConfig& config,
                                                double region_radius_px, Rng& rng) {
  std::vector<SourcePosterior> posteriors(catalog.size());
  for (std::size_t s = 0; s < catalog.size(); ++s) {
    SourceRegion region = build_region(images, catalog[s].direction, region_radius_px);
    std::vector<SourceParams> neighbors;
    for (std::size_t j = 0; j < catalog.size(); ++j)
      if (j != s) neighbors.push_back(catalog[j]);
    add_point_neighbors(region, neighbors, table, ref_band);
    finalize_region(region);
    posteriors[s] = classify_and_sample(region, prior, table, ref_band, config, rng);
    catalog[s] = sample_posterior_state(posteriors[s], rng);
  }
  return posteriors;
}

}  // namespace astrocat

#endif  // ASTROCAT_MCMC_HPP_
