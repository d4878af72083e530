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
#ifndef ASTROCAT_MODEL_HPP_
#define ASTROCAT_MODEL_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "astrocat/types.hpp"

namespace astrocat {

// Contributions beyond this many sigmas of a single Gaussian component are
// dropped (relative mass error ~1e-8, well under every stated tolerance).
constexpr double kComponentSigmaCut = 5.92;
// A source contributes nothing beyond this many sigmas of its widest
// component from its center.
constexpr double kTruncationSigmas = 5.0;

inline double gaussian2_pdf(const Vec2& x, const Vec2& mean, const Mat2& cov) {
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  if (!(det > 0.0) || !(cov(0, 0) > 0.0))
    throw ModelError("gaussian2_pdf: covariance not positive definite");
  const Vec2 d = x - mean;
  const double quad =
      (cov(1, 1) * d[0] * d[0] - 2.0 * cov(0, 1) * d[0] * d[1] + cov(0, 0) * d[1] * d[1]) / det;
  return std::exp(-0.5 * quad) / (2.0 * kPi * std::sqrt(det));
}

/// Spatial covariance of a galaxy in arcsec^2: rotation of
/// diag(radius^2, (axis*radius)^2) by the position angle.
inline Mat2 galaxy_covariance(const GalaxyShape& shape) {
  const double t = shape.angle_deg * kPi / 180.0;
  const double c = std::cos(t), s = std::sin(t);
  Mat2 rot;
  rot << c, -s, s, c;
  const double r2 = square(shape.half_light_radius);
  Mat2 d = Mat2::Zero();
  d(0, 0) = r2;
  d(1, 1) = square(shape.axis_ratio) * r2;
  return rot.transpose() * d * rot;
}

/// Galaxy light kernel as a mixture of bivariate normals over sky
/// coordinates in degrees (covariances converted from arcsec^2). Row 0 of
/// the table (de Vaucouleurs) is weighted by profile_weight, row 1
/// (exponential) by its complement. Weights sum to one.
inline std::vector<GaussianComponent> galaxy_mixture(const GalaxyShape& shape,
                                                     const Vec2& direction_deg,
                                                     const ProfileTable& table) {
  const Mat2 sigma_deg = galaxy_covariance(shape) / square(kArcsecPerDegree);
  const int k = table.component_count();
  std::vector<GaussianComponent> comps;
  comps.reserve(2 * k);
  const double w[2] = {shape.profile_weight, 1.0 - shape.profile_weight};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < k; ++j) {
      GaussianComponent c;
      c.weight = w[i] * table.weights(i, j);
      c.mean = direction_deg;
      c.cov = table.scales(i, j) * sigma_deg;
      comps.push_back(c);
    }
  return comps;
}

/// Per-band fluxes implied by the reference flux and the color vector,
/// with colors[b] = log(flux[b] / flux[b+1]).
inline Eigen::VectorXd band_fluxes(double ref_flux, const Eigen::VectorXd& colors,
                                   int ref_band) {
  const int bands = static_cast<int>(colors.size()) + 1;
  Eigen::VectorXd flux(bands);
  flux[ref_band] = ref_flux;
  for (int b = ref_band - 1; b >= 0; --b) flux[b] = flux[b + 1] * std::exp(colors[b]);
  for (int b = ref_band + 1; b < bands; ++b) flux[b] = flux[b - 1] * std::exp(-colors[b - 1]);
  return flux;
}

/// Inverse of band_fluxes.
inline Eigen::VectorXd colors_from_fluxes(const Eigen::VectorXd& fluxes) {
  Eigen::VectorXd colors(fluxes.size() - 1);
  for (int b = 0; b + 1 < fluxes.size(); ++b)
    colors[b] = std::log(fluxes[b] / fluxes[b + 1]);
  return colors;
}

// Signs of each color in log flux[band] = log ref_flux + sum_b sign * colors[b].
inline Eigen::VectorXd color_path(int band, int ref_band, int bands) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(bands - 1);
  if (band < ref_band)
    for (int b = band; b < ref_band; ++b) d[b] = 1.0;
  else if (band > ref_band)
    for (int b = ref_band; b < band; ++b) d[b] = -1.0;
  return d;
}

namespace detail {

// One Gaussian of a source's pixel-space response, premultiplied for fast
// density evaluation: density = weight * exp(lognorm - quad/2).
struct PixelGauss {
  double weight;
  Vec2 mean_off;  // offset from the source center, pixels
  double p00, p01, p11;  // precision matrix
  double lognorm;
  double cut2;  // squared skip radius around mean
};

// Largest eigenvalue of a symmetric 2x2 matrix, closed form.
inline double max_eigenvalue2(const Mat2& m) {
  const double half_tr = 0.5 * (m(0, 0) + m(1, 1));
  const double gap = std::sqrt(square(0.5 * (m(0, 0) - m(1, 1))) + square(m(0, 1)));
  return half_tr + gap;
}

inline PixelGauss make_pixel_gauss(double weight, const Vec2& mean_off, const Mat2& cov) {
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  if (!(det > 0.0) || !(cov(0, 0) > 0.0))
    throw ModelError("degenerate source covariance");
  PixelGauss g;
  g.weight = weight;
  g.mean_off = mean_off;
  g.p00 = cov(1, 1) / det;
  g.p01 = -cov(0, 1) / det;
  g.p11 = cov(0, 0) / det;
  g.lognorm = -std::log(2.0 * kPi) - 0.5 * std::log(det);
  g.cut2 = square(kComponentSigmaCut) * max_eigenvalue2(cov);
  return g;
}

inline double eval_pixel_gauss(const PixelGauss& g, const Vec2& d) {
  const double r2 = d.squaredNorm();
  if (r2 > g.cut2) return 0.0;
  const double quad = g.p00 * d[0] * d[0] + 2.0 * g.p01 * d[0] * d[1] + g.p11 * d[1] * d[1];
  return g.weight * std::exp(g.lognorm - 0.5 * quad);
}

}  // namespace detail

/// Pixel-space response of one source in one image: the PSF mixture for a
/// star, the PSF (x) galaxy-kernel convolution for a galaxy. Densities are
/// per unit nanomaggy before the per-column calibration.
struct SourceResponse {
  Vec2 center_px = Vec2::Zero();
  double trunc_radius_px = 0.0;
  std::vector<detail::PixelGauss> comps;

  // Mixture density at a pixel, zero beyond the truncation radius.
  double density(double px, double py) const {
    const Vec2 p(px, py);
    if ((p - center_px).squaredNorm() > square(trunc_radius_px)) return 0.0;
    double acc = 0.0;
    for (const auto& g : comps)
      acc += detail::eval_pixel_gauss(g, p - (center_px + g.mean_off));
    return acc;
  }
};

/// Radius in pixels beyond which a source's contribution is treated as
/// zero: kTruncationSigmas of the widest mixture component, PSF width
/// included.
inline double truncation_radius_px(const ImageModel& image, const SourceParams& source,
                                   const ProfileTable& table) {
  const double psf_sigma = image.max_psf_sigma();
  if (source.is_star) return kTruncationSigmas * psf_sigma;
  const Mat2 scale = image.wcs.arcsec_to_pixel();
  const double sx = scale.operatorNorm();
  const double major_px = source.shape.half_light_radius * sx;
  const double tau_max = table.scales.maxCoeff();
  return kTruncationSigmas * std::sqrt(square(psf_sigma) + tau_max * square(major_px));
}

inline SourceResponse star_response(const ImageModel& image, const Vec2& direction_deg) {
  SourceResponse r;
  r.center_px = image.wcs.to_pixel(direction_deg);
  r.trunc_radius_px = kTruncationSigmas * image.max_psf_sigma();
  for (const auto& c : image.psf)
    r.comps.push_back(detail::make_pixel_gauss(c.weight, c.mean, c.cov));
  return r;
}

inline SourceResponse galaxy_response(const ImageModel& image, const Vec2& direction_deg,
                                      const GalaxyShape& shape, const ProfileTable& table) {
  SourceResponse r;
  r.center_px = image.wcs.to_pixel(direction_deg);
  const Mat2 scale = image.wcs.arcsec_to_pixel();
  const Mat2 sigma_px = scale * galaxy_covariance(shape) * scale.transpose();
  const double w[2] = {shape.profile_weight, 1.0 - shape.profile_weight};
  for (const auto& c : image.psf)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < table.component_count(); ++j) {
        const double weight = c.weight * w[i] * table.weights(i, j);
        const Mat2 cov = c.cov + table.scales(i, j) * sigma_px;
        r.comps.push_back(detail::make_pixel_gauss(weight, c.mean, cov));
      }
  SourceParams probe;
  probe.is_star = false;
  probe.shape = shape;
  r.trunc_radius_px = truncation_radius_px(image, probe, table);
  return r;
}

inline SourceResponse source_response(const ImageModel& image, const SourceParams& source,
                                      const ProfileTable& table) {
  return source.is_star ? star_response(image, source.direction)
                        : galaxy_response(image, source.direction, source.shape, table);
}

/// Expected photons per nanomaggy contributed by a point source at
/// `direction_deg` to the pixel (px, py).
inline double point_response(const ImageModel& image, const Vec2& direction_deg, int px,
                             int py) {
  const SourceResponse r = star_response(image, direction_deg);
  return image.calib[px] * r.density(px, py);
}

inline double star_contribution(const ImageModel& image, const SourceParams& source,
                                int px, int py) {
  return point_response(image, source.direction, px, py);
}

inline double galaxy_contribution(const ImageModel& image, const SourceParams& source,
                                  const ProfileTable& table, int px, int py) {
  const SourceResponse r =
      galaxy_response(image, source.direction, source.shape, table);
  return image.calib[px] * r.density(px, py);
}

inline double source_contribution(const ImageModel& image, const SourceParams& source,
                                  const ProfileTable& table, int px, int py) {
  return source.is_star ? star_contribution(image, source, px, py)
                        : galaxy_contribution(image, source, table, px, py);
}

// Default reference band (r of ugriz).
constexpr int kDefaultRefBand = 2;

/// Poisson rate at one pixel: interpolated sky plus each source's band
/// flux times its pixel response.
inline double pixel_rate(const ImageModel& image, const std::vector<SourceParams>& catalog,
                         const ProfileTable& table, int px, int py,
                         int ref_band = kDefaultRefBand) {
  double rate = image.sky_at(px, py);
  for (const auto& source : catalog) {
    const double f = source_contribution(image, source, table, px, py);
    if (f > 0.0) {
      const Eigen::VectorXd flux = band_fluxes(source.ref_flux, source.colors, ref_band);
      rate += flux[image.band] * f;
    }
  }
  return rate;
}

/// Adds `flux * calib(col) * response` to a row-major rate grid, visiting
/// only pixels inside each component's own skip radius.
inline void accumulate_response(const ImageModel& image, const SourceResponse& response,
                                double flux, Eigen::ArrayXd& grid) {
  const double rt = response.trunc_radius_px;
  const Vec2 c = response.center_px;
  for (const auto& g : response.comps) {
    const Vec2 mean = c + g.mean_off;
    const double reach = std::sqrt(g.cut2);
    const int x0 = std::max(0, static_cast<int>(std::ceil(mean[0] - reach)));
    const int x1 = std::min(image.width - 1, static_cast<int>(std::floor(mean[0] + reach)));
    const int y0 = std::max(0, static_cast<int>(std::ceil(mean[1] - reach)));
    const int y1 = std::min(image.height - 1, static_cast<int>(std::floor(mean[1] + reach)));
    for (int y = y0; y <= y1; ++y)
      for (int x = x0; x <= x1; ++x) {
        const Vec2 p(x, y);
        if ((p - c).squaredNorm() > square(rt)) continue;
        const double d = detail::eval_pixel_gauss(g, p - mean);
        if (d > 0.0) grid[static_cast<std::size_t>(y) * image.width + x] += flux * image.calib[x] * d;
      }
  }
}

/// Poisson rates for every pixel of an image.
inline Eigen::ArrayXd rate_grid(const ImageModel& image,
                                const std::vector<SourceParams>& catalog,
                                const ProfileTable& table,
                                int ref_band = kDefaultRefBand) {
  Eigen::ArrayXd grid(static_cast<Eigen::Index>(image.height) * image.width);
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      grid[static_cast<std::size_t>(y) * image.width + x] = image.sky_at(x, y);
  for (const auto& source : catalog) {
    const Eigen::VectorXd flux = band_fluxes(source.ref_flux, source.colors, ref_band);
    accumulate_response(image, source_response(image, source, table), flux[image.band], grid);
  }
  return grid;
}

/// Poisson log-likelihood of an image's pixels under the catalog.
inline double log_likelihood(const ImageModel& image,
                             const std::vector<SourceParams>& catalog,
                             const ProfileTable& table,
                             int ref_band = kDefaultRefBand) {
  if (!image.has_pixels()) throw ModelError("log_likelihood: image has no pixels");
  const Eigen::ArrayXd rates = rate_grid(image, catalog, table, ref_band);
  double ll = 0.0;
  for (Eigen::Index i = 0; i < rates.size(); ++i) {
    const double x = image.pixels[i];
    const double lam = rates[i];
    if (!(lam > 0.0)) {
      if (x > 0.0) throw ModelError("log_likelihood: zero rate with nonzero count");
      continue;
    }
    const double lfact = image.log_pixel_factorial.empty()
                             ? std::lgamma(x + 1.0)
                             : image.log_pixel_factorial[i];
    ll += -lam + x * std::log(lam) - lfact;
  }
  return ll;
}

}  // namespace astrocat

#endif  // ASTROCAT_MODEL_HPP_
