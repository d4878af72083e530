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
#ifndef ASTROCAT_TYPES_HPP_
#define ASTROCAT_TYPES_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "astrocat/common.hpp"

namespace astrocat {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Galaxy light-kernel shape: mixing weight between the two extremal
/// profiles, major-axis position angle, half-light radius, and
/// minor-to-major axis ratio.
struct GalaxyShape {
  double profile_weight = 0.5;    // in [0,1]; 1 = pure de Vaucouleurs
  double angle_deg = 0.0;         // in [0,180)
  double half_light_radius = 1.0; // arcseconds, > 0
  double axis_ratio = 0.5;        // in (0,1)

  bool valid() const {
    return profile_weight >= 0.0 && profile_weight <= 1.0 && angle_deg >= 0.0 &&
           angle_deg < 180.0 && half_light_radius > 0.0 && axis_ratio > 0.0 &&
           axis_ratio < 1.0 && std::isfinite(angle_deg) &&
           std::isfinite(half_light_radius);
  }
};

/// Latent variables of one light source.
struct SourceParams {
  bool is_star = true;
  Vec2 direction = Vec2::Zero();  // (longitude, latitude), degrees
  double ref_flux = 1.0;          // nanomaggies, > 0
  Eigen::VectorXd colors;         // (B-1) log flux ratios, colors[b] = log(flux[b]/flux[b+1])
  GalaxyShape shape;              // meaningful only when !is_star

  bool valid() const {
    if (!(ref_flux > 0.0) || !std::isfinite(ref_flux)) return false;
    if (direction[0] < 0.0 || direction[0] >= 360.0 || direction[1] < -90.0 ||
        direction[1] > 90.0)
      return false;
    for (int i = 0; i < colors.size(); ++i)
      if (!std::isfinite(colors[i])) return false;
    return is_star || shape.valid();
  }
};

/// One bivariate normal component of a light kernel or PSF.
struct GaussianComponent {
  double weight = 1.0;
  Vec2 mean = Vec2::Zero();
  Mat2 cov = Mat2::Identity();
};

/// Prespecified scale-mixture decomposition of the two extremal galaxy
/// profiles. Row 0 holds the de Vaucouleurs components, row 1 the
/// exponential components. `weights(i,k)` rows sum to one; `scales(i,k)`
/// multiply the galaxy covariance.
struct ProfileTable {
  Eigen::MatrixXd weights;  // I x K
  Eigen::MatrixXd scales;   // I x K

  int component_count() const { return static_cast<int>(weights.cols()); }

  bool valid(double tol = 1e-10) const {
    if (weights.rows() != 2 || scales.rows() != 2 ||
        weights.cols() != scales.cols())
      return false;
    for (int i = 0; i < 2; ++i) {
      if (std::abs(weights.row(i).sum() - 1.0) > tol) return false;
      for (int k = 0; k < scales.cols(); ++k)
        if (!(scales(i, k) > 0.0)) return false;
    }
    return true;
  }
};

/// Affine sky->pixel map: px = linear * (dir - ref_dir) + ref_px.
/// Six coefficients; directions in degrees, pixels in units of pixel
/// centers with (0,0) the center of the top-left pixel (x = column,
/// y = row).
struct AffineWcs {
  Mat2 linear = Mat2::Identity();  // pixels per degree
  Vec2 ref_dir = Vec2::Zero();     // degrees
  Vec2 ref_px = Vec2::Zero();      // pixels

  Vec2 to_pixel(const Vec2& dir_deg) const {
    return linear * (dir_deg - ref_dir) + ref_px;
  }
  Vec2 to_sky(const Vec2& px) const {
    return linear.inverse() * (px - ref_px) + ref_dir;
  }
  // Linear map taking arcsecond offsets on the sky to pixel offsets.
  Mat2 arcsec_to_pixel() const { return linear / kArcsecPerDegree; }
};

/// One image: pixel grid plus its per-image nuisance parameters.
/// `sky_grid` is a coarse Q-knot grid of background intensities that is
/// bilinearly interpolated over the full pixel grid.
struct ImageModel {
  int band = 0;  // 0-based filter index
  int height = 0, width = 0;
  std::vector<std::uint32_t> pixels;  // row-major, photon counts; empty until rendered
  std::vector<double> log_pixel_factorial;  // lgamma(x+1) per pixel, built with the pixels
  Eigen::MatrixXd sky_grid;           // Qr x Qc knot intensities, photons/pixel
  Eigen::VectorXd calib;              // per-column expected photons per nanomaggy
  AffineWcs wcs;
  std::vector<GaussianComponent> psf;  // means/covs in pixel coordinates

  bool has_pixels() const { return !pixels.empty(); }

  // Pixels stay fixed during inference, so the log-factorial terms of the
  // Poisson log-pmf are cached once.
  void finalize_pixels() {
    log_pixel_factorial.resize(pixels.size());
    for (std::size_t i = 0; i < pixels.size(); ++i)
      log_pixel_factorial[i] = std::lgamma(static_cast<double>(pixels[i]) + 1.0);
  }

  std::uint32_t pixel(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }

  // Bilinear interpolation of the sky knot grid at a pixel center. Knots
  // are pinned to the image corners.
  double sky_at(double x, double y) const {
    const int qr = static_cast<int>(sky_grid.rows());
    const int qc = static_cast<int>(sky_grid.cols());
    if (qr == 1 && qc == 1) return sky_grid(0, 0);
    const double gy = (height > 1) ? y / (height - 1) * (qr - 1) : 0.0;
    const double gx = (width > 1) ? x / (width - 1) * (qc - 1) : 0.0;
    const int iy = std::min(std::max(static_cast<int>(std::floor(gy)), 0), qr - 2);
    const int ix = std::min(std::max(static_cast<int>(std::floor(gx)), 0), qc - 2);
    const double fy = std::min(std::max(gy - iy, 0.0), 1.0);
    const double fx = std::min(std::max(gx - ix, 0.0), 1.0);
    return sky_grid(iy, ix) * (1 - fy) * (1 - fx) +
           sky_grid(iy + 1, ix) * fy * (1 - fx) +
           sky_grid(iy, ix + 1) * (1 - fy) * fx +
           sky_grid(iy + 1, ix + 1) * fy * fx;
  }

  double max_psf_sigma() const {
    double s2 = 0.0;
    for (const auto& c : psf) {
      const double half_tr = 0.5 * (c.cov(0, 0) + c.cov(1, 1));
      const double gap =
          std::sqrt(square(0.5 * (c.cov(0, 0) - c.cov(1, 1))) + square(c.cov(0, 1)));
      s2 = std::max(s2, half_tr + gap);
    }
    return std::sqrt(s2);
  }

  bool valid(double wtol = 1e-8) const {
    if (height <= 0 || width <= 0) return false;
    if (calib.size() != width) return false;
    for (int i = 0; i < calib.size(); ++i)
      if (!(calib[i] > 0.0)) return false;
    for (int r = 0; r < sky_grid.rows(); ++r)
      for (int c = 0; c < sky_grid.cols(); ++c)
        if (!(sky_grid(r, c) > 0.0)) return false;
    double wsum = 0.0;
    for (const auto& c : psf) {
      wsum += c.weight;
      if (std::abs(c.cov(0, 1) - c.cov(1, 0)) > 1e-12) return false;
      Eigen::SelfAdjointEigenSolver<Mat2> es(c.cov);
      if (!(es.eigenvalues().minCoeff() > 0.0)) return false;
    }
    return psf.empty() || std::abs(wsum - 1.0) <= wtol;
  }
};

}  // namespace astrocat

#endif  // ASTROCAT_TYPES_HPP_
