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
#ifndef ASTROCAT_REGION_HPP_
#define ASTROCAT_REGION_HPP_

#include <cstdint>
#include <vector>

#include "astrocat/model.hpp"

namespace astrocat {

/// The pixels of one band a source is fit against: a disk of radius
/// `radius_px` stored as a bounding rectangle with an in-disk mask so the
/// per-component inner loops can run over contiguous rows. `base_rate`
/// carries sky plus every fixed neighbor's expected contribution;
/// `base_var` the neighbors' contribution variance (zero for point-state
/// neighbors). `base_ll` caches the per-pixel Poisson terms of a
/// source-free region so likelihood evaluations touch only pixels the
/// source actually reaches.
struct BandRegion {
  const ImageModel* image = nullptr;
  Vec2 center_px = Vec2::Zero();
  int x0 = 0, y0 = 0, width = 0, height = 0;
  std::vector<std::uint8_t> in_disk;
  std::vector<double> count;
  std::vector<double> base_rate;
  std::vector<double> base_var;
  std::vector<double> lfact;
  std::vector<double> base_ll;
  double base_ll_total = 0.0;

  int cell(int x, int y) const { return (y - y0) * width + (x - x0); }
  double px_of(int cell_index) const { return x0 + cell_index % width; }
  double py_of(int cell_index) const { return y0 + cell_index / width; }
};

/// A source's working region across all bands. Both inference engines
/// evaluate the likelihood restricted to exactly this pixel set.
struct SourceRegion {
  Vec2 center_dir = Vec2::Zero();
  double radius_px = 0.0;
  std::vector<BandRegion> bands;

  std::size_t pixel_count() const {
    std::size_t n = 0;
    for (const auto& b : bands)
      for (auto flag : b.in_disk) n += flag;
    return n;
  }
};

inline SourceRegion build_region(const std::vector<ImageModel>& images,
                                 const Vec2& center_dir, double radius_px) {
  SourceRegion region;
  region.center_dir = center_dir;
  region.radius_px = radius_px;
  for (const auto& image : images) {
    if (!image.has_pixels()) throw ModelError("build_region: image has no pixels");
    BandRegion band;
    band.image = &image;
    band.center_px = image.wcs.to_pixel(center_dir);
    band.x0 = std::max(0, static_cast<int>(std::ceil(band.center_px[0] - radius_px)));
    const int x1 =
        std::min(image.width - 1, static_cast<int>(std::floor(band.center_px[0] + radius_px)));
    band.y0 = std::max(0, static_cast<int>(std::ceil(band.center_px[1] - radius_px)));
    const int y1 =
        std::min(image.height - 1, static_cast<int>(std::floor(band.center_px[1] + radius_px)));
    band.width = std::max(x1 - band.x0 + 1, 0);
    band.height = std::max(y1 - band.y0 + 1, 0);
    const int cells = band.width * band.height;
    band.in_disk.assign(cells, 0);
    band.count.assign(cells, 0.0);
    band.base_rate.assign(cells, 0.0);
    band.base_var.assign(cells, 0.0);
    band.lfact.assign(cells, 0.0);
    for (int y = band.y0; y <= y1; ++y)
      for (int x = band.x0; x <= x1; ++x) {
        const int c = band.cell(x, y);
        band.base_rate[c] = image.sky_at(x, y);
        if (square(x - band.center_px[0]) + square(y - band.center_px[1]) >
            square(radius_px))
          continue;
        band.in_disk[c] = 1;
        band.count[c] = image.pixel(x, y);
        band.lfact[c] =
            image.log_pixel_factorial.empty()
                ? std::lgamma(band.count[c] + 1.0)
                : image.log_pixel_factorial[static_cast<std::size_t>(y) * image.width + x];
      }
    region.bands.push_back(std::move(band));
  }
  return region;
}

/// Adds fixed point-state neighbors' light to the region's base rates.
inline void add_point_neighbors(SourceRegion& region,
                                const std::vector<SourceParams>& neighbors,
                                const ProfileTable& table, int ref_band) {
  for (const auto& nb : neighbors) {
    const Eigen::VectorXd flux = band_fluxes(nb.ref_flux, nb.colors, ref_band);
    for (auto& band : region.bands) {
      const SourceResponse resp = source_response(*band.image, nb, table);
      for (int c = 0; c < band.width * band.height; ++c) {
        if (!band.in_disk[c]) continue;
        const double x = band.px_of(c), y = band.py_of(c);
        const double f = resp.density(x, y);
        if (f > 0.0)
          band.base_rate[c] += flux[band.image->band] * band.image->calib[static_cast<int>(x)] * f;
      }
    }
  }
}

/// Caches the source-free per-pixel log-likelihood terms. Must run after
/// the base rates are final.
inline void finalize_region(SourceRegion& region) {
  for (auto& band : region.bands) {
    band.base_ll.assign(band.width * band.height, 0.0);
    band.base_ll_total = 0.0;
    for (int c = 0; c < band.width * band.height; ++c) {
      if (!band.in_disk[c]) continue;
      band.base_ll[c] =
          -band.base_rate[c] + band.count[c] * std::log(band.base_rate[c]) - band.lfact[c];
      band.base_ll_total += band.base_ll[c];
    }
  }
}

/// Working-region radius: covers ~99% of a typical galaxy's light plus the
/// PSF, clamped so a source's patch stays desk-sized.
inline double default_region_radius_px(const std::vector<ImageModel>& images,
                                       double typical_radius_arcsec,
                                       double max_radius_px = 26.0) {
  double radius = 0.0;
  for (const auto& image : images) {
    const double psf = kTruncationSigmas * image.max_psf_sigma();
    const double scale = image.wcs.arcsec_to_pixel().operatorNorm();
    radius = std::max(radius,
                      std::min(psf + 9.5 * typical_radius_arcsec * scale, max_radius_px));
    radius = std::max(radius, psf);
  }
  return radius;
}

}  // namespace astrocat

#endif  // ASTROCAT_REGION_HPP_
