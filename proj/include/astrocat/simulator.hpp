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
#ifndef ASTROCAT_SIMULATOR_HPP_
#define ASTROCAT_SIMULATOR_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "astrocat/model.hpp"
#include "astrocat/priors.hpp"

namespace astrocat {

// Pixel values are stored as 16-bit grayscale; counts are clipped to this
// ceiling when rendering.
constexpr std::uint32_t kMaxPixelValue = 65535;

struct SceneConfig {
  int height = 256;
  int width = 256;
  int bands = 5;
  int source_count = 50;
  double sky_level = 200.0;     // photons per pixel
  double calib_level = 1000.0;  // photons per nanomaggy
  double psf_sigma_px = 1.5;
  double window_deg = 0.05;     // square sky window mapped onto the image
  int ref_band = kDefaultRefBand;
  int psf_components = 3;
  int sky_knots = 2;            // knots per axis of the sky grid
  double max_flux = 1e4;        // draws above this are rejected
  std::uint64_t seed = 1;

  bool valid() const {
    return height > 0 && width > 0 && bands > 0 && source_count >= 0 &&
           sky_level > 0 && calib_level > 0 && psf_sigma_px > 0 && window_deg > 0;
  }
};

struct Scene {
  std::vector<SourceParams> catalog;
  std::vector<ImageModel> images;  // one per band, pixels empty until rendered
};

/// Isotropic three-scale PSF mixture of overall width ~sigma.
inline std::vector<GaussianComponent> make_psf(double sigma, int components) {
  static const double base_w[3] = {0.6, 0.3, 0.1};
  static const double base_s[3] = {0.8, 1.3, 2.0};
  std::vector<GaussianComponent> psf;
  double wsum = 0.0;
  for (int i = 0; i < components && i < 3; ++i) wsum += base_w[i];
  for (int i = 0; i < components && i < 3; ++i) {
    GaussianComponent c;
    c.weight = base_w[i] / wsum;
    c.mean = Vec2::Zero();
    c.cov = square(base_s[i] * sigma) * Mat2::Identity();
    psf.push_back(c);
  }
  return psf;
}

/// Draws a catalog from the prior over the configured window and builds one
/// pixel-less ImageModel per band, all sharing the same affine WCS.
inline Scene make_scene(const SceneConfig& config, PriorParams prior) {
  if (!config.valid()) throw ModelError("make_scene: invalid config");
  Scene scene;
  prior.window.origin_deg = Vec2::Zero();
  prior.window.width_deg = config.window_deg;
  prior.window.height_deg = config.window_deg;

  Rng rng = make_rng_stream(config.seed, 0xa11ce);
  for (int s = 0; s < config.source_count; ++s) {
    SourceParams src = sample_source(prior, rng);
    while (src.ref_flux > config.max_flux) src = sample_source(prior, rng);
    scene.catalog.push_back(src);
  }

  AffineWcs wcs;
  wcs.linear = Mat2::Zero();
  wcs.linear(0, 0) = (config.width - 1) / config.window_deg;
  wcs.linear(1, 1) = (config.height - 1) / config.window_deg;
  wcs.ref_dir = Vec2::Zero();
  wcs.ref_px = Vec2::Zero();

  const int q = std::max(config.sky_knots, 2);
  for (int b = 0; b < config.bands; ++b) {
    ImageModel image;
    image.band = b;
    image.height = config.height;
    image.width = config.width;
    image.sky_grid = Eigen::MatrixXd::Constant(q, q, config.sky_level);
    image.calib = Eigen::VectorXd::Constant(config.width, config.calib_level);
    image.wcs = wcs;
    image.psf = make_psf(config.psf_sigma_px, config.psf_components);
    scene.images.push_back(std::move(image));
  }
  return scene;
}

/// Draws every pixel of every image as Poisson(lambda). Deterministic for a
/// given (scene, seed); each image owns an independent RNG stream.
inline void render(Scene& scene, const ProfileTable& table, std::uint64_t seed,
                   int ref_band = kDefaultRefBand) {
  for (auto& image : scene.images) {
    if (image.has_pixels()) throw ModelError("render: image already has pixels");
    const Eigen::ArrayXd rates = rate_grid(image, scene.catalog, table, ref_band);
    Rng rng = make_rng_stream(seed, 0x9e11d3, static_cast<std::uint64_t>(image.band));
    image.pixels.resize(rates.size());
    for (Eigen::Index i = 0; i < rates.size(); ++i) {
      if (!std::isfinite(rates[i])) throw ModelError("render: non-finite pixel rate");
      std::poisson_distribution<std::uint64_t> draw(rates[i]);
      image.pixels[i] = static_cast<std::uint32_t>(
          std::min<std::uint64_t>(draw(rng), kMaxPixelValue));
    }
    image.finalize_pixels();
  }
}

}  // namespace astrocat

#endif  // ASTROCAT_SIMULATOR_HPP_
