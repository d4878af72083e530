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
#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "astrocat/profile_table.hpp"
#include "astrocat/simulator.hpp"
#include "helpers.hpp"

using namespace astrocat;

TEST_CASE("empty scene renders valid pure-sky images") {
  SceneConfig config;
  config.height = config.width = 64;
  config.source_count = 0;
  config.sky_level = 100.0;
  config.seed = 21;
  Scene scene = make_scene(config, default_prior());
  CHECK(scene.catalog.empty());
  REQUIRE(static_cast<int>(scene.images.size()) == config.bands);
  for (const auto& image : scene.images) CHECK(image.valid());
  render(scene, galaxy_profile_table(), config.seed);

  // Poisson CLT: grid mean within 4 * sqrt(sky / npix) of the sky level.
  std::vector<double> values;
  for (auto v : scene.images[0].pixels) values.push_back(v);
  const double tol = 4.0 * std::sqrt(100.0 / values.size());
  CHECK(std::abs(oracle::mean(values) - 100.0) < tol);
  // Poisson: variance tracks the mean.
  CHECK(oracle::variance(values) == Catch::Approx(100.0).epsilon(0.15));
}

TEST_CASE("same seed reproduces the identical scene and render") {
  SceneConfig config;
  config.height = config.width = 48;
  config.source_count = 7;
  config.seed = 1234;
  Scene a = make_scene(config, default_prior());
  Scene b = make_scene(config, default_prior());
  REQUIRE(a.catalog.size() == b.catalog.size());
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    CHECK(a.catalog[i].is_star == b.catalog[i].is_star);
    CHECK(a.catalog[i].ref_flux == b.catalog[i].ref_flux);
    CHECK(a.catalog[i].direction == b.catalog[i].direction);
  }
  render(a, galaxy_profile_table(), config.seed);
  render(b, galaxy_profile_table(), config.seed);
  for (int n = 0; n < config.bands; ++n) CHECK(a.images[n].pixels == b.images[n].pixels);
}

TEST_CASE("requested source count is honored") {
  SceneConfig config;
  config.height = config.width = 32;
  config.source_count = 500;
  Scene scene = make_scene(config, default_prior());
  CHECK(scene.catalog.size() == 500);
  for (const auto& s : scene.catalog) {
    CHECK(s.ref_flux <= config.max_flux);
    CHECK(s.direction[0] >= 0.0);
    CHECK(s.direction[0] <= config.window_deg);
  }
}

TEST_CASE("a bright star dominates pixels near its center") {
  SceneConfig config;
  config.height = config.width = 96;
  config.source_count = 0;
  config.seed = 3;
  Scene scene = make_scene(config, default_prior());
  SourceParams star;
  star.is_star = true;
  star.direction = scene.images[0].wcs.to_sky(Vec2(48.0, 40.0));
  star.ref_flux = 40.0;
  star.colors = Eigen::VectorXd::Zero(4);
  scene.catalog.push_back(star);
  render(scene, galaxy_profile_table(), 3);
  const ImageModel& image = scene.images[2];
  int best_x = -1, best_y = -1;
  std::uint32_t best = 0;
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      if (image.pixel(x, y) > best) {
        best = image.pixel(x, y);
        best_x = x;
        best_y = y;
      }
  const double trunc = kTruncationSigmas * image.max_psf_sigma();
  CHECK(square(best_x - 48.0) + square(best_y - 40.0) <= square(trunc));
}

TEST_CASE("repeated renders of one pixel average to its rate") {
  SceneConfig config;
  config.height = config.width = 24;
  config.source_count = 3;
  config.seed = 77;
  Scene base = make_scene(config, default_prior());
  const double lambda =
      pixel_rate(base.images[1], base.catalog, galaxy_profile_table(), 12, 12);
  std::vector<double> draws;
  for (int rep = 0; rep < 200; ++rep) {
    Scene scene = make_scene(config, default_prior());
    render(scene, galaxy_profile_table(), 1000 + rep);
    draws.push_back(scene.images[1].pixel(12, 12));
  }
  const double se = std::sqrt(lambda / draws.size());
  CHECK(std::abs(oracle::mean(draws) - lambda) < 4.0 * se);
}
