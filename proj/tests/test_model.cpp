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
#include <random>

#include "astrocat/model.hpp"
#include "astrocat/profile_table.hpp"
#include "astrocat/simulator.hpp"
#include "helpers.hpp"

using namespace astrocat;

namespace {

double local_gauss2(double dx, double dy, const Mat2& cov) {
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  const double quad =
      (cov(1, 1) * dx * dx - 2 * cov(0, 1) * dx * dy + cov(0, 0) * dy * dy) / det;
  return std::exp(-0.5 * quad) / (2 * kPi * std::sqrt(det));
}

ImageModel test_image() {
  SceneConfig config;
  config.source_count = 0;
  Scene scene = make_scene(config, default_prior());
  return scene.images[2];
}

// Independent convolution oracle: 2-D quadrature of g_nm(mu) h_s(mu) over
// the plane, in pixel coordinates. Integrated one galaxy component at a
// time so the quadrature grid resolves the nearly-degenerate small scales.
double quadrature_galaxy_f(const ImageModel& image, const SourceParams& src,
                           const ProfileTable& table, int px, int py) {
  const Vec2 center = image.wcs.to_pixel(src.direction);
  const Mat2 scale = image.wcs.arcsec_to_pixel();
  const Mat2 sig_px = scale * galaxy_covariance(src.shape) * scale.transpose();
  Eigen::SelfAdjointEigenSolver<Mat2> es(sig_px);
  const double major_px = std::sqrt(es.eigenvalues().maxCoeff());
  const double w[2] = {src.shape.profile_weight, 1.0 - src.shape.profile_weight};
  double total = 0.0;
  for (const auto& psf_comp : image.psf) {
    Eigen::SelfAdjointEigenSolver<Mat2> pes(psf_comp.cov);
    const double psf_sigma = std::sqrt(pes.eigenvalues().maxCoeff());
    // As a function of t, the PSF factor is a Gaussian centered here.
    const Vec2 t0 = Vec2(px, py) - psf_comp.mean;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < table.component_count(); ++j) {
        const Mat2 comp_cov = table.scales(i, j) * sig_px;
        const double gal_sigma = std::sqrt(table.scales(i, j)) * major_px;
        // The product vanishes outside the overlap of the two supports.
        double lo_x = std::max(t0[0] - 9 * psf_sigma, center[0] - 9 * gal_sigma);
        double hi_x = std::min(t0[0] + 9 * psf_sigma, center[0] + 9 * gal_sigma);
        double lo_y = std::max(t0[1] - 9 * psf_sigma, center[1] - 9 * gal_sigma);
        double hi_y = std::min(t0[1] + 9 * psf_sigma, center[1] + 9 * gal_sigma);
        if (lo_x >= hi_x || lo_y >= hi_y) continue;
        auto integrand = [&](double tx, double ty) {
          return local_gauss2(px - (tx + psf_comp.mean[0]),
                              py - (ty + psf_comp.mean[1]), psf_comp.cov) *
                 local_gauss2(tx - center[0], ty - center[1], comp_cov);
        };
        total += psf_comp.weight * w[i] * table.weights(i, j) *
                 oracle::integrate2d(integrand, lo_x, hi_x, lo_y, hi_y, 70);
      }
  }
  return image.calib[px] * total;
}

}  // namespace

TEST_CASE("galaxy covariance matches hand-evaluated cases") {
  Mat2 id = galaxy_covariance(GalaxyShape{0.5, 0.0, 1.0, 1.0});
  CHECK((id - Mat2::Identity()).norm() < 1e-12);

  // angle 90 deg, radius 2, axis 0.5: rotating diag(4, 1) by 90 degrees.
  Mat2 rot = galaxy_covariance(GalaxyShape{0.5, 90.0, 2.0, 0.5});
  Mat2 expect;
  expect << 1.0, 0.0, 0.0, 4.0;
  CHECK((rot - expect).norm() < 1e-12);
}

TEST_CASE("galaxy covariance determinant is (axis * radius^2)^2") {
  Rng rng = make_rng_stream(7, 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    GalaxyShape s{u(rng), 180.0 * u(rng), 0.1 + 3.0 * u(rng), 0.05 + 0.9 * u(rng)};
    const Mat2 cov = galaxy_covariance(s);
    const double det = cov.determinant();
    CHECK(det == Catch::Approx(square(s.axis_ratio * square(s.half_light_radius)))
                     .margin(1e-10 * det));
  }
}

TEST_CASE("galaxy mixture endpoints and normalization") {
  const ProfileTable& table = galaxy_profile_table();
  GalaxyShape shape{1.0, 30.0, 1.5, 0.6};
  const Vec2 dir(0.01, 0.02);
  auto comps = galaxy_mixture(shape, dir, table);
  REQUIRE(static_cast<int>(comps.size()) == 2 * table.component_count());
  // profile_weight = 1: only the de Vaucouleurs row carries weight.
  for (int j = 0; j < table.component_count(); ++j) {
    CHECK(comps[j].weight == Catch::Approx(table.weights(0, j)));
    CHECK(comps[table.component_count() + j].weight == 0.0);
  }

  shape.profile_weight = 0.4;
  comps = galaxy_mixture(shape, dir, table);
  double wsum = 0.0;
  for (const auto& c : comps) wsum += c.weight;
  CHECK(wsum == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("galaxy mixture integrates to one over the sky plane") {
  const ProfileTable& table = galaxy_profile_table();
  const GalaxyShape shape{0.3, 75.0, 1.2, 0.4};
  const Vec2 dir(0.5, -0.25);
  auto comps = galaxy_mixture(shape, dir, table);
  double mass = 0.0;
  for (const auto& c : comps) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(c.cov);
    const double hw = 9.0 * std::sqrt(es.eigenvalues().maxCoeff());
    auto density = [&](double x, double y) {
      return local_gauss2(x - c.mean[0], y - c.mean[1], c.cov);
    };
    mass += c.weight * oracle::integrate2d(density, c.mean[0] - hw, c.mean[0] + hw,
                                           c.mean[1] - hw, c.mean[1] + hw, 80);
  }
  CHECK(mass == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("profile table reproduces the two radial profiles") {
  const ProfileTable& t = galaxy_profile_table();
  REQUIRE(t.valid());
  // Normalizing masses of the raw profiles on (0, 8].
  auto dev = [](double r) { return std::exp(-7.67 * (std::pow(r, 0.25) - 1.0)); };
  auto expo = [](double r) { return std::exp(-r); };
  auto radial_mass = [](auto f) {
    double acc = 0.0;
    const int n = 200000;
    const double h = 8.0 / n;
    for (int i = 0; i < n; ++i) {
      const double r = (i + 0.5) * h;
      acc += f(r) * 2 * kPi * r * h;
    }
    return acc;
  };
  const double masses[2] = {radial_mass(dev), radial_mass(expo)};
  const double tol[2] = {0.08, 0.02};
  for (int i = 0; i < 2; ++i) {
    for (double r = 0.05; r <= 6.0; r += 0.05) {
      double mix = 0.0;
      for (int j = 0; j < t.component_count(); ++j)
        mix += t.weights(i, j) * std::exp(-r * r / (2 * t.scales(i, j))) /
               (2 * kPi * t.scales(i, j));
      const double target = (i == 0 ? dev(r) : expo(r)) / masses[i];
      CHECK(std::abs(mix - target) <= tol[i] * target);
    }
  }
}

TEST_CASE("band fluxes follow the color chain") {
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  Eigen::VectorXd flux = band_fluxes(2.5, zero, 2);
  for (int b = 0; b < 5; ++b) CHECK(flux[b] == Catch::Approx(2.5));

  // B=5, reference band index 2, colors (0, 0, log 2, 0):
  // colors[2] = log(flux[2]/flux[3]) so flux[3] = 1/2.
  Eigen::VectorXd colors(4);
  colors << 0.0, 0.0, std::log(2.0), 0.0;
  flux = band_fluxes(1.0, colors, 2);
  CHECK(flux[3] == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(flux[0] == Catch::Approx(1.0));
  CHECK(flux[4] == Catch::Approx(0.5));
}

TEST_CASE("fluxes -> colors -> fluxes round trip") {
  Rng rng = make_rng_stream(11, 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd colors(4);
    for (int i = 0; i < 4; ++i) colors[i] = u(rng);
    const double ref = std::exp(u(rng) + 1.0);
    const Eigen::VectorXd flux = band_fluxes(ref, colors, 2);
    const Eigen::VectorXd back = colors_from_fluxes(flux);
    CHECK((back - colors).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(flux.minCoeff() > 0.0);
  }
}

TEST_CASE("point response peak, mass, and truncation") {
  ImageModel image = test_image();
  image.psf = {{1.0, Vec2::Zero(), Mat2(square(2.0) * Mat2::Identity())}};
  const Vec2 dir = image.wcs.to_sky(Vec2(64.0, 64.0));

  // Isotropic PSF centered exactly on the pixel.
  const double peak = point_response(image, dir, 64, 64);
  CHECK(peak == Catch::Approx(image.calib[64] / (2 * kPi * 4.0)).epsilon(1e-9));

  // Discrete sum over pixels recovers calib within 0.1%.
  double sum = 0.0;
  for (int y = 44; y <= 84; ++y)
    for (int x = 44; x <= 84; ++x) sum += point_response(image, dir, x, y);
  CHECK(sum == Catch::Approx(image.calib[64]).epsilon(1e-3));

  // Far beyond truncation.
  CHECK(point_response(image, dir, 124, 64) == 0.0);
}

TEST_CASE("star contribution is the point response and is symmetric") {
  ImageModel image = test_image();
  SourceParams star;
  star.is_star = true;
  star.direction = image.wcs.to_sky(Vec2(100.0, 100.0));
  star.colors = Eigen::VectorXd::Zero(4);
  for (int off : {0, 1, 3}) {
    CHECK(star_contribution(image, star, 100 + off, 100) ==
          point_response(image, star.direction, 100 + off, 100));
    CHECK(star_contribution(image, star, 100 + off, 100) ==
          Catch::Approx(star_contribution(image, star, 100 - off, 100)).epsilon(1e-12));
  }
  star.direction = image.wcs.to_sky(Vec2(0.0, 0.0));
  CHECK(star_contribution(image, star, 200, 200) == 0.0);
}

TEST_CASE("galaxy contribution tends to the star contribution as radius -> 0") {
  ImageModel image = test_image();
  const ProfileTable& table = galaxy_profile_table();
  SourceParams src;
  src.is_star = false;
  src.direction = image.wcs.to_sky(Vec2(77.3, 81.6));
  src.colors = Eigen::VectorXd::Zero(4);
  src.shape = {0.7, 25.0, 1e-4, 0.5};
  for (int off : {0, 1, 2}) {
    const double g = galaxy_contribution(image, src, table, 77 + off, 82);
    SourceParams star = src;
    star.is_star = true;
    const double s = star_contribution(image, star, 77 + off, 82);
    CHECK(g == Catch::Approx(s).epsilon(1e-5));
  }
}

TEST_CASE("galaxy contribution matches 2-D quadrature") {
  ImageModel image = test_image();
  const ProfileTable& table = galaxy_profile_table();
  Rng rng = make_rng_stream(23, 5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 6; ++trial) {
    SourceParams src;
    src.is_star = false;
    src.direction = image.wcs.to_sky(Vec2(100 + 40 * u(rng), 100 + 40 * u(rng)));
    src.colors = Eigen::VectorXd::Zero(4);
    src.shape = {u(rng), 180 * u(rng), 0.4 + 1.6 * u(rng), 0.15 + 0.8 * u(rng)};
    const Vec2 center = image.wcs.to_pixel(src.direction);
    const int px = static_cast<int>(center[0]) + static_cast<int>(3 * u(rng));
    const int py = static_cast<int>(center[1]) + static_cast<int>(3 * u(rng));
    const double analytic = galaxy_contribution(image, src, table, px, py);
    const double numeric = quadrature_galaxy_f(image, src, table, px, py);
    CHECK(analytic == Catch::Approx(numeric).epsilon(1e-4));
  }
}

TEST_CASE("profile table row renormalization leaves output unchanged") {
  ImageModel image = test_image();
  ProfileTable doubled = galaxy_profile_table();
  doubled.weights *= 2.0;
  for (int i = 0; i < 2; ++i) doubled.weights.row(i) /= doubled.weights.row(i).sum();
  SourceParams src;
  src.is_star = false;
  src.direction = image.wcs.to_sky(Vec2(50.0, 50.0));
  src.colors = Eigen::VectorXd::Zero(4);
  src.shape = {0.5, 10.0, 1.0, 0.5};
  CHECK(galaxy_contribution(image, src, galaxy_profile_table(), 51, 50) ==
        Catch::Approx(galaxy_contribution(image, src, doubled, 51, 50)).epsilon(1e-14));
}

TEST_CASE("pixel rate: sky only, truncation, additivity") {
  ImageModel image = test_image();
  const ProfileTable& table = galaxy_profile_table();
  CHECK(pixel_rate(image, {}, table, 10, 10) == Catch::Approx(200.0));

  SourceParams bright;
  bright.is_star = true;
  bright.direction = image.wcs.to_sky(Vec2(10.0, 10.0));
  bright.ref_flux = 5000.0;
  bright.colors = Eigen::VectorXd::Zero(4);
  CHECK(pixel_rate(image, {bright}, table, 200, 200) == Catch::Approx(200.0));

  SourceParams a = bright, b = bright;
  a.direction = image.wcs.to_sky(Vec2(98.0, 100.0));
  a.ref_flux = 11.0;
  b.is_star = false;
  b.direction = image.wcs.to_sky(Vec2(102.0, 100.0));
  b.ref_flux = 7.0;
  b.shape = {0.4, 60.0, 1.1, 0.7};
  const double sky = image.sky_at(100, 100);
  const double both = pixel_rate(image, {a, b}, table, 100, 100);
  const double ra = pixel_rate(image, {a}, table, 100, 100);
  const double rb = pixel_rate(image, {b}, table, 100, 100);
  CHECK(both == Catch::Approx(ra + rb - sky).margin(1e-10));
}

TEST_CASE("flux conservation over the full grid") {
  ImageModel image = test_image();
  const ProfileTable& table = galaxy_profile_table();
  for (bool is_star : {true, false}) {
    SourceParams src;
    src.is_star = is_star;
    src.direction = image.wcs.to_sky(Vec2(128.0, 128.0));
    src.ref_flux = 3.0;
    src.colors = Eigen::VectorXd::Zero(4);
    src.shape = {0.35, 140.0, 2.0, 0.55};
    Eigen::ArrayXd grid = rate_grid(image, {src}, table);
    double total = 0.0;
    for (int y = 0; y < image.height; ++y)
      for (int x = 0; x < image.width; ++x)
        total += grid[static_cast<std::size_t>(y) * image.width + x] - image.sky_at(x, y);
    CHECK(total == Catch::Approx(image.calib[0] * src.ref_flux).epsilon(5e-3));
  }
}

TEST_CASE("log likelihood: single pixel hand case") {
  ImageModel image;
  image.band = 0;
  image.height = image.width = 1;
  image.sky_grid = Eigen::MatrixXd::Constant(2, 2, 1.0);
  image.calib = Eigen::VectorXd::Constant(1, 1.0);
  image.psf = {{1.0, Vec2::Zero(), Mat2::Identity()}};
  image.pixels = {1};
  image.finalize_pixels();
  // lambda = 1, x = 1: -1 + 1*log 1 - log(1!) = -1.
  CHECK(log_likelihood(image, {}, galaxy_profile_table()) == Catch::Approx(-1.0));
}

TEST_CASE("log likelihood matches a term-by-term oracle") {
  SceneConfig config;
  config.height = config.width = 16;
  config.source_count = 2;
  config.seed = 99;
  Scene scene = make_scene(config, default_prior());
  render(scene, galaxy_profile_table(), 99);
  const ImageModel& image = scene.images[1];
  const double ll = log_likelihood(image, scene.catalog, galaxy_profile_table());
  double expect = 0.0;
  for (int y = 0; y < 16; ++y)
    for (int x = 0; x < 16; ++x) {
      const double lam = pixel_rate(image, scene.catalog, galaxy_profile_table(), x, y);
      const double count = image.pixel(x, y);
      expect += -lam + count * std::log(lam) - std::lgamma(count + 1.0);
    }
  CHECK(ll == Catch::Approx(expect).margin(1e-10 * std::abs(expect)));
}

TEST_CASE("negligible-flux source leaves the likelihood unchanged") {
  SceneConfig config;
  config.height = config.width = 32;
  config.source_count = 1;
  config.seed = 5;
  Scene scene = make_scene(config, default_prior());
  render(scene, galaxy_profile_table(), 5);
  const double base = log_likelihood(scene.images[0], scene.catalog, galaxy_profile_table());
  auto extended = scene.catalog;
  SourceParams ghost;
  ghost.is_star = true;
  ghost.direction = scene.images[0].wcs.to_sky(Vec2(16.0, 16.0));
  ghost.ref_flux = 1e-300;
  ghost.colors = Eigen::VectorXd::Zero(4);
  extended.push_back(ghost);
  CHECK(log_likelihood(scene.images[0], extended, galaxy_profile_table()) ==
        Catch::Approx(base));
}

TEST_CASE("log likelihood peaks at the generating flux on a noiseless scene") {
  SceneConfig config;
  config.height = config.width = 48;
  config.source_count = 0;
  Scene scene = make_scene(config, default_prior());
  SourceParams star;
  star.is_star = true;
  star.direction = scene.images[2].wcs.to_sky(Vec2(24.0, 24.0));
  star.ref_flux = 5.0;
  star.colors = Eigen::VectorXd::Zero(4);
  ImageModel image = scene.images[2];
  const Eigen::ArrayXd rates = rate_grid(image, {star}, galaxy_profile_table());
  image.pixels.resize(rates.size());
  for (Eigen::Index i = 0; i < rates.size(); ++i)
    image.pixels[i] = static_cast<std::uint32_t>(std::llround(rates[i]));
  image.finalize_pixels();

  double best_flux = 0.0, best_ll = kNegInf;
  for (double flux = 3.0; flux <= 7.0 + 1e-9; flux += 0.25) {
    SourceParams probe = star;
    probe.ref_flux = flux;
    const double ll = log_likelihood(image, {probe}, galaxy_profile_table());
    if (ll > best_ll) {
      best_ll = ll;
      best_flux = flux;
    }
  }
  CHECK(std::abs(best_flux - 5.0) <= 0.25 + 1e-9);
}
