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
#ifndef ASTROCAT_IO_HPP_
#define ASTROCAT_IO_HPP_

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "astrocat/priors.hpp"
#include "astrocat/types.hpp"

namespace astrocat {

using Json = nlohmann::json;

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog CSV: one row per source, SourceParams fields in order.
// ---------------------------------------------------------------------------

inline void write_catalog_csv(const std::string& path,
                              const std::vector<SourceParams>& catalog, int bands) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  out << "is_star,lon_deg,lat_deg,ref_flux_nmgy";
  for (int b = 0; b + 1 < bands; ++b) out << ",color_" << b;
  out << ",profile_weight,angle_deg,radius_arcsec,axis_ratio\n";
  for (const auto& s : catalog) {
    out << (s.is_star ? 1 : 0) << ',' << detail::fmt_double(s.direction[0]) << ','
        << detail::fmt_double(s.direction[1]) << ',' << detail::fmt_double(s.ref_flux);
    for (int b = 0; b + 1 < bands; ++b) out << ',' << detail::fmt_double(s.colors[b]);
    out << ',' << detail::fmt_double(s.shape.profile_weight) << ','
        << detail::fmt_double(s.shape.angle_deg) << ','
        << detail::fmt_double(s.shape.half_light_radius) << ','
        << detail::fmt_double(s.shape.axis_ratio) << '\n';
  }
}

inline std::vector<SourceParams> read_catalog_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty catalog: " + path);
  int columns = 1;
  for (char c : line) columns += (c == ',');
  const int bands = columns - 8 + 1;
  if (bands < 2) throw IoError("malformed catalog header: " + path);
  std::vector<SourceParams> catalog;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) vals.push_back(std::stod(cell));
    if (static_cast<int>(vals.size()) != columns) throw IoError("bad catalog row: " + line);
    SourceParams s;
    s.is_star = vals[0] != 0.0;
    s.direction = Vec2(vals[1], vals[2]);
    s.ref_flux = vals[3];
    s.colors.resize(bands - 1);
    for (int b = 0; b + 1 < bands; ++b) s.colors[b] = vals[4 + b];
    const int off = 4 + bands - 1;
    s.shape.profile_weight = vals[off];
    s.shape.angle_deg = vals[off + 1];
    s.shape.half_light_radius = vals[off + 2];
    s.shape.axis_ratio = vals[off + 3];
    catalog.push_back(std::move(s));
  }
  return catalog;
}

// ---------------------------------------------------------------------------
// 16-bit binary PGM (P5, maxval 65535, big-endian), row-major.
// ---------------------------------------------------------------------------

inline void write_pgm16(const std::string& path, int width, int height,
                        const std::vector<std::uint32_t>& pixels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out << "P5\n" << width << ' ' << height << "\n65535\n";
  std::vector<unsigned char> buf(pixels.size() * 2);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const std::uint32_t v = pixels[i];
    if (v > 65535) throw IoError("pixel value exceeds 16-bit range");
    buf[2 * i] = static_cast<unsigned char>(v >> 8);
    buf[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
}

inline std::vector<std::uint32_t> read_pgm16(const std::string& path, int& width,
                                             int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string magic;
  int maxval = 0;
  in >> magic >> width >> height >> maxval;
  if (magic != "P5" || maxval != 65535) throw IoError("not a 16-bit P5 PGM: " + path);
  in.get();  // single whitespace after maxval
  std::vector<unsigned char> buf(static_cast<std::size_t>(width) * height * 2);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (in.gcount() != static_cast<std::streamsize>(buf.size()))
    throw IoError("truncated PGM: " + path);
  std::vector<std::uint32_t> pixels(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < pixels.size(); ++i)
    pixels[i] = (static_cast<std::uint32_t>(buf[2 * i]) << 8) | buf[2 * i + 1];
  return pixels;
}

// ---------------------------------------------------------------------------
// Image nuisance parameters as JSON (pixels live in the PGM).
// ---------------------------------------------------------------------------

inline Json image_meta_to_json(const ImageModel& image) {
  Json j;
  j["band"] = image.band;
  j["height"] = image.height;
  j["width"] = image.width;
  j["sky_grid"] = Json::array();
  for (int r = 0; r < image.sky_grid.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < image.sky_grid.cols(); ++c) row.push_back(image.sky_grid(r, c));
    j["sky_grid"].push_back(row);
  }
  j["calib"] = std::vector<double>(image.calib.data(), image.calib.data() + image.calib.size());
  j["wcs"] = {{"linear", {image.wcs.linear(0, 0), image.wcs.linear(0, 1),
                          image.wcs.linear(1, 0), image.wcs.linear(1, 1)}},
              {"ref_dir", {image.wcs.ref_dir[0], image.wcs.ref_dir[1]}},
              {"ref_px", {image.wcs.ref_px[0], image.wcs.ref_px[1]}}};
  j["psf"] = Json::array();
  for (const auto& c : image.psf)
    j["psf"].push_back({{"weight", c.weight},
                        {"mean", {c.mean[0], c.mean[1]}},
                        {"cov", {c.cov(0, 0), c.cov(0, 1), c.cov(1, 0), c.cov(1, 1)}}});
  return j;
}

inline ImageModel image_meta_from_json(const Json& j) {
  ImageModel image;
  image.band = j.at("band").get<int>();
  image.height = j.at("height").get<int>();
  image.width = j.at("width").get<int>();
  const auto& grid = j.at("sky_grid");
  image.sky_grid.resize(grid.size(), grid[0].size());
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c) image.sky_grid(r, c) = grid[r][c];
  const auto calib = j.at("calib").get<std::vector<double>>();
  image.calib = Eigen::Map<const Eigen::VectorXd>(calib.data(), calib.size());
  const auto& wcs = j.at("wcs");
  image.wcs.linear << wcs.at("linear")[0], wcs.at("linear")[1], wcs.at("linear")[2],
      wcs.at("linear")[3];
  image.wcs.ref_dir = Vec2(wcs.at("ref_dir")[0], wcs.at("ref_dir")[1]);
  image.wcs.ref_px = Vec2(wcs.at("ref_px")[0], wcs.at("ref_px")[1]);
  for (const auto& c : j.at("psf")) {
    GaussianComponent g;
    g.weight = c.at("weight");
    g.mean = Vec2(c.at("mean")[0], c.at("mean")[1]);
    g.cov << c.at("cov")[0], c.at("cov")[1], c.at("cov")[2], c.at("cov")[3];
    image.psf.push_back(g);
  }
  return image;
}

inline void write_image(const std::string& dir, const ImageModel& image) {
  const std::string stem = dir + "/image_" + std::to_string(image.band);
  std::ofstream meta(stem + ".meta.json");
  if (!meta) throw IoError("cannot open " + stem + ".meta.json");
  meta << image_meta_to_json(image).dump(2) << '\n';
  if (image.has_pixels()) write_pgm16(stem + ".pgm16", image.width, image.height, image.pixels);
}

inline ImageModel read_image(const std::string& dir, int band) {
  const std::string stem = dir + "/image_" + std::to_string(band);
  std::ifstream meta(stem + ".meta.json");
  if (!meta) throw IoError("cannot open " + stem + ".meta.json");
  Json j;
  meta >> j;
  ImageModel image = image_meta_from_json(j);
  if (std::filesystem::exists(stem + ".pgm16")) {
    int w = 0, h = 0;
    image.pixels = read_pgm16(stem + ".pgm16", w, h);
    if (w != image.width || h != image.height) throw IoError("PGM size mismatch: " + stem);
    image.finalize_pixels();
  }
  return image;
}

// ---------------------------------------------------------------------------
// PriorParams as a human-readable key-value file.
// ---------------------------------------------------------------------------

inline void write_priors_text(const std::string& path, const PriorParams& prior) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path);
  auto put = [&](const std::string& key, double v) {
    out << key << " = " << detail::fmt_double(v) << '\n';
  };
  auto put_vec = [&](const std::string& key, const Eigen::VectorXd& v) {
    out << key << " =";
    for (int i = 0; i < v.size(); ++i) out << ' ' << detail::fmt_double(v[i]);
    out << '\n';
  };
  const char* type_name[2] = {"galaxy", "star"};
  put("star_prob", prior.star_prob);
  for (int i = 0; i < 2; ++i) {
    const std::string t = type_name[i];
    put("flux." + t + ".log_mean", prior.flux[i].log_mean);
    put("flux." + t + ".log_var", prior.flux[i].log_var);
    const auto& g = prior.color_gmm[i];
    put("color_gmm." + t + ".components", g.component_count());
    for (int c = 0; c < g.component_count(); ++c) {
      const std::string key = "color_gmm." + t + "." + std::to_string(c);
      put(key + ".weight", g.weights[c]);
      put_vec(key + ".mean", g.means[c]);
      Eigen::VectorXd flat(g.covs[c].size());
      for (int r = 0, k = 0; r < g.covs[c].rows(); ++r)
        for (int cc = 0; cc < g.covs[c].cols(); ++cc) flat[k++] = g.covs[c](r, cc);
      put_vec(key + ".cov", flat);
    }
  }
  put("radius.log_mean", prior.radius.log_mean);
  put("radius.log_var", prior.radius.log_var);
  put("profile.alpha", prior.profile.alpha);
  put("profile.beta", prior.profile.beta);
  put("axis.alpha", prior.axis.alpha);
  put("axis.beta", prior.axis.beta);
  put("window.lon0", prior.window.origin_deg[0]);
  put("window.lat0", prior.window.origin_deg[1]);
  put("window.width_deg", prior.window.width_deg);
  put("window.height_deg", prior.window.height_deg);
}

inline PriorParams read_priors_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::map<std::string, std::vector<double>> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::stringstream vals(line.substr(eq + 1));
    std::vector<double> vs;
    double v;
    while (vals >> v) vs.push_back(v);
    kv[key] = vs;
  }
  auto get = [&](const std::string& key) -> double {
    auto it = kv.find(key);
    if (it == kv.end() || it->second.empty()) throw IoError("missing prior key: " + key);
    return it->second[0];
  };
  auto get_vec = [&](const std::string& key) -> Eigen::VectorXd {
    auto it = kv.find(key);
    if (it == kv.end()) throw IoError("missing prior key: " + key);
    return Eigen::Map<const Eigen::VectorXd>(it->second.data(), it->second.size());
  };
  PriorParams prior;
  prior.star_prob = get("star_prob");
  const char* type_name[2] = {"galaxy", "star"};
  for (int i = 0; i < 2; ++i) {
    const std::string t = type_name[i];
    prior.flux[i] = {get("flux." + t + ".log_mean"), get("flux." + t + ".log_var")};
    const int n = static_cast<int>(get("color_gmm." + t + ".components"));
    GmmPrior g;
    g.weights.resize(n);
    for (int c = 0; c < n; ++c) {
      const std::string key = "color_gmm." + t + "." + std::to_string(c);
      g.weights[c] = get(key + ".weight");
      g.means.push_back(get_vec(key + ".mean"));
      const Eigen::VectorXd flat = get_vec(key + ".cov");
      const int d = static_cast<int>(g.means.back().size());
      Eigen::MatrixXd cov(d, d);
      for (int r = 0, k = 0; r < d; ++r)
        for (int cc = 0; cc < d; ++cc) cov(r, cc) = flat[k++];
      g.covs.push_back(cov);
    }
    prior.color_gmm[i] = std::move(g);
  }
  prior.radius = {get("radius.log_mean"), get("radius.log_var")};
  prior.profile = {get("profile.alpha"), get("profile.beta")};
  prior.axis = {get("axis.alpha"), get("axis.beta")};
  prior.window.origin_deg = Vec2(get("window.lon0"), get("window.lat0"));
  prior.window.width_deg = get("window.width_deg");
  prior.window.height_deg = get("window.height_deg");
  return prior;
}

}  // namespace astrocat

#endif  // ASTROCAT_IO_HPP_
