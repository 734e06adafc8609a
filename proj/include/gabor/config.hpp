#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "gabor/pointset.hpp"
#include "gabor/weight.hpp"
#include "gabor/window.hpp"

namespace gabor {

/// Everything a run needs. Defaults reproduce the density-2 Gaussian demo.
struct RunConfig {
  // [window]
  std::string window_kind = "gaussian";  // gaussian | sampled
  int dimension = 1;
  bool normalized = false;
  std::string window_file;

  // [lattice] / [pointset]; an explicit point file replaces the lattice.
  std::vector<double> generator;  // row-major 2d x 2d; empty = (1/sqrt 2) I
  std::string pointset_file;

  // [weight]
  std::string weight_kind = "subexponential";
  double weight_s = 2.0;
  double weight_a = 1.0;
  double weight_b = 0.5;

  // [sweep]
  std::vector<double> radii;  // empty = 0.5, 1.0, ..., 4.0
  double bound_radius = 40.0;

  // [gap]
  double gap_threshold = 1e-4;  // relative to the largest eigenvalue
  double gap_ratio = 2.0;

  // [contour]
  double contour_radius = 0.0;  // 0 = derived from the gap
  int contour_nodes = 64;

  // [kernel]
  double kernel_radius = 4.0;
  std::vector<double> lemma_radii{1.5, 2.0, 2.5};

  // [caps], [output], [run]
  std::size_t max_points = 20000;
  std::string out_dir = "out";
  bool plot = false;
  std::string csv_dir;
  std::uint64_t seed = 1;
  int threads = 0;

  /// Directory that relative file paths are resolved against.
  std::filesystem::path base_dir = ".";

  /// Fills defaults and checks ranges. Throws ConfigError naming the key.
  void validate();

  std::filesystem::path resolve(const std::string& file) const;
};

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// TOML rendering of every setting, defaults included.
std::string print_config(const RunConfig& cfg);

WindowSpec make_window(const RunConfig& cfg);
WeightSpec make_weight(const RunConfig& cfg);
LatticeSpec make_lattice(const RunConfig& cfg);

/// The configured point set truncated to radius n (lattice enumeration, or
/// the explicit file restricted to the ball).
PointSet make_pointset(const RunConfig& cfg, double n);

}  // namespace gabor
