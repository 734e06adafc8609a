#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "gabor/tf_point.hpp"

namespace gabor {

/// Lattice Lambda = A Z^{2d}; the generator is stored row-major.
struct LatticeSpec {
  int d = 1;
  std::vector<double> generator;

  static LatticeSpec make(int d, std::vector<double> row_major);
  static LatticeSpec scaled_identity(int d, double scale);

  int size() const noexcept { return 2 * d; }
  double at(int row, int col) const { return generator[static_cast<std::size_t>(row * size() + col)]; }
  TFPoint map(const std::vector<long>& k) const;
  /// A^{-1} lambda, for round-trip checks.
  std::vector<double> preimage(const TFPoint& lambda) const;
  /// Induced infinity norm of A^{-1}.
  double inverse_inf_norm() const;
};

/// Ball-truncated point set in canonical order: ascending |lambda|, ties
/// broken lexicographically on (x_1..x_d, xi_1..xi_d). Under that ordering
/// the section of any smaller radius is a prefix.
class PointSet {
 public:
  PointSet(std::vector<TFPoint> points, double radius, std::optional<LatticeSpec> source = std::nullopt);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  int dimension() const noexcept { return dimension_; }
  double radius() const noexcept { return radius_; }
  const std::vector<TFPoint>& points() const noexcept { return points_; }
  const TFPoint& operator[](std::size_t i) const { return points_[i]; }
  double norm(std::size_t i) const { return norms_[i]; }
  const std::vector<double>& norms() const noexcept { return norms_; }
  /// Stable ids; equal to the canonical position in the generating enumeration.
  std::size_t id(std::size_t i) const { return ids_[i]; }
  const std::optional<LatticeSpec>& lattice() const noexcept { return source_; }

  /// Number of points with |lambda| <= n (a prefix length).
  std::size_t count_within(double n) const;
  /// The section of radius n <= radius(); ids are preserved.
  PointSet truncated(double n) const;

 private:
  PointSet() = default;

  std::vector<TFPoint> points_;
  std::vector<double> norms_;
  std::vector<std::size_t> ids_;
  double radius_ = 0.0;
  int dimension_ = 1;
  std::optional<LatticeSpec> source_;
};

/// Membership tolerance for the closed ball |lambda| <= n.
inline constexpr double kBallTolerance = 1e-12;

/// All points A k with |A k| <= n. Throws TooManyPoints above cap.
PointSet enumerate_lattice_in_ball(const LatticeSpec& lattice, double n, std::size_t cap = 20000);

/// Explicit point cloud truncated to |lambda| <= radius (radius < 0 keeps
/// everything and uses the largest norm).
PointSet explicit_pointset(std::vector<TFPoint> points, double radius = -1.0);

/// Reads columns x_1..x_d, xi_1..xi_d.
PointSet read_pointset_csv(const std::filesystem::path& path, int d, double radius = -1.0);

/// mask_j lists the indices with |lambda| <= radii_j. Throws RadiiNotAscending.
std::vector<std::vector<std::size_t>> nested_masks(const PointSet& ps, const std::vector<double>& radii);

/// max over centres z of #{lambda : |lambda - z| <= 1}, centres being the
/// points themselves plus a grid of step min(1/2, d_min/2) covering the ball.
int relative_separation(const PointSet& ps);

/// Smallest distance between two distinct points (+inf for a single point).
double minimal_distance(const PointSet& ps);

}  // namespace gabor
