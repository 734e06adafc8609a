#pragma once

#include <span>
#include <vector>

namespace gabor {

/// A point z = (x, xi) of the time-frequency plane R^{2d}.
struct TFPoint {
  std::vector<double> x;
  std::vector<double> xi;

  TFPoint() = default;
  TFPoint(std::vector<double> time, std::vector<double> freq);

  static TFPoint origin(int d);
  /// Builds a point from 2d coordinates laid out as (x_1..x_d, xi_1..xi_d).
  static TFPoint from_coords(std::span<const double> coords);

  int dimension() const noexcept { return static_cast<int>(x.size()); }
  double norm() const noexcept;
  double norm_squared() const noexcept;
  std::vector<double> coords() const;

  friend TFPoint operator-(const TFPoint& a, const TFPoint& b);
  friend TFPoint operator+(const TFPoint& a, const TFPoint& b);
  friend bool operator==(const TFPoint&, const TFPoint&) = default;
};

/// 1-d convenience constructor.
TFPoint tf(double x, double xi);

}  // namespace gabor
