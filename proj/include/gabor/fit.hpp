#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabor/spectrum.hpp"
#include "gabor/weight.hpp"

namespace gabor {

/// Ordinary least squares y = slope x + intercept.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Requires two or more points with distinct x.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

struct DecayModel {
  enum class Kind { PowerLaw, Stretched, GaussianType };
  Kind kind = Kind::PowerLaw;
  double b = 0.5;  // Stretched exponent

  static DecayModel power_law() { return {Kind::PowerLaw, 0.5}; }
  static DecayModel stretched(double b) { return {Kind::Stretched, b}; }
  static DecayModel gaussian_type() { return {Kind::GaussianType, 0.5}; }

  /// Regressor for radius n: log n, n^b or n^2.
  double regressor(double n) const;
  std::string name() const;
};

/// log a_n regressed on the model's regressor over above-floor rows.
struct DecayFit {
  DecayModel model;
  LinearFit fit;
  std::size_t points_used = 0;
  std::optional<double> floor_radius;  // smallest radius flagged below_floor
};

/// Throws TooFewPoints with fewer than 3 usable rows.
DecayFit fit_decay(const std::vector<RieszBounds>& sweep, const DecayModel& model);

struct BoundRow {
  double radius = 0.0;
  double a_n = 0.0;
  bool below_floor = false;
  double bound_sup = 0.0;
  double bound_sum = 0.0;
  double ratio_sup = 0.0;
  double ratio_sum = 0.0;
};

struct BoundVerdict {
  bool consistent = false;
  std::size_t argmax_row = 0;     // among above-floor rows
  std::size_t rows_considered = 0;
  double max_later_increase = 0.0;
};

struct BoundComparison {
  std::vector<BoundRow> rows;
  BoundVerdict sup;
  BoundVerdict sum;
  std::string note;
};

/// Heuristic bounded-constant witness: over above-floor rows the ratio peaks
/// within the first third and never grows more than tenfold afterwards.
BoundVerdict ratio_verdict(const std::vector<double>& ratios);

/// Ratios a_n / bound for matching rows of `sweep`, `sup` and `sum`.
BoundComparison bound_comparison(const std::vector<RieszBounds>& sweep, const std::vector<double>& sup,
                                 const std::vector<double>& sum);

}  // namespace gabor
