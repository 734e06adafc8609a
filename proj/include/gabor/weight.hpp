#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gabor/tf_point.hpp"

namespace gabor {

class PointSet;

/// Radial weight v(z) = v(|z|) on R^{2d}. Every family has v(0) = 1 and is
/// nondecreasing in |z|.
struct WeightSpec {
  enum class Kind { Constant, Polynomial, SubExponential, Exponential };

  Kind kind = Kind::Constant;
  double s = 0.0;  // Polynomial: (1 + |z|)^s
  double a = 0.0;  // SubExponential / Exponential rate
  double b = 0.0;  // SubExponential exponent in (0, 1)

  static WeightSpec constant();
  static WeightSpec polynomial(double s);
  static WeightSpec subexponential(double a, double b);
  static WeightSpec exponential(double a);

  /// log v at radius r >= 0. Always finite.
  double log_value(double r) const;
  std::string name() const;
};

struct WeightValue {
  double value;
  bool overflow;  // exponent exceeded 700; value is +inf
};

WeightValue eval(const WeightSpec& v, const TFPoint& z);
WeightValue eval_radius(const WeightSpec& v, double r);

/// v(r)^{-2} computed in log space (underflows to exactly zero).
double inverse_square(const WeightSpec& v, double r);

struct SubmultiplicativeResult {
  bool pass;
  double worst_ratio;  // max of v(z1 + z2) / (v(z1) v(z2))
  int trials;
};

/// Random pairs with |z_i| <= 10 in R^{2d}.
SubmultiplicativeResult submultiplicative_check(const WeightSpec& v, int trials, std::uint64_t seed = 1, int d = 1);

struct SubconvolutiveResult {
  bool pass;
  bool converged;            // boundary shell share of every tested convolution <= 2%
  double constant;           // max_z (v^-1 * v^-1)(z) v(z) on step h
  double refined_constant;   // same on step h/2
  double boundary_fraction;  // worst boundary shell share on step h
  double refinement_change;  // |refined - constant| / refined
  double step;               // grid step of `constant`
};

/// Discrete convolution on the grid h Z^{2d} within B_R. The constant is
/// probed for z = (m, 0, ..., 0), m = 0, 1, ..., R/2. The step is halved from
/// h until two levels agree to 5% (or the grid grows too large). Passes when
/// converged, finite and stable.
SubconvolutiveResult subconvolutive_check(const WeightSpec& v, double h, double R, int d = 1);

/// v(n z)^{1/n} for each n, evaluated as exp(log v(n|z|) / n).
std::vector<double> grs_profile(const WeightSpec& v, const TFPoint& z, const std::vector<long long>& n_list);

/// sup_{|lambda| > n} v(lambda)^{-2}, exact over the infinite tail because v
/// is radial and nondecreasing: v(r_next)^{-2} with r_next the smallest
/// enumerated radius beyond n. Throws NoTailPoint.
double bound_sup(const WeightSpec& v, const PointSet& ps, double n);

/// Smallest enumerated radius strictly beyond n.
double next_radius(const PointSet& ps, double n);

struct SumBound {
  double sum;        // sum over n < |lambda| <= R_max of v(lambda)^{-2}
  double remainder;  // upper bound on the sum over |lambda| > R_max
  double total() const { return sum + remainder; }
};

/// Tail sum of v^{-2} with an integral-comparison remainder that uses the
/// relative-separation constant. Throws RemainderDominates when the remainder
/// exceeds the enumerated sum. relsep <= 0 computes it from ps.
SumBound bound_sum(const WeightSpec& v, const PointSet& ps, double n, int relsep = 0);

/// The remainder part of bound_sum on its own: an upper bound on
/// sum_{|lambda| > R} v(lambda)^{-2} for a set in R^{2d} with relative
/// separation constant relsep (+inf when the tail diverges).
double tail_remainder(const WeightSpec& v, double R, int relsep, int d);

}  // namespace gabor
