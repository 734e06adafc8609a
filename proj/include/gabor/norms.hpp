#pragma once

#include "gabor/tf_point.hpp"
#include "gabor/weight.hpp"
#include "gabor/window.hpp"

namespace gabor {

struct NormEstimate {
  double value = 0.0;
  /// Share of the total coming from the outermost shell (or the maximiser's
  /// radius for the sup estimate).
  double last_shell = 0.0;
  long points = 0;
  TFPoint argmax;
};

/// h^{2d} sum of |V_phi g(z)| v(z) over hZ^{2d} within B_R. Throws
/// NotConverged when the shell R - 1 < |z| <= R carries more than 1%.
NormEstimate m1v_norm_estimate(const WindowSpec& g, const WeightSpec& v, double R, double h);

/// sum over |k|_inf <= K of v(k) sup_{k + [0,1]^{2d}} |A_g|, each supremum
/// taken over a subgrid^{2d} lattice including the cube corners. Throws
/// NotConverged when the cubes with |k|_inf = K carry more than 1%.
NormEstimate amalgam_norm_estimate(const WindowSpec& g, const WeightSpec& v, int K, int subgrid = 8);

/// max of |V_phi g(z)| v(z) over the same grid as m1v_norm_estimate.
NormEstimate m_inf_v_norm_estimate(const WindowSpec& g, const WeightSpec& v, double R, double h);

}  // namespace gabor
