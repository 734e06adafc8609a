#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "gabor/fit.hpp"
#include "gabor/gram.hpp"
#include "gabor/spectrum.hpp"
#include "gabor/weight.hpp"

namespace gabor {

/// Circle |z| = radius traversed by `nodes` equispaced trapezoid nodes.
struct ContourSpec {
  double center = 0.0;
  double radius = 0.0;
  int nodes = 64;

  /// Geometric mean of the cluster top and the band bottom (band_min / 2
  /// when the cluster sits at or below zero). Throws GapMissing.
  static ContourSpec from_gap(const GapReport& gap, int nodes = 64);

  /// Throws GapMissing without a gap and InvalidContour unless
  /// cluster_max < radius < band_min and nodes >= 16.
  void validate(const GapReport& gap) const;
};

/// Per-column relative residual allowed for every resolvent solve.
inline constexpr double kSolveTolerance = 1e-10;

struct ProjectionResult {
  Eigen::MatrixXcd P;
  double idempotency_defect = 0.0;  // ||P^2 - P||_F
  double trace = 0.0;               // real part of tr P
  long rank_estimate = 0;           // trace rounded
  double residual = 0.0;            // ||G P||_F / ||G||_F
  double max_solve_residual = 0.0;
  double radius = 0.0;
  int nodes = 0;
};

/// (1/M) sum_j z_j (z_j I - G)^{-1}, z_j = rho e^{2 pi i j / M}, then
/// symmetrised. Each node is LU-factored and refined once; solves run in
/// parallel and are summed in node order. Throws SingularResolvent.
ProjectionResult contour_projection(const GramSection& G, const ContourSpec& c, const GapReport& gap, int threads = 0);

/// Variant for an already validated contour.
ProjectionResult contour_projection_unchecked(const Eigen::MatrixXcd& G, const ContourSpec& c, int threads = 0);

struct KernelVector {
  std::size_t index = 0;  // mu*, canonical position
  std::size_t id = 0;
  Eigen::VectorXcd c;     // P e_mu / ||P e_mu||
};

/// Column of largest norm (lowest index on ties). Throws RankZero.
KernelVector kernel_vector(const ProjectionResult& P, const PointSet& ps);

struct KernelDecay {
  LinearFit exponential;  // log|c| vs |lambda|
  LinearFit polynomial;   // log|c| vs log(1 + |lambda|)
  std::size_t points_used = 0;
  double l1v_sum = 0.0;   // sum |c_lambda| v(lambda)
};

/// Entries below 1e-14 are left out of both regressions. Throws TooFewPoints
/// with fewer than 8 usable entries.
KernelDecay decay_fit(const Eigen::VectorXcd& c, const PointSet& ps, const WeightSpec& v);

struct LemmaRow {
  double n = 0.0;
  std::size_t size = 0;
  double mass_inside = 0.0;  // sum_{|lambda| <= n} |c|^2
  double tail = 0.0;         // sum_{|lambda| > n} |c|^2
  double lhs = 0.0;          // a_n of the sub-section
  double slack = 0.0;        // 4 B ||G c||
  double rhs = 0.0;          // 2 B tail + slack
  bool pass = false;         // lhs <= rhs
  bool mass_condition = false;  // mass_inside >= 1/2
};

/// Checks a_n <= 2 B sum_{|lambda|>n} |c|^2 + 4 B ||G c|| for every n. A
/// failed mass precondition is reported per row, not thrown.
std::vector<LemmaRow> lemma_bound_check(const Eigen::VectorXcd& c, const GramSection& G_full,
                                        const std::vector<double>& sub_radii, double B_hat);

/// sup_{lambda mu} |((zI - G)^{-1})_{lambda mu}| v(lambda - mu). Throws SingularResolvent.
double resolvent_decay_probe(const GramSection& G, std::complex<double> z, const WeightSpec& v);

}  // namespace gabor
