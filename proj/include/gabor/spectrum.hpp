#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gabor/gram.hpp"
#include "gabor/pointset.hpp"
#include "gabor/window.hpp"

namespace gabor {

/// Ascending eigenvalues of a Hermitian matrix (Householder tridiagonalisation
/// followed by implicit symmetric QR). Throws NoConvergence.
std::vector<double> eigs_hermitian(const Eigen::MatrixXcd& G);
std::vector<double> eigs_hermitian(const GramSection& G);

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // orthonormal columns
};

Eigensystem eigensystem_hermitian(const Eigen::MatrixXcd& G);

/// Sum of u u^* over eigenpairs with eigenvalue below rho.
Eigen::MatrixXcd eigen_projection(const Eigen::MatrixXcd& G, double rho);

struct RieszBounds {
  double radius = 0.0;
  std::size_t size = 0;
  double a_n = 0.0;
  double b_n = 0.0;
  double floor = 0.0;  // eps_mach * N * b_n
  bool below_floor = false;
};

double numerical_floor(std::size_t n, double b_n);

/// Extremal eigenvalues of a section.
RieszBounds riesz_bounds(const GramSection& G, double radius);

/// One record per radius, each computed on the leading principal submatrix
/// of `full` for that radius. Radii are processed in parallel; the result is
/// in radius order. Throws RadiiNotAscending.
std::vector<RieszBounds> riesz_sweep(const GramSection& full, const std::vector<double>& radii, int threads = 0);

/// Enumerates the largest section, assembles its Gram and sweeps.
std::vector<RieszBounds> riesz_sweep(const WindowSpec& w, const LatticeSpec& lat, const std::vector<double>& radii,
                                     std::size_t cap = 20000, int threads = 0);

/// Default zero-cluster threshold relative to the top eigenvalue.
inline constexpr double kDefaultGapThreshold = 1e-4;
/// Default required ratio between the band bottom and the cluster top.
inline constexpr double kDefaultGapRatio = 2.0;

struct GapReport {
  std::vector<double> eigenvalues;
  double threshold = 0.0;
  double min_ratio = kDefaultGapRatio;
  std::vector<double> cluster_zero;  // eigenvalues < threshold
  double cluster_max = 0.0;          // largest clustered eigenvalue (0 if empty)
  double band_min = 0.0;             // A-hat
  double band_max = 0.0;             // B-hat
  double separation = 0.0;           // band_min / cluster_max (inf for a cluster <= 0)
  bool gap_found = false;
};

/// Splits the spectrum at `threshold`. A gap is found when both parts are
/// nonempty and band_min >= min_ratio * cluster_max.
GapReport detect_gap(const std::vector<double>& eigs, double threshold, double min_ratio = kDefaultGapRatio);

}  // namespace gabor
