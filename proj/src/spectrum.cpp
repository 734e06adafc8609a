#include "gabor/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "gabor/parallel.hpp"

namespace gabor {
namespace {

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve(const Eigen::MatrixXcd& G, int options) {
  if (G.rows() != G.cols()) throw Error(ErrorCode::InvalidArgument, "eigensolver needs a square matrix");
  if (G.rows() == 0) throw Error(ErrorCode::InvalidArgument, "eigensolver needs a nonempty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, options);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NoConvergence, "Hermitian eigensolver hit its iteration cap (N=" + std::to_string(G.rows()) + ")");
  }
  return es;
}

}  // namespace

std::vector<double> eigs_hermitian(const Eigen::MatrixXcd& G) {
  const auto es = solve(G, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> eigs_hermitian(const GramSection& G) { return eigs_hermitian(G.entries()); }

Eigensystem eigensystem_hermitian(const Eigen::MatrixXcd& G) {
  const auto es = solve(G, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXcd eigen_projection(const Eigen::MatrixXcd& G, double rho) {
  const auto sys = eigensystem_hermitian(G);
  Eigen::Index k = 0;
  while (k < sys.values.size() && sys.values(k) < rho) ++k;
  const auto U = sys.vectors.leftCols(k);
  return U * U.adjoint();
}

double numerical_floor(std::size_t n, double b_n) {
  return std::numeric_limits<double>::epsilon() * static_cast<double>(n) * b_n;
}

RieszBounds riesz_bounds(const GramSection& G, double radius) {
  const auto eigs = eigs_hermitian(G);
  RieszBounds rb;
  rb.radius = radius;
  rb.size = eigs.size();
  rb.a_n = eigs.front();
  rb.b_n = eigs.back();
  rb.floor = numerical_floor(rb.size, rb.b_n);
  rb.below_floor = rb.a_n < rb.floor;
  return rb;
}

std::vector<RieszBounds> riesz_sweep(const GramSection& full, const std::vector<double>& radii, int threads) {
  const auto masks = nested_masks(full.pointset(), radii);
  std::vector<RieszBounds> out(radii.size());
  parallel_for(radii.size(), threads, [&](std::size_t j) {
    if (masks[j].empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty section at radius " + format_double(radii[j]), "radii");
    }
    out[j] = riesz_bounds(full.leading(masks[j].size()), radii[j]);
  });
  return out;
}

std::vector<RieszBounds> riesz_sweep(const WindowSpec& w, const LatticeSpec& lat, const std::vector<double>& radii,
                                     std::size_t cap, int threads) {
  if (radii.empty()) throw Error(ErrorCode::InvalidArgument, "no radii given", "radii");
  for (std::size_t j = 1; j < radii.size(); ++j) {
    if (!(radii[j] >= radii[j - 1])) throw Error(ErrorCode::RadiiNotAscending, "radii must be ascending", "radii");
  }
  const PointSet ps = enumerate_lattice_in_ball(lat, radii.back(), cap);
  return riesz_sweep(assemble_gram(w, ps, threads), radii, threads);
}

GapReport detect_gap(const std::vector<double>& eigs, double threshold, double min_ratio) {
  if (!std::is_sorted(eigs.begin(), eigs.end())) throw Error(ErrorCode::InvalidArgument, "eigenvalues must be ascending");
  if (!(min_ratio >= 1.0)) throw Error(ErrorCode::InvalidArgument, "gap ratio must be >= 1", "gap.ratio");
  GapReport g;
  g.eigenvalues = eigs;
  g.threshold = threshold;
  g.min_ratio = min_ratio;
  const auto split = std::lower_bound(eigs.begin(), eigs.end(), threshold);
  g.cluster_zero.assign(eigs.begin(), split);
  if (!g.cluster_zero.empty()) g.cluster_max = g.cluster_zero.back();
  if (split != eigs.end()) {
    g.band_min = *split;
    g.band_max = eigs.back();
  }
  const bool both = !g.cluster_zero.empty() && split != eigs.end();
  if (both) {
    g.separation = g.cluster_max > 0.0 ? g.band_min / g.cluster_max : std::numeric_limits<double>::infinity();
    g.gap_found = g.separation >= min_ratio;
  }
  return g;
}

}  // namespace gabor
