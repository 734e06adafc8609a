#include "gabor/kernel.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>

#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "gabor/parallel.hpp"

namespace gabor {
namespace {

struct Resolvent {
  Eigen::MatrixXcd X;
  double residual;
};

// (zI - G)^{-1} with one step of iterative refinement; residual is the
// largest column residual relative to the unit right-hand side.
Resolvent resolvent(const Eigen::MatrixXcd& G, std::complex<double> z) {
  const Eigen::Index n = G.rows();
  const Eigen::MatrixXcd A = z * Eigen::MatrixXcd::Identity(n, n) - G;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd X = lu.solve(I);
  X += lu.solve(I - A * X);
  const Eigen::MatrixXcd R = I - A * X;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double r = R.col(j).norm();
    worst = std::isfinite(r) ? std::max(worst, r) : std::numeric_limits<double>::infinity();
    if (std::isinf(worst)) break;
  }
  return {std::move(X), worst};
}

double distance(const TFPoint& a, const TFPoint& b) { return (a - b).norm(); }

}  // namespace

ContourSpec ContourSpec::from_gap(const GapReport& gap, int nodes) {
  if (!gap.gap_found) throw Error(ErrorCode::GapMissing, "no spectral gap at threshold " + format_double(gap.threshold), "gap.threshold");
  ContourSpec c;
  c.nodes = nodes;
  c.radius = gap.cluster_max > 0.0 ? std::sqrt(gap.cluster_max * gap.band_min) : gap.band_min / 2.0;
  return c;
}

void ContourSpec::validate(const GapReport& gap) const {
  if (!gap.gap_found) throw Error(ErrorCode::GapMissing, "no spectral gap at threshold " + format_double(gap.threshold), "gap.threshold");
  if (center != 0.0) throw Error(ErrorCode::InvalidContour, "contour must be centred at 0", "contour.center");
  if (nodes < 16) throw Error(ErrorCode::InvalidContour, "contour needs at least 16 nodes", "contour.nodes");
  if (!(radius > gap.cluster_max && radius < gap.band_min)) {
    throw Error(ErrorCode::InvalidContour,
                "contour radius " + format_double(radius) + " not inside the gap (" + format_double(gap.cluster_max) +
                    ", " + format_double(gap.band_min) + ")",
                "contour.radius");
  }
}

ProjectionResult contour_projection_unchecked(const Eigen::MatrixXcd& G, const ContourSpec& c, int threads) {
  const Eigen::Index n = G.rows();
  const int M = c.nodes;
  if (threads <= 0) threads = default_threads();
  ProjectionResult out;
  out.radius = c.radius;
  out.nodes = M;
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  // Nodes are solved a batch at a time and summed in node order, so the
  // result does not depend on the worker count.
  const std::size_t batch = static_cast<std::size_t>(std::max(threads, 1)) * 2;
  for (std::size_t first = 0; first < static_cast<std::size_t>(M); first += batch) {
    const std::size_t count = std::min(batch, static_cast<std::size_t>(M) - first);
    std::vector<Eigen::MatrixXcd> terms(count);
    std::vector<double> residuals(count);
    parallel_for(count, threads, [&](std::size_t k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(first + k) / M;
      const std::complex<double> z = std::polar(c.radius, angle);
      auto r = resolvent(G, z);
      residuals[k] = r.residual;
      terms[k] = z * r.X;
    });
    for (std::size_t k = 0; k < count; ++k) {
      out.max_solve_residual = std::max(out.max_solve_residual, residuals[k]);
      if (!(residuals[k] <= kSolveTolerance)) {
        throw Error(ErrorCode::SingularResolvent,
                    "resolvent solve residual " + format_double(residuals[k]) + " at contour node " +
                        std::to_string(first + k),
                    "contour.radius");
      }
      P += terms[k];
    }
  }
  P /= static_cast<double>(M);
  out.P = (P + P.adjoint()) / 2.0;
  out.idempotency_defect = (out.P * out.P - out.P).norm();
  out.trace = out.P.trace().real();
  out.rank_estimate = std::lround(out.trace);
  const double gnorm = G.norm();
  out.residual = gnorm > 0.0 ? (G * out.P).norm() / gnorm : 0.0;
  return out;
}

ProjectionResult contour_projection(const GramSection& G, const ContourSpec& c, const GapReport& gap, int threads) {
  c.validate(gap);
  return contour_projection_unchecked(G.entries(), c, threads);
}

KernelVector kernel_vector(const ProjectionResult& P, const PointSet& ps) {
  if (P.rank_estimate <= 0) throw Error(ErrorCode::RankZero, "projection has rank 0");
  if (static_cast<std::size_t>(P.P.cols()) != ps.size()) throw Error(ErrorCode::InvalidArgument, "projection size does not match the point set");
  KernelVector kv;
  double best = -1.0;
  for (Eigen::Index j = 0; j < P.P.cols(); ++j) {
    const double nrm = P.P.col(j).norm();
    if (nrm > best) {
      best = nrm;
      kv.index = static_cast<std::size_t>(j);
    }
  }
  if (!(best > 0.0)) throw Error(ErrorCode::RankZero, "projection columns vanish");
  kv.id = ps.id(kv.index);
  kv.c = P.P.col(static_cast<Eigen::Index>(kv.index)) / best;
  return kv;
}

KernelDecay decay_fit(const Eigen::VectorXcd& c, const PointSet& ps, const WeightSpec& v) {
  if (static_cast<std::size_t>(c.size()) != ps.size()) throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match the point set");
  KernelDecay out;
  std::vector<double> r, logr, y;
  long double l1 = 0.0L;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double m = std::abs(c(i));
    const double rad = ps.norm(static_cast<std::size_t>(i));
    l1 += static_cast<long double>(m) * std::exp(static_cast<long double>(v.log_value(rad)));
    if (m < 1e-14) continue;
    r.push_back(rad);
    logr.push_back(std::log1p(rad));
    y.push_back(std::log(m));
  }
  out.l1v_sum = static_cast<double>(l1);
  out.points_used = y.size();
  if (y.size() < 8) throw Error(ErrorCode::TooFewPoints, "decay fit needs 8 entries above 1e-14, have " + std::to_string(y.size()));
  out.exponential = linear_fit(r, y);
  out.polynomial = linear_fit(logr, y);
  return out;
}

std::vector<LemmaRow> lemma_bound_check(const Eigen::VectorXcd& c, const GramSection& G_full,
                                        const std::vector<double>& sub_radii, double B_hat) {
  const auto& ps = G_full.pointset();
  if (static_cast<std::size_t>(c.size()) != ps.size()) throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match the section");
  const double residual = (G_full.entries() * c).norm();
  std::vector<LemmaRow> rows;
  for (double n : sub_radii) {
    if (!(n < ps.radius())) throw Error(ErrorCode::InvalidArgument, "sub-radius must be below the section radius", "kernel.lemma_radii");
    LemmaRow row;
    row.n = n;
    row.size = ps.count_within(n);
    if (row.size == 0) throw Error(ErrorCode::InvalidArgument, "empty sub-section at radius " + format_double(n), "kernel.lemma_radii");
    long double inside = 0.0L, tail = 0.0L;
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      (static_cast<std::size_t>(i) < row.size ? inside : tail) += std::norm(c(i));
    }
    row.mass_inside = static_cast<double>(inside);
    row.tail = static_cast<double>(tail);
    row.lhs = eigs_hermitian(G_full.entries().topLeftCorner(static_cast<Eigen::Index>(row.size), static_cast<Eigen::Index>(row.size))).front();
    row.slack = 4.0 * B_hat * residual;
    row.rhs = 2.0 * B_hat * row.tail + row.slack;
    row.pass = row.lhs <= row.rhs;
    row.mass_condition = row.mass_inside >= 0.5;
    rows.push_back(row);
  }
  return rows;
}

double resolvent_decay_probe(const GramSection& G, std::complex<double> z, const WeightSpec& v) {
  const auto r = resolvent(G.entries(), z);
  if (!(r.residual <= kSolveTolerance)) {
    throw Error(ErrorCode::SingularResolvent, "resolvent solve residual " + format_double(r.residual) + " at z", "z");
  }
  const auto& ps = G.pointset();
  double best = 0.0;
  for (Eigen::Index i = 0; i < r.X.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.X.cols(); ++j) {
      const double m = std::abs(r.X(i, j));
      if (m == 0.0) continue;
      const double d = distance(ps[static_cast<std::size_t>(i)], ps[static_cast<std::size_t>(j)]);
      best = std::max(best, std::exp(std::log(m) + v.log_value(d)));
    }
  }
  return best;
}

}  // namespace gabor
