#include "gabor/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "gabor/error.hpp"
#include "gabor/parallel.hpp"

namespace gabor {
namespace {

PointSet index_points(Eigen::Index n) {
  std::vector<TFPoint> pts;
  for (Eigen::Index i = 0; i < n; ++i) pts.push_back(tf(static_cast<double>(i), 0.0));
  return PointSet(std::move(pts), n > 0 ? static_cast<double>(n - 1) : 0.0);
}

std::vector<double> difference(const TFPoint& a, const TFPoint& b) {
  auto ca = a.coords();
  const auto cb = b.coords();
  for (std::size_t k = 0; k < ca.size(); ++k) ca[k] -= cb[k];
  return ca;
}

double radius_of(const std::vector<double>& c) {
  double s = 0.0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

}  // namespace

GramSection::GramSection(Eigen::MatrixXcd entries, PointSet points, std::optional<WindowSpec> window)
    : entries_(std::move(entries)), points_(std::move(points)), window_(std::move(window)) {
  if (entries_.rows() != entries_.cols()) throw Error(ErrorCode::InvalidArgument, "Gram matrix must be square");
  if (static_cast<std::size_t>(entries_.rows()) != points_.size()) {
    throw Error(ErrorCode::InvalidArgument, "Gram size does not match the point set");
  }
}

GramSection GramSection::from_matrix(Eigen::MatrixXcd entries, std::optional<PointSet> points) {
  PointSet ps = points ? std::move(*points) : index_points(entries.rows());
  return GramSection(std::move(entries), std::move(ps));
}

GramSection GramSection::leading(std::size_t k) const {
  if (k > points_.size()) throw Error(ErrorCode::InvalidArgument, "leading block larger than the section");
  const auto n = static_cast<Eigen::Index>(k);
  const double r = k == 0 ? 0.0 : points_.norm(k - 1);
  PointSet sub = points_.truncated(std::max(r, 0.0));
  if (sub.size() != k) {
    // A prefix that splits a shell of equal norms: keep the prefix verbatim.
    std::vector<TFPoint> pts(points_.points().begin(), points_.points().begin() + n);
    sub = PointSet(std::move(pts), r, points_.lattice());
  }
  return GramSection(entries_.topLeftCorner(n, n), std::move(sub), window_);
}

complex gram_entry(const WindowSpec& w, const TFPoint& lambda, const TFPoint& mu) {
  const int d = lambda.dimension();
  double dot = 0.0;
  for (int k = 0; k < d; ++k) dot += lambda.x[k] * (mu.xi[k] - lambda.xi[k]);
  const double frac = dot - std::round(dot);
  const complex phase = std::polar(1.0, 2.0 * std::numbers::pi * frac);
  complex value = phase * std::conj(ambiguity(w, mu - lambda));
  if (std::abs(value) < kGramZero) value = 0.0;
  return value;
}

GramSection assemble_gram(const WindowSpec& w, const PointSet& ps, int threads) {
  if (ps.empty()) throw Error(ErrorCode::InvalidArgument, "cannot assemble the Gram of an empty section");
  if (ps.dimension() != w.dimension()) throw Error(ErrorCode::InvalidArgument, "window and point set dimensions differ");
  const auto n = static_cast<Eigen::Index>(ps.size());
  Eigen::MatrixXcd G(n, n);
  parallel_for(ps.size(), threads, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    for (Eigen::Index c = r; c < n; ++c) G(r, c) = gram_entry(w, ps[i], ps[static_cast<std::size_t>(c)]);
  });
  for (Eigen::Index r = 0; r < n; ++r) {
    G(r, r) = G(r, r).real();
    for (Eigen::Index c = 0; c < r; ++c) G(r, c) = std::conj(G(c, r));
  }
  return GramSection(std::move(G), ps, w);
}

CvNorm cv_infty_norm(const GramSection& G, const WeightSpec& v) {
  const auto& ps = G.pointset();
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index r = 0; r < G.size(); ++r) {
    for (Eigen::Index c = 0; c < G.size(); ++c) {
      const double m = std::abs(G.entries()(r, c));
      if (m == 0.0) continue;
      const double dist = radius_of(difference(ps[static_cast<std::size_t>(r)], ps[static_cast<std::size_t>(c)]));
      best = std::max(best, std::log(m) + v.log_value(dist));
    }
  }
  if (!std::isfinite(best)) return {0.0, best, false};
  if (best > 700.0) return {std::numeric_limits<double>::infinity(), best, true};
  return {std::exp(best), best, false};
}

double EnvelopeProfile::at(const std::vector<long>& k) const {
  const auto it = std::lower_bound(offsets.begin(), offsets.end(), k);
  if (it == offsets.end() || *it != k) return 0.0;
  return values[static_cast<std::size_t>(it - offsets.begin())];
}

EnvelopeProfile envelope_extract(const GramSection& G) {
  const auto& ps = G.pointset();
  std::map<std::vector<long>, double> bins;
  for (Eigen::Index r = 0; r < G.size(); ++r) {
    for (Eigen::Index c = 0; c < G.size(); ++c) {
      const auto delta = difference(ps[static_cast<std::size_t>(r)], ps[static_cast<std::size_t>(c)]);
      std::vector<long> k(delta.size());
      for (std::size_t j = 0; j < delta.size(); ++j) k[j] = static_cast<long>(std::floor(delta[j] + 1e-12));
      double& slot = bins.try_emplace(std::move(k), 0.0).first->second;
      slot = std::max(slot, std::abs(G.entries()(r, c)));
    }
  }
  EnvelopeProfile env;
  for (auto& [k, value] : bins) {
    env.offsets.push_back(k);
    env.values.push_back(value);
  }
  return env;
}

double envelope_weighted_sum(const EnvelopeProfile& env, const WeightSpec& v) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < env.offsets.size(); ++i) {
    double r2 = 0.0;
    for (long k : env.offsets[i]) r2 += static_cast<double>(k) * static_cast<double>(k);
    sum += static_cast<long double>(env.values[i]) * std::exp(static_cast<long double>(v.log_value(std::sqrt(r2))));
  }
  return static_cast<double>(sum);
}

GramChecks check_gram(const GramSection& G) {
  const auto& E = G.entries();
  const double scale = E.cwiseAbs().maxCoeff();
  const double herm = (E - E.adjoint()).cwiseAbs().maxCoeff();
  double diag = 0.0;
  if (G.window()) {
    const double ns = G.window()->norm_squared();
    for (Eigen::Index i = 0; i < G.size(); ++i) diag = std::max(diag, std::abs(E(i, i) - ns));
  }
  GramChecks out{scale > 0.0 ? herm / scale : herm, diag, false};
  out.ok = out.hermitian_defect <= 1e-12 && out.diagonal_defect <= 1e-10;
  return out;
}

}  // namespace gabor
