#include "gabor/pipeline.hpp"

#include <cmath>
#include <limits>

#include "gabor/error.hpp"

namespace gabor {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<FitOutcome> all_fits(const std::vector<RieszBounds>& sweep, const RunConfig& cfg) {
  const double b = cfg.weight_kind == "subexponential" ? cfg.weight_b : 0.5;
  std::vector<FitOutcome> out;
  for (const auto& model : {DecayModel::power_law(), DecayModel::stretched(b), DecayModel::gaussian_type()}) {
    FitOutcome f{model, std::nullopt, ""};
    try {
      f.fit = fit_decay(sweep, model);
    } catch (const Error& e) {
      f.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<double> BoundsTable::totals() const {
  std::vector<double> t(sum.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = sum[i] + remainder[i];
  return t;
}

BoundsTable compute_bounds(const RunConfig& cfg, const WeightSpec& v) {
  const PointSet tail = make_pointset(cfg, cfg.bound_radius);
  BoundsTable t;
  t.enumerated_radius = tail.radius();
  t.relative_separation = relative_separation(tail);
  for (double n : cfg.radii) {
    t.radii.push_back(n);
    t.r_next.push_back(next_radius(tail, n));
    t.sup.push_back(inverse_square(v, t.r_next.back()));
    try {
      const SumBound s = bound_sum(v, tail, n, t.relative_separation);
      t.sum.push_back(s.sum);
      t.remainder.push_back(s.remainder);
      t.errors.emplace_back();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RemainderDominates) throw;
      t.sum.push_back(kNaN);
      t.remainder.push_back(kNaN);
      t.errors.push_back(std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  return t;
}

SweepRun run_sweep(const RunConfig& cfg) {
  SweepRun run;
  run.config = cfg;
  const WindowSpec w = make_window(cfg);
  const WeightSpec v = make_weight(cfg);
  const PointSet ps = make_pointset(cfg, cfg.radii.back());
  const GramSection G = assemble_gram(w, ps, cfg.threads);
  run.sweep = riesz_sweep(G, cfg.radii, cfg.threads);
  run.bounds = compute_bounds(cfg, v);
  run.comparison = bound_comparison(run.sweep, run.bounds.sup, run.bounds.totals());
  run.fits = all_fits(run.sweep, cfg);
  const auto eigs = eigs_hermitian(G);
  run.gap = detect_gap(eigs, cfg.gap_threshold * eigs.back(), cfg.gap_ratio);
  return run;
}

GramSection run_gram(const RunConfig& cfg) {
  return assemble_gram(make_window(cfg), make_pointset(cfg, cfg.radii.back()), cfg.threads);
}

KernelRun run_kernel(const RunConfig& cfg) {
  KernelRun run{cfg, 0, {}, {}, {}, 0.0, 0, {}, make_pointset(cfg, cfg.kernel_radius), 0.0, std::nullopt, "", {}, 0.0};
  const WindowSpec w = make_window(cfg);
  const WeightSpec v = make_weight(cfg);
  const GramSection G = assemble_gram(w, run.points, cfg.threads);
  run.size = run.points.size();
  const auto sys = eigensystem_hermitian(G.entries());
  const std::vector<double> eigs(sys.values.data(), sys.values.data() + sys.values.size());
  run.gap = detect_gap(eigs, cfg.gap_threshold * eigs.back(), cfg.gap_ratio);
  run.contour = ContourSpec::from_gap(run.gap, cfg.contour_nodes);
  if (cfg.contour_radius > 0.0) run.contour.radius = cfg.contour_radius;
  run.projection = contour_projection(G, run.contour, run.gap, cfg.threads);

  Eigen::Index below = 0;
  while (below < sys.values.size() && sys.values(below) < run.contour.radius) ++below;
  run.eigen_count_below_radius = static_cast<std::size_t>(below);
  const auto U = sys.vectors.leftCols(below);
  run.eigen_projection_distance = (run.projection.P - U * U.adjoint()).norm();

  run.vector = kernel_vector(run.projection, run.points);
  run.kernel_residual = (G.entries() * run.vector.c).norm();
  try {
    run.decay = decay_fit(run.vector.c, run.points, v);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooFewPoints) throw;
    run.decay_error = std::string(to_string(e.code())) + ": " + e.what();
  }
  run.lemma = lemma_bound_check(run.vector.c, G, cfg.lemma_radii, run.gap.band_max);
  run.resolvent_probe = resolvent_decay_probe(G, run.contour.radius, v);
  return run;
}

WeightChecks run_weight_checks(const RunConfig& cfg) {
  WeightChecks out;
  out.weight = make_weight(cfg);
  if (cfg.dimension > 1) out.subconvolutive_R = 8.0;
  out.submultiplicative = submultiplicative_check(out.weight, 1000, cfg.seed, cfg.dimension);
  out.subconvolutive = subconvolutive_check(out.weight, out.subconvolutive_h, out.subconvolutive_R, cfg.dimension);
  out.grs_n = {1, 10, 100, 1000, 10000, 100000, 1000000};
  std::vector<double> unit(static_cast<std::size_t>(2 * cfg.dimension), 0.0);
  unit[0] = 1.0;
  out.grs_values = grs_profile(out.weight, TFPoint::from_coords(unit), out.grs_n);
  return out;
}

}  // namespace gabor
