#include "gabor/report.hpp"

#include <cmath>
#include <sstream>

#include "gabor/io.hpp"

namespace gabor {
namespace {

using nlohmann::json;

std::string csv_number(double v) { return format_double(v); }

json linear_json(const LinearFit& f) {
  return {{"slope", number_or_null(f.slope)},
          {"intercept", number_or_null(f.intercept)},
          {"r_squared", number_or_null(f.r_squared)},
          {"points", f.points}};
}

json verdict_json(const BoundVerdict& v) {
  return {{"consistent", v.consistent},
          {"argmax_row", v.argmax_row},
          {"rows_considered", v.rows_considered},
          {"max_later_increase", number_or_null(v.max_later_increase)}};
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number_or_null(x));
  return a;
}

}  // namespace

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_json(const RunConfig& cfg) {
  return {
      {"window", {{"kind", cfg.window_kind}, {"dimension", cfg.dimension}, {"normalized", cfg.normalized}, {"file", cfg.window_file}}},
      {"lattice", {{"generator", doubles(cfg.generator)}}},
      {"pointset", {{"file", cfg.pointset_file}}},
      {"weight", {{"kind", cfg.weight_kind}, {"s", cfg.weight_s}, {"a", cfg.weight_a}, {"b", cfg.weight_b}}},
      {"sweep", {{"radii", doubles(cfg.radii)}, {"bound_radius", cfg.bound_radius}}},
      {"gap", {{"threshold", cfg.gap_threshold}, {"ratio", cfg.gap_ratio}}},
      {"contour", {{"radius", cfg.contour_radius}, {"nodes", cfg.contour_nodes}}},
      {"kernel", {{"radius", cfg.kernel_radius}, {"lemma_radii", doubles(cfg.lemma_radii)}}},
      {"caps", {{"max_points", cfg.max_points}}},
      {"run", {{"seed", cfg.seed}}},
  };
}

json gap_json(const GapReport& gap) {
  return {{"threshold", number_or_null(gap.threshold)},
          {"min_ratio", number_or_null(gap.min_ratio)},
          {"cluster_size", gap.cluster_zero.size()},
          {"cluster_max", number_or_null(gap.cluster_max)},
          {"band_min", number_or_null(gap.band_min)},
          {"band_max", number_or_null(gap.band_max)},
          {"separation", number_or_null(gap.separation)},
          {"gap_found", gap.gap_found},
          {"eigenvalues", doubles(gap.eigenvalues)}};
}

json fit_json(const FitOutcome& f) {
  json j = {{"model", f.model.name()}};
  if (f.model.kind == DecayModel::Kind::Stretched) j["b"] = f.model.b;
  if (f.fit) {
    j["slope"] = number_or_null(f.fit->fit.slope);
    j["intercept"] = number_or_null(f.fit->fit.intercept);
    j["r_squared"] = number_or_null(f.fit->fit.r_squared);
    j["points_used"] = f.fit->points_used;
    j["floor_radius"] = f.fit->floor_radius ? number_or_null(*f.fit->floor_radius) : json(nullptr);
  } else {
    j["error"] = f.error;
  }
  return j;
}

json comparison_json(const BoundComparison& cmp) {
  json rows = json::array();
  for (const auto& r : cmp.rows) {
    rows.push_back({{"radius", r.radius},
                    {"a_n", number_or_null(r.a_n)},
                    {"below_floor", r.below_floor},
                    {"bound_sup", number_or_null(r.bound_sup)},
                    {"bound_sum", number_or_null(r.bound_sum)},
                    {"ratio_sup", number_or_null(r.ratio_sup)},
                    {"ratio_sum", number_or_null(r.ratio_sum)}});
  }
  return {{"rows", rows}, {"sup", verdict_json(cmp.sup)}, {"sum", verdict_json(cmp.sum)}, {"verdict_kind", "heuristic"}, {"note", cmp.note}};
}

json kernel_json(const KernelRun& run) {
  const auto& p = run.projection;
  json j = {
      {"note", "finite sections have trivial kernels in general; 'kernel' denotes the spectral subspace below the contour radius"},
      {"section", {{"radius", run.config.kernel_radius}, {"size", run.size}}},
      {"gap", gap_json(run.gap)},
      {"contour", {{"radius", run.contour.radius}, {"nodes", run.contour.nodes}}},
      {"projection",
       {{"idempotency_defect", number_or_null(p.idempotency_defect)},
        {"trace", number_or_null(p.trace)},
        {"rank_estimate", p.rank_estimate},
        {"residual", number_or_null(p.residual)},
        {"max_solve_residual", number_or_null(p.max_solve_residual)},
        {"eigen_projection_distance", number_or_null(run.eigen_projection_distance)},
        {"eigenvalues_below_radius", run.eigen_count_below_radius}}},
      {"kernel_vector", {{"index", run.vector.index}, {"id", run.vector.id}, {"residual_norm", number_or_null(run.kernel_residual)}}},
      {"resolvent_probe", {{"z", run.contour.radius}, {"weighted_sup", number_or_null(run.resolvent_probe)}}},
  };
  if (run.decay) {
    j["decay_fit"] = {{"exponential", linear_json(run.decay->exponential)},
                      {"polynomial", linear_json(run.decay->polynomial)},
                      {"points_used", run.decay->points_used},
                      {"l1v_sum", number_or_null(run.decay->l1v_sum)}};
  } else {
    j["decay_fit"] = {{"error", run.decay_error}};
  }
  json lemma = json::array();
  for (const auto& r : run.lemma) {
    lemma.push_back({{"n", r.n}, {"size", r.size}, {"mass_inside", r.mass_inside}, {"tail", r.tail}, {"lhs", r.lhs},
                     {"slack", r.slack}, {"rhs", r.rhs}, {"pass", r.pass}, {"mass_condition", r.mass_condition}});
  }
  j["lemma_check"] = lemma;
  return j;
}

json weight_checks_json(const WeightChecks& c) {
  const auto& sc = c.subconvolutive;
  json grs = json::array();
  for (std::size_t i = 0; i < c.grs_n.size(); ++i) grs.push_back({{"n", c.grs_n[i]}, {"value", number_or_null(c.grs_values[i])}});
  return {{"weight", c.weight.name()},
          {"submultiplicative",
           {{"pass", c.submultiplicative.pass}, {"worst_ratio", number_or_null(c.submultiplicative.worst_ratio)}, {"trials", c.submultiplicative.trials}}},
          {"subconvolutive",
           {{"pass", sc.pass},
            {"converged", sc.converged},
            {"h", c.subconvolutive_h},
            {"final_step", sc.step},
            {"R", c.subconvolutive_R},
            {"constant", number_or_null(sc.constant)},
            {"refined_constant", number_or_null(sc.refined_constant)},
            {"boundary_fraction", number_or_null(sc.boundary_fraction)},
            {"refinement_change", number_or_null(sc.refinement_change)}}},
          {"grs_profile", {{"z_norm", 1.0}, {"values", grs}}}};
}

json emit_report(const SweepRun& run, const json& kernel) {
  json sweep = json::array();
  for (std::size_t i = 0; i < run.sweep.size(); ++i) {
    const auto& rb = run.sweep[i];
    sweep.push_back({{"radius", rb.radius},
                     {"N", rb.size},
                     {"a_n", number_or_null(rb.a_n)},
                     {"b_n", number_or_null(rb.b_n)},
                     {"floor", number_or_null(rb.floor)},
                     {"below_floor", rb.below_floor}});
  }
  const auto& t = run.bounds;
  json bounds = {{"relative_separation", t.relative_separation},
                 {"enumerated_radius", t.enumerated_radius},
                 {"rows", json::array()}};
  for (std::size_t i = 0; i < t.radii.size(); ++i) {
    json row = {{"radius", t.radii[i]},
                {"r_next", number_or_null(t.r_next[i])},
                {"bound_sup", number_or_null(t.sup[i])},
                {"sum", number_or_null(t.sum[i])},
                {"remainder", number_or_null(t.remainder[i])}};
    if (!t.errors[i].empty()) row["error"] = t.errors[i];
    bounds["rows"].push_back(row);
  }
  json fits = json::array();
  for (const auto& f : run.fits) fits.push_back(fit_json(f));
  std::optional<double> floor_radius;
  for (const auto& rb : run.sweep) {
    if (rb.below_floor) {
      floor_radius = rb.radius;
      break;
    }
  }
  return {{"schema", "gabor-sections/report/1"},
          {"config", config_json(run.config)},
          {"sweep", sweep},
          {"floor_radius", floor_radius ? json(*floor_radius) : json(nullptr)},
          {"bounds", bounds},
          {"comparison", comparison_json(run.comparison)},
          {"fits", fits},
          {"gap", gap_json(run.gap)},
          {"kernel", kernel}};
}

json fit_report(const SweepRun& run) {
  json fits = json::array();
  for (const auto& f : run.fits) fits.push_back(fit_json(f));
  json points = json::array();
  for (const auto& rb : run.sweep) {
    points.push_back({{"radius", rb.radius}, {"a_n", number_or_null(rb.a_n)}, {"below_floor", rb.below_floor}});
  }
  return {{"fits", fits}, {"points", points}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sweep_csv(const SweepRun& run) {
  std::ostringstream o;
  o << "radius,N,a_n,b_n,floor,below_floor,bound_sup,bound_sum,ratio_sup,ratio_sum\n";
  for (std::size_t i = 0; i < run.sweep.size(); ++i) {
    const auto& rb = run.sweep[i];
    const auto& row = run.comparison.rows[i];
    o << csv_number(rb.radius) << ',' << rb.size << ',' << csv_number(rb.a_n) << ',' << csv_number(rb.b_n) << ','
      << csv_number(rb.floor) << ',' << (rb.below_floor ? 1 : 0) << ',' << csv_number(row.bound_sup) << ','
      << csv_number(row.bound_sum) << ',' << csv_number(row.ratio_sup) << ',' << csv_number(row.ratio_sum) << '\n';
  }
  return o.str();
}

std::string bounds_csv(const BoundsTable& t) {
  std::ostringstream o;
  o << "radius,r_next,bound_sup,sum,remainder,bound_sum\n";
  for (std::size_t i = 0; i < t.radii.size(); ++i) {
    o << csv_number(t.radii[i]) << ',' << csv_number(t.r_next[i]) << ',' << csv_number(t.sup[i]) << ','
      << csv_number(t.sum[i]) << ',' << csv_number(t.remainder[i]) << ',' << csv_number(t.sum[i] + t.remainder[i]) << '\n';
  }
  return o.str();
}

std::string fits_csv(const std::vector<FitOutcome>& fits) {
  std::ostringstream o;
  o << "model,slope,intercept,r_squared,points_used\n";
  for (const auto& f : fits) {
    if (!f.fit) continue;
    o << f.model.name() << ',' << csv_number(f.fit->fit.slope) << ',' << csv_number(f.fit->fit.intercept) << ','
      << csv_number(f.fit->fit.r_squared) << ',' << f.fit->points_used << '\n';
  }
  return o.str();
}

std::string gram_csv(const GramSection& G) {
  std::ostringstream o;
  o << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < G.size(); ++r) {
    for (Eigen::Index c = 0; c < G.size(); ++c) {
      const auto v = G.entries()(r, c);
      o << r << ',' << c << ',' << csv_number(v.real()) << ',' << csv_number(v.imag()) << '\n';
    }
  }
  return o.str();
}

std::string envelope_csv(const EnvelopeProfile& env, int d) {
  std::ostringstream o;
  for (int k = 1; k <= 2 * d; ++k) o << "k_" << k << ',';
  o << "theta\n";
  for (std::size_t i = 0; i < env.offsets.size(); ++i) {
    for (long k : env.offsets[i]) o << k << ',';
    o << csv_number(env.values[i]) << '\n';
  }
  return o.str();
}

std::string kernel_vector_csv(const KernelRun& run) {
  const int d = run.points.dimension();
  std::ostringstream o;
  o << "id,";
  if (d == 1) {
    o << "x,xi,";
  } else {
    for (int k = 1; k <= d; ++k) o << "x_" << k << ',';
    for (int k = 1; k <= d; ++k) o << "xi_" << k << ',';
  }
  o << "re,im,abs\n";
  for (std::size_t i = 0; i < run.points.size(); ++i) {
    const auto& p = run.points[i];
    const auto c = run.vector.c(static_cast<Eigen::Index>(i));
    o << run.points.id(i) << ',';
    for (double x : p.x) o << csv_number(x) << ',';
    for (double x : p.xi) o << csv_number(x) << ',';
    o << csv_number(c.real()) << ',' << csv_number(c.imag()) << ',' << csv_number(std::abs(c)) << '\n';
  }
  return o.str();
}

std::string lemma_csv(const std::vector<LemmaRow>& rows) {
  std::ostringstream o;
  o << "n,size,mass_inside,tail,lhs,slack,rhs,pass,mass_condition\n";
  for (const auto& r : rows) {
    o << csv_number(r.n) << ',' << r.size << ',' << csv_number(r.mass_inside) << ',' << csv_number(r.tail) << ','
      << csv_number(r.lhs) << ',' << csv_number(r.slack) << ',' << csv_number(r.rhs) << ',' << (r.pass ? 1 : 0) << ','
      << (r.mass_condition ? 1 : 0) << '\n';
  }
  return o.str();
}

std::string plot_script(const std::string& csv_name) {
  std::ostringstream o;
  o << "# gnuplot 5: log10 of the lower Riesz bound and the weight bounds against the radius\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set terminal pngcairo size 900,600\n"
    << "set output 'sweep.png'\n"
    << "set xlabel 'radius n'\n"
    << "set ylabel 'log10'\n"
    << "set grid\n"
    << "plot '" << csv_name << "' using 1:(log10($3)) with linespoints title 'a_n', \\\n"
    << "     '" << csv_name << "' using 1:(log10($5)) with lines dashtype 2 title 'floor', \\\n"
    << "     '" << csv_name << "' using 1:(log10($7)) with linespoints title 'sup bound', \\\n"
    << "     '" << csv_name << "' using 1:(log10($8)) with linespoints title 'sum bound'\n";
  return o.str();
}

}  // namespace gabor
