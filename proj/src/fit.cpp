#include "gabor/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gabor/error.hpp"
#include "gabor/io.hpp"

namespace gabor {

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "fit inputs differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "a linear fit needs at least two points");
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  long double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw Error(ErrorCode::TooFewPoints, "fit regressor is constant");
  LinearFit f;
  f.slope = static_cast<double>(sxy / sxx);
  f.intercept = static_cast<double>(my - sxy / sxx * mx);
  f.points = n;
  long double ssres = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double r = y[i] - (static_cast<long double>(f.slope) * x[i] + f.intercept);
    ssres += r * r;
  }
  f.r_squared = syy > 0 ? static_cast<double>(1 - ssres / syy) : 1.0;
  return f;
}

double DecayModel::regressor(double n) const {
  switch (kind) {
    case Kind::PowerLaw: return std::log(n);
    case Kind::Stretched: return std::pow(n, b);
    case Kind::GaussianType: return n * n;
  }
  return n;
}

std::string DecayModel::name() const {
  switch (kind) {
    case Kind::PowerLaw: return "power_law";
    case Kind::Stretched: return "stretched";
    case Kind::GaussianType: return "gaussian_type";
  }
  return "unknown";
}

DecayFit fit_decay(const std::vector<RieszBounds>& sweep, const DecayModel& model) {
  DecayFit out;
  out.model = model;
  std::vector<double> x, y;
  for (const auto& rb : sweep) {
    if (rb.below_floor) {
      if (!out.floor_radius) out.floor_radius = rb.radius;
      continue;
    }
    if (!(rb.a_n > 0.0)) continue;
    if (model.kind == DecayModel::Kind::PowerLaw && !(rb.radius > 0.0)) continue;
    x.push_back(model.regressor(rb.radius));
    y.push_back(std::log(rb.a_n));
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::TooFewPoints, "decay fit needs 3 above-floor radii, have " + std::to_string(x.size()));
  }
  out.fit = linear_fit(x, y);
  out.points_used = x.size();
  return out;
}

BoundVerdict ratio_verdict(const std::vector<double>& ratios) {
  BoundVerdict v;
  v.rows_considered = ratios.size();
  if (ratios.empty()) return v;
  const std::size_t m = ratios.size();
  const std::size_t third = (m + 2) / 3;
  v.argmax_row = static_cast<std::size_t>(std::max_element(ratios.begin(), ratios.end()) - ratios.begin());
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = third; i < m; ++i) {
    running_min = std::min(running_min, ratios[i]);
    v.max_later_increase = std::max(v.max_later_increase, ratios[i] / running_min);
  }
  bool finite = true;
  for (double r : ratios) finite = finite && std::isfinite(r);
  v.consistent = finite && v.argmax_row < third && v.max_later_increase <= 10.0;
  return v;
}

BoundComparison bound_comparison(const std::vector<RieszBounds>& sweep, const std::vector<double>& sup,
                                 const std::vector<double>& sum) {
  if (sup.size() != sweep.size() || sum.size() != sweep.size()) {
    throw Error(ErrorCode::InvalidArgument, "bound tables do not match the sweep");
  }
  BoundComparison out;
  std::vector<double> rs, rm;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    BoundRow row;
    row.radius = sweep[i].radius;
    row.a_n = sweep[i].a_n;
    row.below_floor = sweep[i].below_floor;
    row.bound_sup = sup[i];
    row.bound_sum = sum[i];
    row.ratio_sup = sweep[i].a_n / sup[i];
    row.ratio_sum = sweep[i].a_n / sum[i];
    if (!row.below_floor) {
      rs.push_back(row.ratio_sup);
      rm.push_back(row.ratio_sum);
    }
    out.rows.push_back(row);
  }
  out.sup = ratio_verdict(rs);
  out.sum = ratio_verdict(rm);
  out.note =
      "heuristic: finitely many radii cannot confirm an asymptotic bound; 'consistent' means the above-floor "
      "ratio a_n/bound peaks in the first third of radii and never grows more than tenfold afterwards";
  return out;
}

}  // namespace gabor
