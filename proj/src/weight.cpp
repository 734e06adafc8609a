#include "gabor/weight.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "gabor/pointset.hpp"

namespace gabor {
namespace {

constexpr double kOverflowExponent = 700.0;

void require(bool ok, const char* what, const char* key) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what, key);
}

// Uniform sample from the ball of radius r in R^dim.
std::vector<double> random_in_ball(std::mt19937_64& rng, int dim, double r) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  std::vector<double> p(static_cast<std::size_t>(dim));
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& c : p) {
      c = normal(rng);
      s += c * c;
    }
  } while (s == 0.0);
  const double scale = r * std::pow(unit(rng), 1.0 / dim) / std::sqrt(s);
  for (auto& c : p) c *= scale;
  return p;
}

double euclid(const std::vector<double>& p) {
  double s = 0.0;
  for (double c : p) s += c * c;
  return std::sqrt(s);
}

struct ConvolutionValue {
  double value;
  double boundary;
};

// h^D sum over y in hZ^D with |y| <= R of v(y)^{-1} v(z - y)^{-1}, z = (m, 0, ..., 0).
ConvolutionValue discrete_convolution(const WeightSpec& v, double h, double R, int dim, double m) {
  const long M = static_cast<long>(std::floor(R / h + 1e-9));
  std::vector<long> k(static_cast<std::size_t>(dim), -M);
  long double total = 0.0L, shell = 0.0L;
  while (true) {
    double r2 = 0.0, q2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      const double y = h * static_cast<double>(k[static_cast<std::size_t>(j)]);
      r2 += y * y;
      const double dy = (j == 0 ? m : 0.0) - y;
      q2 += dy * dy;
    }
    const double r = std::sqrt(r2);
    if (r <= R + 1e-12) {
      const long double term = std::exp(-(static_cast<long double>(v.log_value(r)) + v.log_value(std::sqrt(q2))));
      total += term;
      if (r > R - 1.0) shell += term;
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == M) k[i++] = -M;
    if (i == k.size()) break;
    ++k[i];
  }
  const double cell = std::pow(h, dim);
  return {static_cast<double>(total) * cell, total > 0 ? static_cast<double>(shell / total) : 0.0};
}

struct ConstantEstimate {
  double constant = 0.0;
  double boundary = 0.0;
};

constexpr double kSubconvolutiveCost = 4e7;

ConstantEstimate subconvolutive_constant(const WeightSpec& v, double h, double R, int dim) {
  ConstantEstimate out;
  const long probes = static_cast<long>(std::floor(R / 2.0));
  for (long m = 0; m <= probes; ++m) {
    const auto c = discrete_convolution(v, h, R, dim, static_cast<double>(m));
    out.constant = std::max(out.constant, c.value * std::exp(v.log_value(static_cast<double>(m))));
    out.boundary = std::max(out.boundary, c.boundary);
  }
  return out;
}

}  // namespace

WeightSpec WeightSpec::constant() { return WeightSpec{}; }

WeightSpec WeightSpec::polynomial(double s) {
  require(std::isfinite(s) && s >= 0.0, "polynomial weight needs s >= 0", "weight.s");
  WeightSpec w;
  w.kind = Kind::Polynomial;
  w.s = s;
  return w;
}

WeightSpec WeightSpec::subexponential(double a, double b) {
  require(std::isfinite(a) && a > 0.0, "sub-exponential weight needs a > 0", "weight.a");
  require(std::isfinite(b) && b > 0.0 && b < 1.0, "sub-exponential weight needs 0 < b < 1", "weight.b");
  WeightSpec w;
  w.kind = Kind::SubExponential;
  w.a = a;
  w.b = b;
  return w;
}

WeightSpec WeightSpec::exponential(double a) {
  require(std::isfinite(a) && a > 0.0, "exponential weight needs a > 0", "weight.a");
  WeightSpec w;
  w.kind = Kind::Exponential;
  w.a = a;
  return w;
}

double WeightSpec::log_value(double r) const {
  r = std::max(r, 0.0);
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Polynomial: return s * std::log1p(r);
    case Kind::SubExponential: return a * std::pow(r, b);
    case Kind::Exponential: return a * r;
  }
  return 0.0;
}

std::string WeightSpec::name() const {
  switch (kind) {
    case Kind::Constant: return "constant";
    case Kind::Polynomial: return "polynomial(s=" + format_double(s) + ")";
    case Kind::SubExponential: return "subexponential(a=" + format_double(a) + ",b=" + format_double(b) + ")";
    case Kind::Exponential: return "exponential(a=" + format_double(a) + ")";
  }
  return "unknown";
}

WeightValue eval_radius(const WeightSpec& v, double r) {
  const double lv = v.log_value(r);
  if (lv > kOverflowExponent) return {std::numeric_limits<double>::infinity(), true};
  return {std::exp(lv), false};
}

WeightValue eval(const WeightSpec& v, const TFPoint& z) { return eval_radius(v, z.norm()); }

double inverse_square(const WeightSpec& v, double r) { return std::exp(-2.0 * v.log_value(r)); }

SubmultiplicativeResult submultiplicative_check(const WeightSpec& v, int trials, std::uint64_t seed, int d) {
  require(trials >= 1, "trials must be positive", "trials");
  std::mt19937_64 rng(seed);
  const int dim = 2 * d;
  double worst = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    const auto z1 = random_in_ball(rng, dim, 10.0);
    const auto z2 = random_in_ball(rng, dim, 10.0);
    std::vector<double> sum(z1.size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = z1[k] + z2[k];
    const double excess = v.log_value(euclid(sum)) - v.log_value(euclid(z1)) - v.log_value(euclid(z2));
    worst = std::max(worst, excess);
  }
  return {worst <= std::log1p(1e-12), std::exp(worst), trials};
}

SubconvolutiveResult subconvolutive_check(const WeightSpec& v, double h, double R, int d) {
  require(h > 0.0 && h <= 0.5, "grid step must be in (0, 1/2]", "h");
  require(R >= 8.0, "convolution radius must be >= 8", "R");
  const int dim = 2 * d;
  // Halve the step until two successive levels agree, within a cost cap.
  const double probes = std::floor(R / 2.0) + 1.0;
  auto cost = [&](double step) { return probes * std::pow(2.0 * R / step, dim); };
  SubconvolutiveResult out{};
  double step = h;
  auto coarse = subconvolutive_constant(v, step, R, dim);
  for (;;) {
    const auto fine = subconvolutive_constant(v, step / 2.0, R, dim);
    out.step = step;
    out.constant = coarse.constant;
    out.refined_constant = fine.constant;
    out.boundary_fraction = std::max(coarse.boundary, fine.boundary);
    out.refinement_change = std::abs(fine.constant - coarse.constant) / fine.constant;
    if (!(out.refinement_change > 0.05) || cost(step / 4.0) > kSubconvolutiveCost) break;
    step /= 2.0;
    coarse = fine;
  }
  out.converged = out.boundary_fraction <= 0.02;
  out.pass = out.converged && std::isfinite(out.constant) && out.refinement_change <= 0.05;
  return out;
}

std::vector<double> grs_profile(const WeightSpec& v, const TFPoint& z, const std::vector<long long>& n_list) {
  const double r = z.norm();
  std::vector<double> out;
  out.reserve(n_list.size());
  long long prev = 0;
  for (long long n : n_list) {
    require(n > prev, "n_list must be positive and ascending", "n_list");
    prev = n;
    const double nn = static_cast<double>(n);
    out.push_back(std::exp(v.log_value(nn * r) / nn));
  }
  return out;
}

double next_radius(const PointSet& ps, double n) {
  const std::size_t k = ps.count_within(n);
  if (k >= ps.size()) {
    throw Error(ErrorCode::NoTailPoint, "no enumerated point beyond radius " + format_double(n), "bound_radius");
  }
  return ps.norm(k);
}

double bound_sup(const WeightSpec& v, const PointSet& ps, double n) { return inverse_square(v, next_radius(ps, n)); }

double tail_remainder(const WeightSpec& v, double R, int relsep, int d) {
  const int dim = 2 * d;
  if (v.kind == WeightSpec::Kind::Constant) return std::numeric_limits<double>::infinity();
  if (v.kind == WeightSpec::Kind::Polynomial && 2.0 * v.s <= dim) return std::numeric_limits<double>::infinity();
  // Each tail point lambda satisfies v(lambda)^{-2} <= mean over B_1(lambda) of
  // f(|z| - 1), f = v^{-2}, and at most relsep unit balls overlap at any z.
  // The ball volume cancels against the sphere surface dim |B_1| r^{dim-1}.
  auto integrand = [&](double r) {
    return inverse_square(v, std::max(r - 1.0, 0.0)) * std::pow(r, dim - 1);
  };
  double lower = std::max(R - 1.0, 0.0);
  double head = 0.0;
  if (lower < 1.0) {
    head = (1.0 - std::pow(lower, dim)) / dim;
    lower = 1.0;
  }
  boost::math::quadrature::exp_sinh<double> integrator;
  const double tail = integrator.integrate(integrand, lower, std::numeric_limits<double>::infinity());
  return static_cast<double>(relsep) * dim * (head + tail);
}

SumBound bound_sum(const WeightSpec& v, const PointSet& ps, double n, int relsep) {
  if (relsep <= 0) relsep = relative_separation(ps);
  next_radius(ps, n);
  long double sum = 0.0L;
  for (std::size_t i = ps.count_within(n); i < ps.size(); ++i) sum += inverse_square(v, ps.norm(i));
  SumBound out{static_cast<double>(sum), tail_remainder(v, ps.radius(), relsep, ps.dimension())};
  if (!(out.remainder <= out.sum)) {
    throw Error(ErrorCode::RemainderDominates,
                "tail remainder " + format_double(out.remainder) + " exceeds enumerated sum " +
                    format_double(out.sum) + " at radius " + format_double(n),
                "sweep.bound_radius");
  }
  return out;
}

}  // namespace gabor
