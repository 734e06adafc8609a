#include "gabor/norms.hpp"

#include <cmath>
#include <vector>

#include "gabor/error.hpp"
#include "gabor/io.hpp"

namespace gabor {
namespace {

void check_grid(double R, double h) {
  if (!(R >= 4.0)) throw Error(ErrorCode::InvalidArgument, "norm estimate needs R >= 4", "R");
  if (!(h > 0.0 && h <= 0.25)) throw Error(ErrorCode::InvalidArgument, "norm estimate needs 0 < h <= 1/4", "h");
}

double stft_modulus(const WindowSpec& g, const TFPoint& z) {
  if (g.is_gaussian()) return g.amplitude() * std::abs(gaussian_ambiguity(z, g.dimension(), false));
  return std::abs(stft_gaussian_window(g, z));
}

// Visits every point of the cubic grid step * [lo, hi]^{dim}.
template <typename Fn>
void for_grid(int dim, long lo, long hi, double step, Fn&& fn) {
  std::vector<long> k(static_cast<std::size_t>(dim), lo);
  std::vector<double> c(static_cast<std::size_t>(dim));
  while (true) {
    for (int j = 0; j < dim; ++j) c[static_cast<std::size_t>(j)] = step * static_cast<double>(k[static_cast<std::size_t>(j)]);
    fn(k, c);
    std::size_t i = 0;
    while (i < k.size() && k[i] == hi) k[i++] = lo;
    if (i == k.size()) break;
    ++k[i];
  }
}

double radius_of(const std::vector<double>& c) {
  double s = 0.0;
  for (double x : c) s += x * x;
  return std::sqrt(s);
}

}  // namespace

NormEstimate m1v_norm_estimate(const WindowSpec& g, const WeightSpec& v, double R, double h) {
  check_grid(R, h);
  const int dim = 2 * g.dimension();
  const long M = static_cast<long>(std::floor(R / h + 1e-9));
  long double total = 0.0L, shell = 0.0L;
  NormEstimate out;
  for_grid(dim, -M, M, h, [&](const std::vector<long>&, const std::vector<double>& c) {
    const double r = radius_of(c);
    if (r > R + 1e-12) return;
    const TFPoint z = TFPoint::from_coords(c);
    const long double term = static_cast<long double>(stft_modulus(g, z)) * std::exp(v.log_value(r));
    total += term;
    if (r > R - 1.0) shell += term;
    ++out.points;
  });
  out.value = static_cast<double>(total) * std::pow(h, dim);
  out.last_shell = total > 0 ? static_cast<double>(shell / total) : 0.0;
  if (!std::isfinite(out.value) || out.last_shell > 0.01) {
    throw Error(ErrorCode::NotConverged,
                "outer shell carries " + format_double(out.last_shell) + " of the M1_v estimate", "R");
  }
  return out;
}

NormEstimate amalgam_norm_estimate(const WindowSpec& g, const WeightSpec& v, int K, int subgrid) {
  if (K < 4) throw Error(ErrorCode::InvalidArgument, "amalgam estimate needs K >= 4", "K");
  if (subgrid < 2) throw Error(ErrorCode::InvalidArgument, "amalgam subgrid needs >= 2 nodes per axis", "subgrid");
  const int d = g.dimension();
  const int dim = 2 * d;
  long double total = 0.0L, shell = 0.0L;
  NormEstimate out;
  const double sub = 1.0 / (subgrid - 1);
  for_grid(dim, -K, K, 1.0, [&](const std::vector<long>& k, const std::vector<double>& corner) {
    double sup = 0.0;
    for_grid(dim, 0, subgrid - 1, sub, [&](const std::vector<long>&, const std::vector<double>& offset) {
      std::vector<double> c(corner);
      for (int j = 0; j < dim; ++j) c[static_cast<std::size_t>(j)] += offset[static_cast<std::size_t>(j)];
      sup = std::max(sup, std::abs(ambiguity(g, TFPoint::from_coords(c))));
      ++out.points;
    });
    const long double term = static_cast<long double>(sup) * std::exp(v.log_value(radius_of(corner)));
    total += term;
    long kinf = 0;
    for (long kj : k) kinf = std::max(kinf, std::labs(kj));
    if (kinf == K) shell += term;
  });
  out.value = static_cast<double>(total);
  out.last_shell = total > 0 ? static_cast<double>(shell / total) : 0.0;
  if (!std::isfinite(out.value) || out.last_shell > 0.01) {
    throw Error(ErrorCode::NotConverged,
                "boundary cubes carry " + format_double(out.last_shell) + " of the amalgam estimate", "K");
  }
  return out;
}

NormEstimate m_inf_v_norm_estimate(const WindowSpec& g, const WeightSpec& v, double R, double h) {
  check_grid(R, h);
  const int dim = 2 * g.dimension();
  const long M = static_cast<long>(std::floor(R / h + 1e-9));
  NormEstimate out;
  out.value = -1.0;
  for_grid(dim, -M, M, h, [&](const std::vector<long>&, const std::vector<double>& c) {
    const double r = radius_of(c);
    if (r > R + 1e-12) return;
    const TFPoint z = TFPoint::from_coords(c);
    const double term = stft_modulus(g, z) * std::exp(v.log_value(r));
    ++out.points;
    if (term > out.value) {
      out.value = term;
      out.argmax = z;
      out.last_shell = r;
    }
  });
  return out;
}

}  // namespace gabor
