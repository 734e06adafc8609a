#include "gabor/window.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "quadrature.hpp"

namespace gabor {
namespace {

constexpr double kPi = std::numbers::pi;

double trapezoid_norm_squared(const std::vector<complex>& s, double h) {
  long double acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long double w = (i == 0 || i + 1 == s.size()) ? 0.5L : 1.0L;
    acc += w * std::norm(s[i]);
  }
  return static_cast<double>(acc * h);
}

void require_d1(const WindowSpec& w, const char* what) {
  if (w.dimension() != 1 && !w.is_gaussian()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": sampled windows are 1-d");
  }
}

}  // namespace

WindowSpec WindowSpec::gaussian(int d, bool normalized) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "Gaussian dimension must be positive", "window.dimension");
  WindowSpec w;
  w.kind_ = Kind::Gaussian;
  w.dimension_ = d;
  w.normalized_ = normalized;
  // ||phi||^2 = 2^{-d/2}; the unit-norm version is 2^{d/4} phi.
  w.amplitude_ = normalized ? std::pow(2.0, d / 4.0) : 1.0;
  w.norm_squared_ = normalized ? 1.0 : std::pow(2.0, -d / 2.0);
  return w;
}

WindowSpec WindowSpec::sampled(double start, double step, std::vector<complex> samples, bool normalized) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidArgument, "sample step must be positive", "window.step");
  }
  if (samples.size() < 8) {
    throw Error(ErrorCode::InvalidArgument, "sampled window needs at least 8 samples", "window.samples");
  }
  if (!std::isfinite(start)) throw Error(ErrorCode::InvalidArgument, "non-finite window start", "window.start");
  for (const auto& v : samples) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::InvalidArgument, "sampled window has non-finite values", "window.samples");
    }
  }
  WindowSpec w;
  w.kind_ = Kind::Sampled;
  w.dimension_ = 1;
  w.normalized_ = normalized;
  w.start_ = start;
  w.step_ = step;
  const double raw = trapezoid_norm_squared(samples, step);
  if (!(raw > 0.0)) throw Error(ErrorCode::InvalidArgument, "sampled window is identically zero", "window.samples");
  if (normalized) {
    w.amplitude_ = 1.0 / std::sqrt(raw);
    for (auto& v : samples) v *= w.amplitude_;
  }
  w.samples_ = std::move(samples);
  w.norm_squared_ = trapezoid_norm_squared(w.samples_, step);
  return w;
}

WindowSpec WindowSpec::from_csv(const std::filesystem::path& path, bool normalized) {
  const CsvTable table = read_csv(path);
  const auto ct = table.column("t");
  const auto cre = table.column("re");
  const auto cim = table.column("im");
  if (table.rows.size() < 2) throw Error(ErrorCode::InvalidArgument, "window CSV has too few rows", path.string());
  std::vector<complex> samples;
  samples.reserve(table.rows.size());
  for (const auto& row : table.rows) samples.emplace_back(row[cre], row[cim]);
  const double t0 = table.rows.front()[ct];
  const double h = table.rows[1][ct] - t0;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const double expected = t0 + h * static_cast<double>(i);
    const double ti = table.rows[i][ct];
    if (std::abs(ti - expected) > 1e-9 * std::max(std::abs(h) * static_cast<double>(i), std::abs(expected))) {
      throw Error(ErrorCode::InvalidArgument, "window samples are not uniformly spaced (row " + std::to_string(i + 1) + ")",
                  path.string());
    }
  }
  return sampled(t0, h, std::move(samples), normalized);
}

complex WindowSpec::value(double t) const {
  if (dimension_ != 1) throw Error(ErrorCode::InvalidArgument, "pointwise value needs d = 1");
  if (is_gaussian()) return amplitude_ * std::exp(-kPi * t * t);
  const double idx = (t - start_) / step_;
  if (idx < 0.0 || idx > static_cast<double>(samples_.size() - 1)) return 0.0;
  const auto i0 = std::min(static_cast<std::size_t>(idx), samples_.size() - 2);
  const double frac = idx - static_cast<double>(i0);
  return samples_[i0] + (samples_[i0 + 1] - samples_[i0]) * frac;
}

complex gaussian_ambiguity(const TFPoint& z, int d, bool normalized) {
  if (z.dimension() != d) throw Error(ErrorCode::InvalidArgument, "point dimension does not match window");
  double dot = 0.0;
  for (int k = 0; k < d; ++k) dot += z.x[k] * z.xi[k];
  // exp(-pi i x.xi): reduce x.xi modulo 2 before scaling by pi.
  const double reduced = dot - 2.0 * std::round(dot / 2.0);
  const double modulus = std::pow(2.0, normalized ? 0.0 : -d / 2.0) * std::exp(-kPi * z.norm_squared() / 2.0);
  return std::polar(modulus, -kPi * reduced);
}

namespace {

// Inner product of two time-frequency shifted copies of windows, factored
// over coordinates for d-dimensional Gaussians.
complex shifted_inner_product(const WindowSpec* f, const TFPoint& zf, const WindowSpec* g, const TFPoint& zg) {
  const int d = zf.dimension();
  const bool separable = (f == nullptr || f->is_gaussian()) && (g == nullptr || g->is_gaussian());
  if (!separable && d != 1) throw Error(ErrorCode::InvalidArgument, "sampled windows are 1-d");
  if (d == 1) {
    return quad::inner_product_1d({f, zf.x[0], zf.xi[0]}, {g, zg.x[0], zg.xi[0]});
  }
  complex product = 1.0;
  for (int k = 0; k < d; ++k) {
    product *= quad::inner_product_1d({nullptr, zf.x[k], zf.xi[k]}, {nullptr, zg.x[k], zg.xi[k]});
  }
  const double af = f ? f->amplitude() : 1.0;
  const double ag = g ? g->amplitude() : 1.0;
  return product * (af * ag);
}

}  // namespace

complex numeric_ambiguity(const WindowSpec& w, const TFPoint& z) {
  if (z.dimension() != w.dimension()) throw Error(ErrorCode::InvalidArgument, "point dimension does not match window");
  return shifted_inner_product(&w, TFPoint::origin(w.dimension()), &w, z);
}

complex ambiguity(const WindowSpec& w, const TFPoint& z) {
  if (w.is_gaussian()) return gaussian_ambiguity(z, w.dimension(), w.normalized());
  return numeric_ambiguity(w, z);
}

complex tf_inner_product(const WindowSpec& w, const TFPoint& mu, const TFPoint& lambda) {
  if (mu.dimension() != w.dimension() || lambda.dimension() != w.dimension()) {
    throw Error(ErrorCode::InvalidArgument, "point dimension does not match window");
  }
  return shifted_inner_product(&w, mu, &w, lambda);
}

complex stft_gaussian_window(const WindowSpec& g, const TFPoint& z) {
  require_d1(g, "stft_gaussian_window");
  if (z.dimension() != g.dimension()) throw Error(ErrorCode::InvalidArgument, "point dimension does not match window");
  return shifted_inner_product(&g, TFPoint::origin(g.dimension()), nullptr, z);
}

}  // namespace gabor
