#include "quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gabor/error.hpp"

namespace gabor::quad {
namespace {

using ld = long double;
using cld = std::complex<ld>;

constexpr ld kPi = std::numbers::pi_v<ld>;
constexpr ld kEps = std::numeric_limits<ld>::epsilon();

// Neumaier compensated accumulation of a complex sum; also tracks sum |f|.
struct Accumulator {
  ld re = 0, im = 0, cre = 0, cim = 0, abs = 0;

  static void add(ld& s, ld& c, ld v) {
    const ld t = s + v;
    if (std::fabs(s) >= std::fabs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }
  void add(cld v, ld weight) {
    add(re, cre, v.real() * weight);
    add(im, cim, v.imag() * weight);
    abs += std::abs(v) * weight;
  }
  cld value() const { return {re + cre, im + cim}; }
};

cld phase(ld freq, ld t) {
  const ld p = freq * t;
  const ld frac = p - std::round(p);
  const ld angle = 2 * kPi * frac;
  return {std::cos(angle), std::sin(angle)};
}

ld raw_gaussian(ld u) { return std::exp(-kPi * u * u); }

// Value of a sampled window at u = node position relative to the window start
// expressed as a fractional index on the stride-s subgrid.
cld sampled_at(const WindowSpec& w, ld index, std::size_t stride) {
  const auto& s = w.samples();
  const std::size_t count = (s.size() - 1) / stride + 1;
  if (index < 0 || index > static_cast<ld>(count - 1)) return {0, 0};
  std::size_t i0 = static_cast<std::size_t>(std::floor(index));
  if (i0 >= count - 1) i0 = count - 1;
  const ld frac = index - static_cast<ld>(i0);
  const cld a(s[i0 * stride].real(), s[i0 * stride].imag());
  if (frac == 0 || i0 + 1 >= count) return a;
  const cld b(s[(i0 + 1) * stride].real(), s[(i0 + 1) * stride].imag());
  return a + (b - a) * frac;
}

cld factor_value(const Factor& f, ld t, ld node_index, ld grid_step, std::size_t stride) {
  cld base;
  if (f.window == nullptr) {
    base = raw_gaussian(t - f.shift);
  } else if (f.window->is_gaussian()) {
    base = static_cast<ld>(f.window->amplitude()) * raw_gaussian(t - f.shift);
  } else {
    // node_index counts nodes of the stride grid; the shift moves it by shift/step.
    base = sampled_at(*f.window, node_index - static_cast<ld>(f.shift) / grid_step, stride);
  }
  return base * phase(f.freq, t);
}

double factor_norm(const Factor& f) {
  if (f.window == nullptr) return std::sqrt(std::sqrt(0.5));
  return std::sqrt(f.window->norm_squared());
}

struct Level {
  cld value;
  ld abs_sum;
};

Level sampled_sum(const Factor& f, const Factor& g, const WindowSpec& grid, std::size_t stride) {
  const std::size_t n = (grid.samples().size() - 1) / stride + 1;
  const ld h = static_cast<ld>(grid.step()) * stride;
  const ld t0 = grid.start();
  Accumulator acc;
  for (std::size_t i = 0; i < n; ++i) {
    const ld t = t0 + h * static_cast<ld>(i);
    const ld idx = static_cast<ld>(i);
    const cld v = factor_value(f, t, idx, h, stride) * std::conj(factor_value(g, t, idx, h, stride));
    const ld weight = (i == 0 || i + 1 == n) ? h / 2 : h;
    acc.add(v, weight);
  }
  // An odd number of fine intervals leaves one unpaired panel at the right end.
  const std::size_t last = (n - 1) * stride, end = grid.samples().size() - 1;
  if (last < end) {
    const ld fine = static_cast<ld>(grid.step());
    const ld panel = fine * static_cast<ld>(end - last);
    for (std::size_t j : {last, end}) {
      const ld t = t0 + fine * static_cast<ld>(j);
      const ld idx = static_cast<ld>(j);
      acc.add(factor_value(f, t, idx, fine, 1) * std::conj(factor_value(g, t, idx, fine, 1)), panel / 2);
    }
  }
  return {acc.value(), acc.abs};
}

Level analytic_sum(const Factor& f, const Factor& g, ld center, ld half_width, ld h) {
  const long nodes = std::lround(2 * half_width / h);
  Accumulator acc;
  for (long k = 0; k <= nodes; ++k) {
    const ld t = center - half_width + h * static_cast<ld>(k);
    const cld v = factor_value(f, t, 0, h, 1) * std::conj(factor_value(g, t, 0, h, 1));
    const ld weight = (k == 0 || k == nodes) ? h / 2 : h;
    acc.add(v, weight);
  }
  return {acc.value(), acc.abs};
}

}  // namespace

std::complex<double> inner_product_1d(const Factor& f, const Factor& g) {
  const WindowSpec* grid = nullptr;
  if (f.window != nullptr && !f.window->is_gaussian()) grid = f.window;
  if (grid == nullptr && g.window != nullptr && !g.window->is_gaussian()) grid = g.window;

  if (grid != nullptr) {
    const Level fine = sampled_sum(f, g, *grid, 1);
    const Level coarse = sampled_sum(f, g, *grid, 2);
    const ld diff = std::abs(fine.value - coarse.value);
    const ld scale = static_cast<ld>(factor_norm(f) * factor_norm(g));
    if (diff > 1e-6L * std::abs(fine.value) + 1e-14L * scale) {
      throw Error(ErrorCode::GridTooCoarse,
                  "halving the sample grid changed the inner product by " +
                      std::to_string(static_cast<double>(diff)));
    }
    return {static_cast<double>(fine.value.real()), static_cast<double>(fine.value.imag())};
  }

  // Both factors are Gaussians: the product is a Gaussian of width 1/sqrt(2 pi)
  // centred between the two shifts; six units cover it far below 1e-60.
  const ld center = (static_cast<ld>(f.shift) + g.shift) / 2;
  const ld half_width = 6;
  ld h = 1.0L / 8;
  Level prev = analytic_sum(f, g, center, half_width, h);
  for (int level = 0; level < 9; ++level) {
    h /= 2;
    const Level next = analytic_sum(f, g, center, half_width, h);
    const ld diff = std::abs(next.value - prev.value);
    if (level > 0 && diff <= 1e-13L * std::abs(next.value) + 1e3L * kEps * next.abs_sum) {
      return {static_cast<double>(next.value.real()), static_cast<double>(next.value.imag())};
    }
    prev = next;
  }
  throw Error(ErrorCode::GridTooCoarse, "trapezoid refinement did not converge");
}

}  // namespace gabor::quad
