#pragma once

#include <complex>

#include "gabor/window.hpp"

namespace gabor::quad {

/// One factor e^{2 pi i freq t} h(t - shift) of a 1-d inner-product integrand.
/// window == nullptr selects the raw Gaussian exp(-pi t^2).
struct Factor {
  const WindowSpec* window = nullptr;
  double shift = 0.0;
  double freq = 0.0;
};

/// int f(t) conj(g(t)) dt for d = 1. Sampled factors are integrated on their
/// sample grid with a grid-halving check; purely analytic integrands use
/// trapezoid refinement until successive levels agree.
std::complex<double> inner_product_1d(const Factor& f, const Factor& g);

}  // namespace gabor::quad
