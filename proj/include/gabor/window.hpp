#pragma once

#include <complex>
#include <filesystem>
#include <vector>

#include "gabor/tf_point.hpp"

namespace gabor {

using complex = std::complex<double>;

/// A window function g: either the Gaussian phi(t) = exp(-pi |t|^2) in
/// dimension d, or a uniformly sampled 1-d window. With normalized=true the
/// window is rescaled to unit L2 norm; otherwise it is used as given.
class WindowSpec {
 public:
  enum class Kind { Gaussian, Sampled };

  static WindowSpec gaussian(int d = 1, bool normalized = false);
  static WindowSpec sampled(double start, double step, std::vector<complex> samples,
                            bool normalized = false);
  /// Reads columns t, re, im (header row required); spacing must be uniform
  /// to relative 1e-9.
  static WindowSpec from_csv(const std::filesystem::path& path, bool normalized = false);

  Kind kind() const noexcept { return kind_; }
  bool is_gaussian() const noexcept { return kind_ == Kind::Gaussian; }
  int dimension() const noexcept { return dimension_; }
  bool normalized() const noexcept { return normalized_; }

  /// Factor applied to the raw window (1 unless normalized).
  double amplitude() const noexcept { return amplitude_; }
  /// ||g||_2^2: analytic for the Gaussian, trapezoid rule for sampled windows.
  double norm_squared() const noexcept { return norm_squared_; }

  // Sampled windows only. Samples are returned already scaled by amplitude().
  double start() const noexcept { return start_; }
  double step() const noexcept { return step_; }
  const std::vector<complex>& samples() const noexcept { return samples_; }

  /// Pointwise value for d = 1 (linear interpolation between samples, zero
  /// outside the sampled support).
  complex value(double t) const;

 private:
  WindowSpec() = default;

  Kind kind_ = Kind::Gaussian;
  int dimension_ = 1;
  bool normalized_ = false;
  double amplitude_ = 1.0;
  double norm_squared_ = 0.0;
  double start_ = 0.0;
  double step_ = 0.0;
  std::vector<complex> samples_;
};

/// Closed form of <phi, pi(z) phi> for the Gaussian in dimension d:
/// 2^{-d/2} exp(-pi |z|^2 / 2) exp(-pi i x.xi), times 2^{d/2} when normalized.
complex gaussian_ambiguity(const TFPoint& z, int d, bool normalized = false);

/// A_g(z) = <g, pi(z) g> by quadrature. Throws GridTooCoarse when the grid
/// refinement check fails.
complex numeric_ambiguity(const WindowSpec& w, const TFPoint& z);

/// A_g(z) by the cheapest exact route: closed form for Gaussians, quadrature
/// otherwise.
complex ambiguity(const WindowSpec& w, const TFPoint& z);

/// <pi(mu) g, pi(lambda) g> computed directly by quadrature of
/// int e^{2 pi i mu_2 t} g(t - mu_1) conj(e^{2 pi i lambda_2 t} g(t - lambda_1)) dt.
complex tf_inner_product(const WindowSpec& w, const TFPoint& mu, const TFPoint& lambda);

/// V_phi g(z) = <g, pi(z) phi> with the raw Gaussian phi as analysis window.
complex stft_gaussian_window(const WindowSpec& g, const TFPoint& z);

}  // namespace gabor
