#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "gabor/pointset.hpp"
#include "gabor/weight.hpp"
#include "gabor/window.hpp"

namespace gabor {

/// Hermitian Gram matrix G_{lambda mu} = <pi(mu) g, pi(lambda) g> of a finite
/// section, rows and columns in the canonical point order.
class GramSection {
 public:
  GramSection(Eigen::MatrixXcd entries, PointSet points, std::optional<WindowSpec> window = std::nullopt);

  /// Wraps a synthetic matrix. Without a point set, index i is attached to
  /// the 1-d point (i, 0).
  static GramSection from_matrix(Eigen::MatrixXcd entries, std::optional<PointSet> points = std::nullopt);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  const PointSet& pointset() const noexcept { return points_; }
  const std::optional<WindowSpec>& window() const noexcept { return window_; }

  /// Leading principal k x k submatrix: the Gram of the first k points.
  GramSection leading(std::size_t k) const;

 private:
  Eigen::MatrixXcd entries_;
  PointSet points_;
  std::optional<WindowSpec> window_;
};

/// Entry values below this modulus are stored as exact zeros.
inline constexpr double kGramZero = 1e-300;

/// G_{lambda mu} = e^{2 pi i lambda_1 . (mu_2 - lambda_2)} conj(A_g(mu - lambda)),
/// assembled over the upper triangle in parallel and filled Hermitian.
GramSection assemble_gram(const WindowSpec& w, const PointSet& ps, int threads = 0);

/// The same entry computed from the formula above, for a single pair.
complex gram_entry(const WindowSpec& w, const TFPoint& lambda, const TFPoint& mu);

struct CvNorm {
  double value;
  double log_value;
  bool overflow;
};

/// max over entries of |G_{lambda mu}| v(lambda - mu).
CvNorm cv_infty_norm(const GramSection& G, const WeightSpec& v);

/// Theta(k) = max |G_{lambda mu}| over pairs with lambda - mu in k + [0,1)^{2d};
/// empty bins are omitted. Offsets are sorted lexicographically.
struct EnvelopeProfile {
  std::vector<std::vector<long>> offsets;
  std::vector<double> values;

  /// Theta at an offset, or 0 for an empty bin.
  double at(const std::vector<long>& k) const;
};

EnvelopeProfile envelope_extract(const GramSection& G);

/// sum_k Theta(k) v(k).
double envelope_weighted_sum(const EnvelopeProfile& env, const WeightSpec& v);

struct GramChecks {
  double hermitian_defect;  // max |G - G^*| / max |G|
  double diagonal_defect;   // max |G_ii - ||g||^2|
  bool ok;                  // both within 1e-12 resp. 1e-10
};

GramChecks check_gram(const GramSection& G);

}  // namespace gabor
