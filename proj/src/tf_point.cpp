#include "gabor/tf_point.hpp"

#include <cmath>

#include "gabor/error.hpp"

namespace gabor {

TFPoint::TFPoint(std::vector<double> time, std::vector<double> freq)
    : x(std::move(time)), xi(std::move(freq)) {
  if (x.size() != xi.size() || x.empty()) {
    throw Error(ErrorCode::InvalidArgument, "time and frequency parts must have equal positive length");
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!std::isfinite(x[k]) || !std::isfinite(xi[k])) {
      throw Error(ErrorCode::InvalidArgument, "time-frequency point has non-finite coordinates");
    }
  }
}

TFPoint TFPoint::origin(int d) {
  return TFPoint(std::vector<double>(d, 0.0), std::vector<double>(d, 0.0));
}

TFPoint TFPoint::from_coords(std::span<const double> coords) {
  if (coords.empty() || coords.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "coordinate count must be 2d");
  }
  const std::size_t d = coords.size() / 2;
  return TFPoint(std::vector<double>(coords.begin(), coords.begin() + d),
                 std::vector<double>(coords.begin() + d, coords.end()));
}

double TFPoint::norm_squared() const noexcept {
  double s = 0.0;
  for (double v : x) s += v * v;
  for (double v : xi) s += v * v;
  return s;
}

double TFPoint::norm() const noexcept { return std::sqrt(norm_squared()); }

std::vector<double> TFPoint::coords() const {
  std::vector<double> c(x);
  c.insert(c.end(), xi.begin(), xi.end());
  return c;
}

TFPoint operator-(const TFPoint& a, const TFPoint& b) {
  TFPoint r = a;
  for (std::size_t k = 0; k < r.x.size(); ++k) {
    r.x[k] -= b.x[k];
    r.xi[k] -= b.xi[k];
  }
  return r;
}

TFPoint operator+(const TFPoint& a, const TFPoint& b) {
  TFPoint r = a;
  for (std::size_t k = 0; k < r.x.size(); ++k) {
    r.x[k] += b.x[k];
    r.xi[k] += b.xi[k];
  }
  return r;
}

TFPoint tf(double x, double xi) { return TFPoint({x}, {xi}); }

}  // namespace gabor
