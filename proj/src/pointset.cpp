#include "gabor/pointset.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "gabor/error.hpp"
#include "gabor/io.hpp"

namespace gabor {
namespace {

Eigen::MatrixXd generator_matrix(const LatticeSpec& lat) {
  const int n = lat.size();
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = lat.at(r, c);
  return a;
}

bool canonical_less(const TFPoint& a, double na, const TFPoint& b, double nb) {
  if (na != nb) return na < nb;
  const auto ca = a.coords();
  const auto cb = b.coords();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// Unit-cell hash of point indices for neighbourhood queries.
class CellIndex {
 public:
  explicit CellIndex(const PointSet& ps) : ps_(ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) cells_[cell_of(ps[i].coords())].push_back(i);
  }

  template <typename Fn>
  void for_neighbours(const std::vector<double>& z, Fn&& fn) const {
    const auto base = cell_of(z);
    const std::size_t n = base.size();
    std::vector<long> offset(n, -1);
    while (true) {
      std::vector<long> key(n);
      for (std::size_t k = 0; k < n; ++k) key[k] = base[k] + offset[k];
      if (auto it = cells_.find(key); it != cells_.end()) {
        for (std::size_t idx : it->second) fn(idx);
      }
      std::size_t k = 0;
      while (k < n && offset[k] == 1) offset[k++] = -1;
      if (k == n) break;
      ++offset[k];
    }
  }

 private:
  static std::vector<long> cell_of(const std::vector<double>& c) {
    std::vector<long> key(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) key[k] = static_cast<long>(std::floor(c[k]));
    return key;
  }

  const PointSet& ps_;
  std::map<std::vector<long>, std::vector<std::size_t>> cells_;
};

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace

LatticeSpec LatticeSpec::make(int d, std::vector<double> row_major) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "lattice dimension must be positive", "lattice.dimension");
  const std::size_t n = static_cast<std::size_t>(2 * d);
  if (row_major.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "lattice generator needs (2d)^2 entries", "lattice.generator");
  }
  for (double v : row_major) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite lattice generator", "lattice.generator");
  }
  LatticeSpec lat{d, std::move(row_major)};
  if (!(std::abs(generator_matrix(lat).determinant()) > 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "lattice generator is singular", "lattice.generator");
  }
  return lat;
}

LatticeSpec LatticeSpec::scaled_identity(int d, double scale) {
  const int n = 2 * d;
  std::vector<double> g(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i * n + i)] = scale;
  return make(d, std::move(g));
}

TFPoint LatticeSpec::map(const std::vector<long>& k) const {
  const int n = size();
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < n; ++r) {
    double s = 0.0;
    for (int col = 0; col < n; ++col) s += at(r, col) * static_cast<double>(k[static_cast<std::size_t>(col)]);
    c[static_cast<std::size_t>(r)] = s;
  }
  return TFPoint::from_coords(c);
}

std::vector<double> LatticeSpec::preimage(const TFPoint& lambda) const {
  const auto c = lambda.coords();
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
  const Eigen::VectorXd k = generator_matrix(*this).partialPivLu().solve(rhs);
  return {k.data(), k.data() + k.size()};
}

double LatticeSpec::inverse_inf_norm() const {
  const Eigen::MatrixXd inv = generator_matrix(*this).inverse();
  return inv.cwiseAbs().rowwise().sum().maxCoeff();
}

PointSet::PointSet(std::vector<TFPoint> points, double radius, std::optional<LatticeSpec> source)
    : radius_(radius), source_(std::move(source)) {
  if (!(radius >= 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative", "radius");
  dimension_ = points.empty() ? (source_ ? source_->d : 1) : points.front().dimension();
  std::vector<double> norms(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dimension() != dimension_) throw Error(ErrorCode::InvalidArgument, "mixed point dimensions");
    norms[i] = points[i].norm();
    if (norms[i] > radius + kBallTolerance) throw Error(ErrorCode::InvalidArgument, "point outside the section radius");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return canonical_less(points[i], norms[i], points[j], norms[j]);
  });
  points_.reserve(points.size());
  for (std::size_t i : order) {
    points_.push_back(std::move(points[i]));
    norms_.push_back(norms[i]);
  }
  ids_.resize(points_.size());
  std::iota(ids_.begin(), ids_.end(), 0);
}

std::size_t PointSet::count_within(double n) const {
  return static_cast<std::size_t>(std::upper_bound(norms_.begin(), norms_.end(), n + kBallTolerance) - norms_.begin());
}

PointSet PointSet::truncated(double n) const {
  if (n > radius_ + kBallTolerance) throw Error(ErrorCode::InvalidArgument, "truncation radius exceeds section radius");
  PointSet out;
  const std::size_t k = count_within(n);
  out.points_.assign(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(k));
  out.norms_.assign(norms_.begin(), norms_.begin() + static_cast<std::ptrdiff_t>(k));
  out.ids_.assign(ids_.begin(), ids_.begin() + static_cast<std::ptrdiff_t>(k));
  out.radius_ = std::max(n, 0.0);
  out.dimension_ = dimension_;
  out.source_ = source_;
  return out;
}

PointSet enumerate_lattice_in_ball(const LatticeSpec& lattice, double n, std::size_t cap) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative", "radius");
  const int dim = lattice.size();
  // |k|_inf <= ||A^{-1}||_inf |lambda|_inf <= ||A^{-1}||_inf n.
  const long bound = static_cast<long>(std::floor(n * lattice.inverse_inf_norm() + 1e-9));
  const double box = std::pow(2.0 * static_cast<double>(bound) + 1.0, dim);
  if (box > 2e8) throw Error(ErrorCode::TooManyPoints, "candidate box too large for radius " + format_double(n));
  std::vector<TFPoint> pts;
  std::vector<long> k(static_cast<std::size_t>(dim), -bound);
  while (true) {
    TFPoint p = lattice.map(k);
    if (p.norm() <= n + kBallTolerance) {
      pts.push_back(std::move(p));
      if (pts.size() > cap) {
        throw Error(ErrorCode::TooManyPoints,
                    "more than " + std::to_string(cap) + " lattice points within radius " + format_double(n),
                    "caps.max_points");
      }
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == bound) k[i++] = -bound;
    if (i == k.size()) break;
    ++k[i];
  }
  return PointSet(std::move(pts), n, lattice);
}

PointSet explicit_pointset(std::vector<TFPoint> points, double radius) {
  if (radius < 0.0) {
    double r = 0.0;
    for (const auto& p : points) r = std::max(r, p.norm());
    return PointSet(std::move(points), r);
  }
  std::vector<TFPoint> kept;
  for (auto& p : points) {
    if (p.norm() <= radius + kBallTolerance) kept.push_back(std::move(p));
  }
  return PointSet(std::move(kept), radius);
}

PointSet read_pointset_csv(const std::filesystem::path& path, int d, double radius) {
  const CsvTable table = read_csv(path);
  std::vector<std::size_t> cols;
  for (int k = 1; k <= d; ++k) cols.push_back(table.column("x_" + std::to_string(k)));
  for (int k = 1; k <= d; ++k) cols.push_back(table.column("xi_" + std::to_string(k)));
  std::vector<TFPoint> pts;
  for (const auto& row : table.rows) {
    std::vector<double> c;
    for (std::size_t col : cols) c.push_back(row[col]);
    pts.push_back(TFPoint::from_coords(c));
  }
  if (pts.empty()) throw Error(ErrorCode::InvalidArgument, "point set CSV is empty", path.string());
  return explicit_pointset(std::move(pts), radius);
}

std::vector<std::vector<std::size_t>> nested_masks(const PointSet& ps, const std::vector<double>& radii) {
  for (std::size_t j = 1; j < radii.size(); ++j) {
    if (!(radii[j] >= radii[j - 1])) throw Error(ErrorCode::RadiiNotAscending, "radii must be ascending", "radii");
  }
  if (!radii.empty() && radii.back() > ps.radius() + kBallTolerance) {
    throw Error(ErrorCode::InvalidArgument, "largest radius exceeds the enumerated section", "radii");
  }
  std::vector<std::vector<std::size_t>> masks;
  masks.reserve(radii.size());
  for (double r : radii) {
    std::vector<std::size_t> m(ps.count_within(r));
    std::iota(m.begin(), m.end(), 0);
    masks.push_back(std::move(m));
  }
  return masks;
}

double minimal_distance(const PointSet& ps) {
  if (ps.size() < 2) return std::numeric_limits<double>::infinity();
  CellIndex index(ps);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto ci = ps[i].coords();
    index.for_neighbours(ci, [&](std::size_t j) {
      if (j != i) best = std::min(best, distance(ci, ps[j].coords()));
    });
  }
  // No pair within the neighbouring unit cells: every pair is at least 1 apart.
  return std::isfinite(best) ? best : 1.0;
}

int relative_separation(const PointSet& ps) {
  if (ps.empty()) throw Error(ErrorCode::InvalidArgument, "empty point set");
  CellIndex index(ps);
  auto count_at = [&](const std::vector<double>& z) {
    int c = 0;
    index.for_neighbours(z, [&](std::size_t j) {
      if (distance(z, ps[j].coords()) <= 1.0 + kBallTolerance) ++c;
    });
    return c;
  };
  int best = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) best = std::max(best, count_at(ps[i].coords()));

  const double dmin = minimal_distance(ps);
  const double step = std::min(0.5, dmin / 2.0);
  const double reach = ps.radius() + 1.0;
  const long m = static_cast<long>(std::ceil(reach / step));
  const int dim = 2 * ps.dimension();
  std::vector<long> k(static_cast<std::size_t>(dim), -m);
  std::vector<double> z(static_cast<std::size_t>(dim));
  while (true) {
    double r2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      z[static_cast<std::size_t>(j)] = step * static_cast<double>(k[static_cast<std::size_t>(j)]);
      r2 += z[static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
    }
    if (r2 <= reach * reach) best = std::max(best, count_at(z));
    std::size_t i = 0;
    while (i < k.size() && k[i] == m) k[i++] = -m;
    if (i == k.size()) break;
    ++k[i];
  }
  return best;
}

}  // namespace gabor
