#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gabor/error.hpp"
#include "gabor/spectrum.hpp"

using namespace gabor;
using std::numbers::pi;

namespace {

const LatticeSpec half = LatticeSpec::scaled_identity(1, std::sqrt(0.5));
constexpr double eps = std::numeric_limits<double>::epsilon();

std::vector<double> half_radii() {
  std::vector<double> r;
  for (int k = 1; k <= 8; ++k) r.push_back(0.5 * k);
  return r;
}

}  // namespace

TEST_CASE("small sections") {
  const auto g = WindowSpec::gaussian(1);
  const auto one = eigs_hermitian(assemble_gram(g, explicit_pointset({tf(0, 0)})));
  CHECK(one.size() == 1);
  CHECK(one[0] == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  const auto two = eigs_hermitian(assemble_gram(g, explicit_pointset({tf(0, 0), tf(std::sqrt(0.5), 0)})));
  // ||g||^2 -+ |A_g(lambda)| at 40 digits.
  CHECK(std::abs(two[0] - 0.38470983924171307515) < 1e-12);
  CHECK(std::abs(two[1] - 1.0295037231313819737) < 1e-12);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(1, 1) = 1;
  const auto e = eigs_hermitian(d);
  CHECK(e[0] == 0.0);
  CHECK(e[1] == 1.0);
}

TEST_CASE("2x2 sections match the closed form") {
  const auto g = WindowSpec::gaussian(1);
  for (const auto& lambda : {tf(0.4, 0.9), tf(-1.2, 0.3), tf(2, -1)}) {
    const auto e = eigs_hermitian(assemble_gram(g, explicit_pointset({tf(0, 0), lambda})));
    const double a = std::abs(gaussian_ambiguity(lambda, 1));
    CHECK(std::abs(e[0] - (1 / std::sqrt(2.0) - a)) < 1e-12);
    CHECK(std::abs(e[1] - (1 / std::sqrt(2.0) + a)) < 1e-12);
  }
}

TEST_CASE("eigenpair residuals") {
  const auto G = assemble_gram(WindowSpec::gaussian(1), enumerate_lattice_in_ball(half, 3.0));
  const auto sys = eigensystem_hermitian(G.entries());
  const double n = static_cast<double>(G.size());
  const double gnorm = sys.values.cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < sys.values.size(); ++j) {
    const Eigen::VectorXcd u = sys.vectors.col(j);
    CHECK((G.entries() * u - sys.values(j) * u).norm() <= 10 * eps * n * gnorm);
  }
}

TEST_CASE("non-finite input does not return partial results") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(1, 2) = m(2, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(eigs_hermitian(m), Error);
}

TEST_CASE("density-2 sweep against high-precision eigenvalues") {
  const auto sweep = riesz_sweep(WindowSpec::gaussian(1), half, half_radii());
  REQUIRE(sweep.size() == 8);
  // Smallest and largest eigenvalues at 40 digits for radii 0.5 .. 2.5.
  const double a[] = {0.7071067811865475244, 0.0050439406084716045534, 0.00062523806440550980947,
                      1.8025012628078382004e-7, 4.616099594132703077e-11};
  const double b[] = {0.7071067811865475244, 1.4240741964307768814, 1.4685719670907339914, 1.5439024985173457046,
                      1.5751928197301874887};
  const std::size_t sizes[] = {1, 9, 13, 25, 37, 61, 69, 101};
  for (std::size_t i = 0; i < 8; ++i) CHECK(sweep[i].size == sizes[i]);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(sweep[i].a_n - a[i]) <= sweep[i].floor);
    CHECK(std::abs(sweep[i].b_n - b[i]) <= 1e-13);
    CHECK_FALSE(sweep[i].below_floor);
  }
  // The exact a_n at radius 3 is about 4.1e-18, far below eps N b_n.
  CHECK(sweep[5].below_floor);
  for (const auto& rb : sweep) CHECK(rb.floor == eps * static_cast<double>(rb.size) * rb.b_n);
}

TEST_CASE("interlacing, trace and Bessel stabilisation") {
  const auto g = WindowSpec::gaussian(1);
  const auto ps = enumerate_lattice_in_ball(half, 4.0);
  const auto G = assemble_gram(g, ps);
  const auto sweep = riesz_sweep(G, half_radii());
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    CHECK(sweep[i].a_n <= sweep[i - 1].a_n + 1e-12 * sweep[i].b_n);
    CHECK(sweep[i].b_n >= sweep[i - 1].b_n - 1e-12 * sweep[i].b_n);
  }
  CHECK(sweep[7].b_n / sweep[6].b_n <= 1.05);
  CHECK(sweep[6].b_n / sweep[5].b_n <= 1.05);
  const auto eigs = eigs_hermitian(G);
  double sum = 0;
  for (double e : eigs) sum += e;
  const double n = static_cast<double>(eigs.size());
  CHECK(std::abs(sum - n / std::sqrt(2.0)) <= 1e-9 * n / std::sqrt(2.0));
}

TEST_CASE("sweep edge cases") {
  const auto g = WindowSpec::gaussian(1);
  const auto zero = riesz_sweep(g, half, {0.0});
  CHECK(zero[0].a_n == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(zero[0].b_n == zero[0].a_n);
  const auto two = riesz_sweep(g, half, {1.0, std::sqrt(2.0)});
  CHECK(two[1].a_n <= two[0].a_n);
  CHECK(two[1].b_n >= two[0].b_n);
  CHECK_THROWS_AS(riesz_sweep(g, half, {2.0, 1.0}), Error);
  const auto a = riesz_sweep(g, half, half_radii(), 20000, 1);
  const auto b = riesz_sweep(g, half, half_radii(), 20000, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a_n == b[i].a_n);
    CHECK(a[i].b_n == b[i].b_n);
  }
}

TEST_CASE("gap detection") {
  const auto g1 = detect_gap({1e-18, 0.4, 0.9}, 1e-6);
  CHECK(g1.gap_found);
  CHECK(g1.cluster_zero == std::vector<double>{1e-18});
  CHECK(g1.band_min == 0.4);
  CHECK(g1.band_max == 0.9);
  const auto g2 = detect_gap({0.2, 0.4, 0.9}, 1e-6);
  CHECK(g2.cluster_zero.empty());
  CHECK(g2.band_min == 0.2);
  CHECK(g2.band_max == 0.9);
  CHECK_FALSE(g2.gap_found);
  // A cluster that crowds the band is not a gap.
  CHECK_FALSE(detect_gap({1e-5, 1.5e-5, 0.9}, 1.2e-5).gap_found);
  CHECK(detect_gap({-1e-17, 0.5}, 1e-4).gap_found);
}

TEST_CASE("critical density has no gap") {
  const auto G = assemble_gram(WindowSpec::gaussian(1), enumerate_lattice_in_ball(LatticeSpec::scaled_identity(1, 1.0), 4.0));
  const auto eigs = eigs_hermitian(G);
  const auto gap = detect_gap(eigs, kDefaultGapThreshold * eigs.back());
  CHECK_FALSE(gap.gap_found);
  CHECK(gap.cluster_zero.empty());
}
