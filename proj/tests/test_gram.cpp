#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "gabor/gram.hpp"
#include "gabor/spectrum.hpp"

using namespace gabor;
using std::numbers::pi;

namespace {

const LatticeSpec half = LatticeSpec::scaled_identity(1, std::sqrt(0.5));

}  // namespace

TEST_CASE("Gram entries of the raw Gaussian") {
  const auto g = WindowSpec::gaussian(1);
  CHECK(std::abs(gram_entry(g, tf(0.3, -2), tf(0.3, -2)) - 1 / std::sqrt(2.0)) <= 2.3e-16);
  const complex e = gram_entry(g, tf(0, 0), tf(1, 0));
  CHECK(std::abs(e - 0.14699305810781040039) < 1e-16);
  const complex f = gram_entry(g, tf(1, 0), tf(0, 1));
  CHECK(std::abs(f) == doctest::Approx(std::exp(-pi) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::abs(f - tf_inner_product(g, tf(0, 1), tf(1, 0))) < 1e-14);
}

TEST_CASE("phase convention agrees with direct quadrature") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int d : {1, 2}) {
    const auto g = WindowSpec::gaussian(d);
    for (int i = 0; i < 20; ++i) {
      std::vector<double> a(2 * d), b(2 * d);
      for (auto& c : a) c = u(rng);
      for (auto& c : b) c = u(rng);
      const auto lambda = TFPoint::from_coords(a), mu = TFPoint::from_coords(b);
      const complex want = tf_inner_product(g, mu, lambda);
      const complex got = gram_entry(g, lambda, mu);
      CHECK(std::abs(got - want) <= 1e-6 * std::abs(want) + 1e-300);
    }
  }
}

TEST_CASE("sampled-window Gram matches direct inner products") {
  std::vector<complex> s;
  for (int i = 0; i <= 768; ++i) {
    const double t = -6 + i / 64.0;
    s.emplace_back(1 / std::cosh(pi * t), 0.2 * t * std::exp(-t * t));
  }
  const auto w = WindowSpec::sampled(-6, 1.0 / 64, s);
  const auto ps = enumerate_lattice_in_ball(LatticeSpec::scaled_identity(1, 0.5), 1.5);
  const auto G = assemble_gram(w, ps, 2);
  for (std::size_t r = 0; r < ps.size(); r += 3) {
    for (std::size_t c = 0; c < ps.size(); c += 2) {
      const complex want = tf_inner_product(w, ps[c], ps[r]);
      CHECK(std::abs(G.entries()(r, c) - want) <= 1e-6 * std::abs(want) + 1e-14);
    }
  }
  CHECK(check_gram(G).ok);
}

TEST_CASE("assembled sections satisfy the Gram invariants") {
  const auto g = WindowSpec::gaussian(1);
  const auto G = assemble_gram(g, enumerate_lattice_in_ball(half, 3.0));
  const auto checks = check_gram(G);
  CHECK(checks.hermitian_defect <= 1e-12);
  CHECK(checks.diagonal_defect <= 1e-10);
  const auto eigs = eigs_hermitian(G);
  CHECK(eigs.front() >= -1e-10 * eigs.back());
}

TEST_CASE("modulus depends only on the offset") {
  const auto g = WindowSpec::gaussian(1);
  const auto ps = enumerate_lattice_in_ball(half, 2.5);
  const auto G = assemble_gram(g, ps);
  std::map<std::pair<long, long>, double> seen;
  for (std::size_t r = 0; r < ps.size(); ++r) {
    for (std::size_t c = 0; c < ps.size(); ++c) {
      const auto k = std::make_pair(std::lround((ps[r].x[0] - ps[c].x[0]) / std::sqrt(0.5)),
                                    std::lround((ps[r].xi[0] - ps[c].xi[0]) / std::sqrt(0.5)));
      const double m = std::abs(G.entries()(r, c));
      const auto [it, fresh] = seen.emplace(k, m);
      if (!fresh) CHECK(std::abs(it->second - m) <= 1e-10 * it->second + 1e-300);
    }
  }
}

TEST_CASE("nested sections are leading principal submatrices") {
  const auto g = WindowSpec::gaussian(1);
  const auto big = assemble_gram(g, enumerate_lattice_in_ball(half, 4.0), 3);
  const auto small = assemble_gram(g, enumerate_lattice_in_ball(half, 2.0), 1);
  const auto n = small.size();
  CHECK(big.entries().topLeftCorner(n, n) == small.entries());
  CHECK(big.leading(static_cast<std::size_t>(n)).entries() == small.entries());
}

TEST_CASE("assembly is independent of the worker count") {
  const auto g = WindowSpec::gaussian(1);
  const auto ps = enumerate_lattice_in_ball(half, 3.0);
  CHECK(assemble_gram(g, ps, 1).entries() == assemble_gram(g, ps, 4).entries());
}

TEST_CASE("tiny entries are stored as exact zeros") {
  const auto g = WindowSpec::gaussian(1);
  const auto G = assemble_gram(g, explicit_pointset({tf(0, 0), tf(25, 0)}));
  CHECK(G.entries()(0, 1) == complex(0.0, 0.0));
}

TEST_CASE("C_v infinity norm") {
  const auto g = WindowSpec::gaussian(1);
  const auto G = assemble_gram(g, enumerate_lattice_in_ball(half, 3.0));
  CHECK(cv_infty_norm(G, WeightSpec::constant()).value == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::isfinite(cv_infty_norm(G, WeightSpec::polynomial(7)).value));
  std::vector<double> vals;
  for (double r : {2.0, 3.0, 4.0}) {
    vals.push_back(cv_infty_norm(assemble_gram(g, enumerate_lattice_in_ball(half, r)), WeightSpec::subexponential(1, 0.5)).value);
  }
  CHECK(vals[1] >= vals[0]);
  CHECK(std::abs(vals[2] - vals[1]) <= 1e-12 * vals[2]);
  const auto over = cv_infty_norm(GramSection::from_matrix(Eigen::MatrixXcd::Constant(3, 3, 1.0)), WeightSpec::exponential(400));
  CHECK(over.overflow);
}

TEST_CASE("envelope profile") {
  const auto g = WindowSpec::gaussian(1);
  const auto G = assemble_gram(g, enumerate_lattice_in_ball(half, 3.0));
  const auto env = envelope_extract(G);
  CHECK(env.at({0, 0}) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  for (std::size_t i = 0; i < env.offsets.size(); ++i) {
    const double k = std::hypot(static_cast<double>(env.offsets[i][0]), static_cast<double>(env.offsets[i][1]));
    const double cap = std::max(k - std::sqrt(2.0), 0.0);
    CHECK(env.values[i] >= 0.0);
    CHECK(env.values[i] <= std::exp(-pi * cap * cap / 2) / std::sqrt(2.0) * (1 + 1e-12));
  }
  // Decreasing along the positive time axis.
  double prev = env.at({0, 0});
  for (long k = 1; k <= 5; ++k) {
    const double t = env.at({k, 0});
    CHECK(t <= prev);
    prev = t;
  }
  double manual = 0;
  const auto v = WeightSpec::polynomial(2);
  for (std::size_t i = 0; i < env.offsets.size(); ++i) {
    manual += env.values[i] * std::pow(1 + std::hypot(double(env.offsets[i][0]), double(env.offsets[i][1])), 2);
  }
  CHECK(envelope_weighted_sum(env, v) == doctest::Approx(manual).epsilon(1e-12));
}
