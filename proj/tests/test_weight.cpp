#include <doctest.h>

#include <cmath>

#include "gabor/error.hpp"
#include "gabor/pointset.hpp"
#include "gabor/weight.hpp"

using namespace gabor;

namespace {

const LatticeSpec unit = LatticeSpec::scaled_identity(1, 1.0);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("weight evaluation") {
  CHECK(eval_radius(WeightSpec::polynomial(2), 3).value == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(eval_radius(WeightSpec::subexponential(1, 0.5), 4).value == doctest::Approx(std::exp(2.0)).epsilon(1e-15));
  CHECK(eval(WeightSpec::exponential(2), tf(3, 4)).value == doctest::Approx(std::exp(10.0)).epsilon(1e-15));
  for (const auto& v : {WeightSpec::constant(), WeightSpec::polynomial(3), WeightSpec::subexponential(2, 0.3),
                        WeightSpec::exponential(0.7)}) {
    CHECK(eval(v, tf(0, 0)).value == 1.0);
    double prev = 1.0;
    for (double r = 0.0; r < 50; r += 0.37) {
      const double x = eval_radius(v, r).value;
      CHECK(x >= prev);
      prev = x;
    }
  }
}

TEST_CASE("overflow is flagged") {
  const auto w = eval_radius(WeightSpec::exponential(1), 800);
  CHECK(w.overflow);
  CHECK(std::isinf(w.value));
  CHECK_FALSE(eval_radius(WeightSpec::exponential(1), 600).overflow);
  CHECK(inverse_square(WeightSpec::exponential(1), 800) == 0.0);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(WeightSpec::polynomial(-1), Error);
  CHECK_THROWS_AS(WeightSpec::subexponential(1, 1), Error);
  CHECK_THROWS_AS(WeightSpec::subexponential(0, 0.5), Error);
  CHECK_THROWS_AS(WeightSpec::exponential(0), Error);
}

TEST_CASE("submultiplicativity") {
  for (const auto& v : {WeightSpec::polynomial(2.5), WeightSpec::exponential(1.3), WeightSpec::subexponential(1, 0.5)}) {
    const auto r = submultiplicative_check(v, 1000, 42);
    CHECK(r.pass);
    CHECK(r.worst_ratio <= 1.0 + 1e-12);
    CHECK(r.trials == 1000);
  }
  CHECK(submultiplicative_check(WeightSpec::polynomial(2), 200, 3, 2).pass);
}

TEST_CASE("subconvolutivity") {
  const auto p = subconvolutive_check(WeightSpec::polynomial(4), 0.5, 8);
  CHECK(p.pass);
  CHECK(std::isfinite(p.constant));
  // The peak of (1 + r)^{-6} needs a finer grid than the starting step.
  const auto p6 = subconvolutive_check(WeightSpec::polynomial(6), 0.5, 8);
  CHECK(p6.pass);
  CHECK(p6.step < 0.5);
  CHECK(p6.refinement_change <= 0.05);
  const auto c = subconvolutive_check(WeightSpec::constant(), 0.5, 8);
  CHECK_FALSE(c.pass);
  CHECK_FALSE(c.converged);
  // Truncated constant grows with R for v = 1.
  CHECK(subconvolutive_check(WeightSpec::constant(), 0.5, 12).constant > c.constant);
  const auto se = subconvolutive_check(WeightSpec::subexponential(1, 0.5), 0.5, 24);
  CHECK(se.pass);
  CHECK(se.refinement_change < 0.05);
}

TEST_CASE("GRS profiles") {
  const auto poly = grs_profile(WeightSpec::polynomial(2), tf(1, 0), {1, 10, 100, 1000000});
  CHECK(poly.back() == doctest::Approx(std::exp(2 * std::log(1e6 + 1) / 1e6)).epsilon(1e-14));
  CHECK(poly.back() == doctest::Approx(1.0000276).epsilon(1e-7));
  for (std::size_t i = 1; i < poly.size(); ++i) CHECK(poly[i] < poly[i - 1]);
  const auto ex = grs_profile(WeightSpec::exponential(1), tf(0.6, 0.8), {1, 7, 1000, 100000});
  for (double x : ex) CHECK(std::abs(x - std::exp(1.0)) < 1e-9);
  const auto se = grs_profile(WeightSpec::subexponential(1, 0.5), tf(1, 0), {10000});
  CHECK(se[0] == doctest::Approx(std::exp(0.01)).epsilon(1e-14));
  CHECK_THROWS_AS(grs_profile(WeightSpec::constant(), tf(1, 0), {3, 2}), Error);
}

TEST_CASE("sup bound") {
  const auto ps = enumerate_lattice_in_ball(unit, 10);
  CHECK(next_radius(ps, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(bound_sup(WeightSpec::polynomial(1), ps, 1) == doctest::Approx(0.1715728752538099024).epsilon(1e-14));
  CHECK(bound_sup(WeightSpec::subexponential(1, 0.5), ps, 3) == doctest::Approx(0.028536856402400613921).epsilon(1e-14));
  CHECK(bound_sup(WeightSpec::constant(), ps, 4) == 1.0);
  CHECK(code_of([&] { bound_sup(WeightSpec::constant(), ps, 10); }) == ErrorCode::NoTailPoint);
}

TEST_CASE("sum bound") {
  const auto ps40 = enumerate_lattice_in_ball(unit, 40);
  CHECK(code_of([&] { bound_sum(WeightSpec::constant(), ps40, 2); }) == ErrorCode::RemainderDominates);
  // Direct sum over 2 < |lambda| <= 40 at 40 digits.
  const auto p3 = bound_sum(WeightSpec::polynomial(3), ps40, 2);
  CHECK(p3.sum == doctest::Approx(0.014049887456546654227).epsilon(1e-12));
  CHECK(p3.remainder < 0.01 * p3.sum);
  const auto ps20 = enumerate_lattice_in_ball(unit, 20);
  const auto se = bound_sum(WeightSpec::subexponential(1, 0.5), ps20, 2);
  CHECK(se.sum == doctest::Approx(3.1103999336921848528).epsilon(1e-12));
  CHECK(se.remainder < 0.1 * se.sum);
}

TEST_CASE("tail remainder bounds the true tail") {
  const auto big = enumerate_lattice_in_ball(unit, 60);
  for (const auto& v : {WeightSpec::polynomial(3), WeightSpec::subexponential(1, 0.5)}) {
    const double R = 15;
    double tail = 0;
    for (std::size_t i = big.count_within(R); i < big.size(); ++i) tail += inverse_square(v, big.norm(i));
    CHECK(tail <= tail_remainder(v, R, 5, 1));
  }
  CHECK(std::isinf(tail_remainder(WeightSpec::polynomial(1), 10, 5, 1)));
  CHECK(std::isinf(tail_remainder(WeightSpec::constant(), 10, 5, 1)));
}

TEST_CASE("bounds are nonincreasing in n and ordered") {
  const auto ps = enumerate_lattice_in_ball(unit, 40);
  const auto v = WeightSpec::subexponential(1, 0.5);
  const int rel = relative_separation(ps);
  double prev_sup = 2, prev_sum = 1e300;
  for (double n = 0.5; n <= 8; n += 0.5) {
    const double s = bound_sup(v, ps, n);
    const double t = bound_sum(v, ps, n, rel).total();
    CHECK(s <= prev_sup);
    CHECK(t <= prev_sum);
    CHECK(s <= t);
    prev_sup = s;
    prev_sum = t;
  }
}
