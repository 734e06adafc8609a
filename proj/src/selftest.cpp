#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "gabor/cli.hpp"
#include "gabor/error.hpp"
#include "gabor/fit.hpp"
#include "gabor/gram.hpp"
#include "gabor/io.hpp"
#include "gabor/kernel.hpp"
#include "gabor/pointset.hpp"
#include "gabor/spectrum.hpp"
#include "gabor/weight.hpp"
#include "gabor/window.hpp"

namespace gabor {
namespace {

using std::numbers::pi;

struct Case {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool near(double got, double want, double tol, std::string& detail) {
  if (std::abs(got - want) <= tol) return true;
  detail = "got " + format_double(got) + " want " + format_double(want);
  return false;
}

std::vector<Case> cases() {
  const auto phi = WindowSpec::gaussian(1);
  const auto half = LatticeSpec::scaled_identity(1, 1.0 / std::sqrt(2.0));
  const auto unit = LatticeSpec::scaled_identity(1, 1.0);
  return {
      {"ambiguity at origin", [=](std::string& d) { return near(gaussian_ambiguity(tf(0, 0), 1).real(), 1 / std::sqrt(2.0), 1e-15, d); }},
      {"ambiguity at (1,0)", [=](std::string& d) { return near(gaussian_ambiguity(tf(1, 0), 1).real(), std::exp(-pi / 2) / std::sqrt(2.0), 1e-15, d); }},
      {"ambiguity at (1,1)", [=](std::string& d) { return near(gaussian_ambiguity(tf(1, 1), 1).real(), -std::exp(-pi) / std::sqrt(2.0), 1e-15, d); }},
      {"quadrature matches closed form", [=](std::string& d) {
         const auto z = tf(0.7, -1.3);
         return near(std::abs(numeric_ambiguity(phi, z) - gaussian_ambiguity(z, 1)), 0.0, 1e-12, d);
       }},
      {"13 points of (1/sqrt2)Z^2 within sqrt2", [=](std::string& d) { return near(enumerate_lattice_in_ball(half, std::sqrt(2.0)).size(), 13, 0, d); }},
      {"5 points of Z^2 within 1", [=](std::string& d) { return near(enumerate_lattice_in_ball(unit, 1.0).size(), 5, 0, d); }},
      {"relative separation of Z^2", [=](std::string& d) { return near(relative_separation(enumerate_lattice_in_ball(unit, 3.0)), 5, 0, d); }},
      {"polynomial weight (1+3)^2", [](std::string& d) { return near(eval_radius(WeightSpec::polynomial(2), 3).value, 16, 1e-12, d); }},
      {"sub-exponential weight e^2", [](std::string& d) { return near(eval_radius(WeightSpec::subexponential(1, 0.5), 4).value, std::exp(2.0), 1e-12, d); }},
      {"GRS polynomial profile", [](std::string& d) {
         return near(grs_profile(WeightSpec::polynomial(2), tf(1, 0), {1000000})[0], std::exp(2 * std::log(1e6 + 1) / 1e6), 1e-12, d);
       }},
      {"bound_sup polynomial on Z^2", [=](std::string& d) {
         return near(bound_sup(WeightSpec::polynomial(1), enumerate_lattice_in_ball(unit, 5), 1), 1 / std::pow(1 + std::sqrt(2.0), 2), 1e-14, d);
       }},
      {"2x2 section eigenvalues", [=](std::string& d) {
         const auto G = assemble_gram(phi, explicit_pointset({tf(0, 0), tf(1 / std::sqrt(2.0), 0)}));
         const auto e = eigs_hermitian(G);
         const double a = std::exp(-pi / 4) / std::sqrt(2.0);
         return near(e[0], 1 / std::sqrt(2.0) - a, 1e-12, d) && near(e[1], 1 / std::sqrt(2.0) + a, 1e-12, d);
       }},
      {"contour projection of diag(0,1)", [](std::string& d) {
         Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(2, 2);
         G(1, 1) = 1.0;
         const auto gap = detect_gap({0.0, 1.0}, 1e-4);
         const auto P = contour_projection(GramSection::from_matrix(G), {0.0, 0.5, 32}, gap, 1);
         // The M-node trapezoid rule leaves exactly -q/(1-q), q = (rho/1)^M, at the eigenvalue 1.
         const double q = std::pow(0.5, 32);
         Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(2, 2);
         want(0, 0) = 1.0;
         want(1, 1) = -q / (1 - q);
         return near((P.P - want).norm(), 0.0, 1e-15, d);
       }},
      {"power-law fit of n^-4", [](std::string& d) {
         std::vector<RieszBounds> s;
         for (double n : {1.0, 2.0, 3.0, 4.0}) s.push_back({n, 1, std::pow(n, -4.0), 1.0, 0.0, false});
         return near(fit_decay(s, DecayModel::power_law()).fit.slope, -4.0, 1e-9, d);
       }},
      {"constant weight is not subconvolutive", [](std::string& d) {
         const bool pass = subconvolutive_check(WeightSpec::constant(), 0.5, 8).pass;
         if (pass) d = "check passed";
         return !pass;
       }},
  };
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& c : cases()) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const Error& e) {
      detail = e.machine_line();
    }
    out << (ok ? "PASS " : "FAIL ") << c.name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "selftest passed" : std::to_string(failures) + " selftest failures") << "\n";
  return failures;
}

}  // namespace gabor
