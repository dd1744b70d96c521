#include <doctest.h>

#include <cmath>
#include <random>

#include "hzml/chi.hpp"
#include "hzml/errors.hpp"
#include "hzml/gamma.hpp"
#include "reference_values.hpp"

using namespace hzml;

TEST_CASE("log_gamma against mpmath and lgamma") {
  for (const auto& p : ref::kLogGamma) {
    CAPTURE(p.z);
    CHECK(std::abs(log_gamma(p.z) - p.value) <= 1e-12 * std::max(1.0, std::abs(p.value)));
  }
  for (double x : {0.5, 1.0, 2.5, 7.25, 33.0}) CHECK(std::abs(log_gamma({x, 0.0}).real() - std::lgamma(x)) < 1e-13 * (1 + x * x));
  CHECK_THROWS_AS(log_gamma({-2.0, 0.0}), PoleProximityError);
}

TEST_CASE("polygamma against mpmath") {
  for (const auto& p : ref::kPolygamma) {
    CAPTURE(p.m);
    CAPTURE(p.z);
    CHECK(std::abs(polygamma(p.m, p.z) - p.value) <= 1e-11 * std::max(1.0, std::abs(p.value)));
  }
}

TEST_CASE("tan_jet matches closed forms") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-1.4, 1.4), im(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const cplx w{re(rng), im(rng)};
    const auto jet = tan_jet(w, 3);
    const cplx tn = std::tan(w);
    const cplx sec2 = 1.0 + tn * tn;
    CHECK(std::abs(jet[0] - tn) < 1e-13 * (1.0 + std::abs(tn)));
    CHECK(std::abs(jet[1] - sec2) < 1e-12 * (1.0 + std::abs(sec2)));
    CHECK(std::abs(jet[2] - 2.0 * tn * sec2) < 1e-11 * (1.0 + std::abs(tn * sec2)));
    const cplx d3 = 2.0 * sec2 * sec2 + 4.0 * tn * tn * sec2;
    CHECK(std::abs(jet[3] - d3) < 1e-11 * (1.0 + std::abs(d3)));
  }
}

TEST_CASE("chi satisfies chi(s) chi(1-s) = 1") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> sig(-0.5, 1.5), ht(2.0, 1e3);
  for (int i = 0; i < 50; ++i) {
    const ComplexPoint s{sig(rng), ht(rng)};
    CHECK(std::abs(chi(s) * chi(s.reflect()) - 1.0) < 1e-10);
  }
  CHECK(std::abs(std::abs(chi(ComplexPoint::on_line(123.4))) - 1.0) < 1e-13);
  CHECK_THROWS_AS(chi({1.0, 0.0}), PoleProximityError);
}

TEST_CASE("Stirling form of chi(1-s)") {
  const ComplexPoint s{0.5, 2e4};
  const cplx exact = chi(s.reflect());
  CHECK(std::abs(chi_one_minus_s_stirling(s) - exact) < 1e-4);
}

TEST_CASE("omega is the logarithmic derivative of chi") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> sig(-0.5, 1.5), ht(2.0, 500.0);
  const double h = 1e-5;
  for (int i = 0; i < 30; ++i) {
    const ComplexPoint s{sig(rng), ht(rng)};
    const auto jet = omega_jet(s, 2);
    // central differences of log chi and of omega itself
    const cplx dlog = (std::log(chi({s.sigma + h, s.t})) - std::log(chi({s.sigma - h, s.t}))) / (2 * h);
    CHECK(std::abs(jet[0] - dlog) < 1e-7 * (1.0 + std::abs(jet[0])));
    const cplx d1 = (omega_jet({s.sigma + h, s.t}, 0)[0] - omega_jet({s.sigma - h, s.t}, 0)[0]) / (2 * h);
    CHECK(std::abs(jet[1] - d1) < 1e-6 * (1.0 + std::abs(jet[1])));
    const cplx d2 = (omega_jet({s.sigma + h, s.t}, 1)[1] - omega_jet({s.sigma - h, s.t}, 1)[1]) / (2 * h);
    CHECK(std::abs(jet[2] - d2) < 1e-6 * (1.0 + std::abs(jet[2])));
  }
}

TEST_CASE("omega special values") {
  // psi(3/2) = 2 - Euler gamma - 2 log 2 and tan(3 pi / 4) = -1
  const double expected = std::log(kTwoPi) - (2.0 - 0.57721566490153286 - 2.0 * std::log(2.0)) - kPi / 2.0;
  CHECK(std::abs(omega_jet({1.5, 0.0}, 0)[0] - expected) < 1e-13);
  CHECK_THROWS_AS(omega_jet({2.0, 0.0}, 0), DomainError);
  // roughly -log(t / 2pi) high on the critical line
  const double t = kTwoPi * std::exp(1.0);
  CHECK(std::abs(omega_jet(ComplexPoint::on_line(t), 0)[0].real() + 1.0) < 1e-3);
  CHECK_THROWS_AS(omega_jet({0.0, 0.0}, 1), PoleProximityError);
  CHECK_THROWS_AS(omega_jet({0.5, 10.0}, 13), DomainError);
}

TEST_CASE("Riemann-Siegel theta") {
  for (const auto& p : ref::kTheta) {
    CAPTURE(p.x);
    CHECK(std::abs(riemann_siegel_theta(p.x) - p.value) < 1e-11 * std::max(1.0, std::abs(p.value)));
  }
  // chi(1/2 + it)^{-1/2} = exp(i theta)
  for (double t : {5.0, 77.7, 2500.0}) {
    const cplx e = std::exp(cplx(0.0, -2.0 * riemann_siegel_theta(t)));
    CHECK(std::abs(e - chi(ComplexPoint::on_line(t))) < 1e-11);
  }
}
