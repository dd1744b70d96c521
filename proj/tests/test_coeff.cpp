#include <doctest.h>

#include <cmath>

#include "hzml/coeff.hpp"
#include "hzml/errors.hpp"
#include "hzml/theta_roots.hpp"

using namespace hzml;

namespace {

double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }
double binom(int n, int r) { return (r < 0 || r > n) ? 0.0 : fact(n) / (fact(r) * fact(n - r)); }

// The coefficient per unit U L^{2j+2} assembled from the unsimplified sums:
// the diagonal term plus 2 Re of the off-diagonal integral, whose three pieces are
// the (k+1) double sum, the residue sum over lambda, and the exp-factor sum.
// Zero locations are first order, so (T/2pi)^{z_g-1} = e^{-2 theta_g}.
double unsimplified_coefficient(int j, int k) {
  const double diag = 1.0 / (std::ldexp(1.0, 2 * j + 1) * (2 * j + 1) * kPi);

  double first = 0.0;
  for (int mu = 0; mu <= j; ++mu)
    for (int nu = 0; nu <= j; ++nu)
      first += binom(j, mu) * binom(j, nu) * fact(mu) * fact(nu) / fact(mu + nu + 2) *
               std::pow(-0.5, 2 * j - mu - nu);

  cplx residue = 0.0, expo = 0.0;
  if (k > 0) {
    const auto ts = trunc_exp_roots(k);
    for (const cplx& th : ts.roots) {
      const cplx x = std::exp(-2.0 * th);
      for (int mu = 0; mu <= j; ++mu) {
        for (int nu = 0; nu <= j; ++nu) {
          const double w = binom(j, mu) * binom(j, nu) * fact(mu) * fact(nu);
          cplx inner = 0.0;
          for (int lam = 0; lam <= mu + nu + 1; ++lam) inner += std::pow(-2.0 * th, lam) / fact(lam);
          residue += w * inner / std::pow(th, mu + nu + 2);
          expo += w * x / std::pow(th, mu + nu + 2);
        }
      }
    }
  }
  const double sgn = (j % 2) ? 1.0 : -1.0;  // (-1)^{j+1}
  const double quarter = std::ldexp(1.0, -(2 * j + 2));
  const cplx i1 = sgn * (k + 1) / kTwoPi * first + sgn / kTwoPi * quarter * residue - sgn / kTwoPi * quarter * expo;
  return diag + 2.0 * i1.real();
}

}  // namespace

TEST_CASE("breakdown examples") {
  const double T = 1e4;
  const double L = std::log(T / kTwoPi);
  const auto b00 = breakdown(0, 0, T, CoeffMode::Finite);
  CHECK(b00.term_delta == doctest::Approx(T * L * L / kTwoPi).epsilon(1e-14));
  CHECK(b00.term_cg == doctest::Approx(-T * L * L / kTwoPi).epsilon(1e-14));
  CHECK(std::abs(b00.total) < 1e-12 * b00.term_delta);

  const double cg = (std::exp(2.0) - 5.0) / (4.0 * kPi);
  CHECK(std::abs(asymptotic_coefficient(0, 1) - cg) < 1e-14);
  CHECK(std::abs(asymptotic_coefficient(1, 0) - 1.0 / (24.0 * kPi)) < 1e-15);

  const auto b11 = breakdown(1, 1, 1e6, CoeffMode::Asymptotic);
  CHECK(std::abs(b11.total) <= 1e-12 * b11.T * std::pow(b11.L, 4));
}

TEST_CASE("five terms add up and empty sums vanish") {
  for (int j = 0; j <= 3; ++j) {
    for (int k = 0; k <= 4; ++k) {
      const auto b = breakdown(j, k, 5e3, CoeffMode::Finite);
      CHECK(b.total == doctest::Approx(b.term_delta + b.term_cg + b.term_u + b.term_p2j2 + b.term_exp));
      CHECK(b.per_TL == doctest::Approx(b.total / (b.T * std::pow(b.L, 2 * j + 2))).epsilon(1e-13));
      if (j == 0) CHECK(b.term_u == 0.0);
      if (k == 0) {
        CHECK(b.term_u == 0.0);
        CHECK(b.term_p2j2 == 0.0);
        CHECK(b.term_exp == 0.0);
      } else {
        CHECK(b.term_delta == 0.0);
      }
    }
  }
}

TEST_CASE("diagonal coefficients vanish and the exp term drops out") {
  for (int k = 0; k <= 8; ++k) {
    const auto b = breakdown(k, k, 1e6, CoeffMode::Asymptotic);
    CHECK(std::abs(b.per_TL) <= 1e-12 * coefficient_scale(b));
    CHECK(std::abs(b.term_exp) <= 1e-12 * coefficient_scale(b) * b.T * std::pow(b.L, 2 * k + 2));
  }
}

TEST_CASE("coefficients are real and independent of the normalization") {
  for (int j = 0; j <= kMaxCoeffJ; ++j) {
    for (int k = 0; k <= 12; ++k) {
      CAPTURE(j);
      CAPTURE(k);
      const auto a = breakdown(j, k, 1e6, CoeffMode::Asymptotic);
      const auto b = breakdown(j, k, 1e9, CoeffMode::Asymptotic);
      CHECK(a.imag_leak <= 1e-10);
      CHECK(a.per_TL == b.per_TL);
    }
  }
}

TEST_CASE("final form equals the unsimplified assembly") {
  for (int j = 0; j <= 4; ++j) {
    for (int k = 0; k <= 6; ++k) {
      CAPTURE(j);
      CAPTURE(k);
      const auto b = breakdown(j, k, 1e6, CoeffMode::Asymptotic);
      const double oracle = unsimplified_coefficient(j, k);
      CHECK(std::abs(b.per_TL - oracle) <= 1e-10 * std::max(coefficient_scale(b), std::abs(oracle)));
    }
  }
}

TEST_CASE("finite mode approaches the asymptotic coefficient") {
  // with first-order zero locations (T/2pi)^{z_g - 1} = e^{-2 theta_g} exactly
  for (int k = 1; k <= 4; ++k) {
    const auto f = breakdown(1, k, 3e3, CoeffMode::Finite);
    CHECK(f.per_TL == doctest::Approx(asymptotic_coefficient(1, k)).epsilon(1e-12));
  }
  // refined zero locations shift the coefficient by O(1/L)
  double prev = INFINITY;
  for (double T : {1e4, 1e6, 1e8, 1e10}) {
    const auto r = breakdown(0, 1, T, CoeffMode::Finite, RootPlacement::Refined);
    const double gap = std::abs(r.per_TL - asymptotic_coefficient(0, 1));
    CHECK(gap * r.L <= 2.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK_THROWS_AS(breakdown(0, 1, 1e6, CoeffMode::Asymptotic, RootPlacement::Refined), DomainError);
  CHECK_THROWS_AS(breakdown(0, 1, 50.0, CoeffMode::Finite), DomainError);
  CHECK_THROWS_AS(breakdown(9, 1, 1e3, CoeffMode::Finite), DomainError);
}

TEST_CASE("combinatorial identity") {
  const auto a = combi_sum(0, 0);
  CHECK(a.lhs == -2.0);
  CHECK(a.rhs == -2.0);
  const auto b = combi_sum(1, 1);
  CHECK(b.lhs == 0.0);
  CHECK(b.rhs == 0.0);
  CHECK(combi_sum(5, 3).abs_gap == 0.0);
  for (int j = 0; j <= 15; ++j)
    for (int u = 0; u <= j; ++u) CHECK(combi_sum(j, u).holds());
  CHECK_THROWS_AS(combi_sum(3, 4), DomainError);
  CHECK_THROWS_AS(combi_sum(16, 0), DomainError);
}

TEST_CASE("first-term sum") {
  CHECK(first_term_sum(0).lhs == 0.5);
  CHECK(first_term_sum(0).rhs == 0.5);
  CHECK(first_term_sum(1).lhs == 0.0);
  CHECK(first_term_sum(4).abs_gap == 0.0);
  for (int j = 0; j <= 15; ++j) {
    const auto r = first_term_sum(j);
    CHECK(r.exact);
    CHECK(r.holds());
  }
}

TEST_CASE("four-way split of the residue sum") {
  for (int j = 0; j <= 5; ++j) {
    const auto s = step4_sums(j, 3);
    REQUIRE(s.size() == 4);
    CHECK(s[0].lhs == doctest::Approx((j % 2 ? -2.0 : 2.0) / (2 * j + 1)).epsilon(1e-12));
    for (const auto& r : s) CHECK(r.holds());
  }
  for (const auto& r : step4_sums(4, 0)) CHECK(r.lhs == 0.0);
  CHECK(step4_sums(1, 1)[3].lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(step4_sums(2, 11), DomainError);
}

TEST_CASE("comparison with the large-k expansion") {
  const auto k1 = yildirim_compare(1);
  CHECK(k1.report_only);
  CHECK(k1.lhs == doctest::Approx((std::exp(2.0) - 5.0) / 2.0).epsilon(1e-14));
  const auto k4 = yildirim_compare(4);
  CHECK(k4.abs_gap <= 10.0 * std::log(4.0) / 16.0);
  CHECK(k4.holds());
  CHECK_THROWS_AS(yildirim_compare(0), DomainError);
}

TEST_CASE("identity sweep has no violations") {
  const auto all = identity_sweep(4, 4);
  CHECK(all.size() > 50);
  for (const auto& r : all) {
    CAPTURE(r.name);
    CAPTURE(r.parameters);
    CHECK(r.holds());
  }
}
