#include "hzml/stieltjes.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hzml/errors.hpp"
#include "hzml/zeta.hpp"

namespace hzml {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

// Direct summation length and Euler-Maclaurin depth for the limit formula.
// The first omitted correction is below 1e-40 for n <= 20.
constexpr int kLimitTerms = 60;
constexpr int kLimitCorrections = 30;

// f(x) = (log x)^n / x; returns f^{(r)}(m) for odd r up to 2P-1, via
// f^{(r)}(x) = x^{-1-r} Q_r(log x), Q_{r+1} = -(1+r) Q_r + Q_r'.
std::vector<Float50> odd_derivatives_at(int n, int m, int corrections) {
  std::vector<Float50> poly(n + 1, Float50(0));  // coefficients of Q_r in powers of log x
  poly[n] = 1;
  const Float50 lm = log(Float50(m));
  const Float50 inv_m = Float50(1) / m;
  std::vector<Float50> out;
  Float50 x_pow = inv_m;  // m^{-1-r}
  for (int r = 0; r < 2 * corrections; ++r) {
    // advance Q_r -> Q_{r+1}
    std::vector<Float50> next(n + 1, Float50(0));
    for (int i = 0; i <= n; ++i) {
      next[i] -= (1 + r) * poly[i];
      if (i > 0) next[i - 1] += i * poly[i];
    }
    poly.swap(next);
    x_pow *= inv_m;
    if (r % 2 == 0) {  // r+1 is odd
      Float50 v = 0;
      for (int i = n; i >= 0; --i) v = v * lm + poly[i];
      out.push_back(v * x_pow);
    }
  }
  return out;
}

Float50 stieltjes_limit(int n) {
  Float50 sum = 0;
  for (int l = 2; l < kLimitTerms; ++l) sum += pow(log(Float50(l)), n) / l;
  if (n == 0) sum += 1;  // l = 1 contributes (log 1)^0 / 1
  const Float50 lm = log(Float50(kLimitTerms));
  sum += pow(lm, n) / (2 * kLimitTerms);
  sum -= pow(lm, n + 1) / (n + 1);
  const auto derivs = odd_derivatives_at(n, kLimitTerms, kLimitCorrections);
  for (int p = 1; p <= kLimitCorrections; ++p) {
    const Float50 b = boost::math::bernoulli_b2n<Float50>(p) / boost::math::factorial<Float50>(2 * p);
    sum -= b * derivs[p - 1];
  }
  return sum;
}

}  // namespace

StieltjesTable stieltjes_limit_formula(int n_max) {
  std::vector<double> values;
  values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) values.push_back(stieltjes_limit(n).convert_to<double>());
  return StieltjesTable(std::move(values), StieltjesTable::Method::LimitFormula);
}

StieltjesTable stieltjes_laurent_fit(int n_max, double radius, int samples) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("stieltjes_laurent_fit: radius must lie in (0, 1)");
  std::vector<cplx> g(samples);
  for (int m = 0; m < samples; ++m) {
    const cplx h = std::polar(radius, kTwoPi * m / samples);
    g[m] = zeta_deriv(ComplexPoint(1.0 + h), 0) - 1.0 / h;
  }
  std::vector<double> values;
  double fact = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= n;
    cplx a = 0.0;
    for (int m = 0; m < samples; ++m) a += g[m] * std::polar(1.0, -kTwoPi * double(n) * m / samples);
    a /= double(samples) * std::pow(radius, n);
    values.push_back(((n % 2) ? -fact : fact) * a.real());
  }
  return StieltjesTable(std::move(values), StieltjesTable::Method::LaurentFit);
}

const StieltjesTable& stieltjes_table() {
  static const StieltjesTable table = stieltjes_limit_formula(kStieltjesTableSize - 1);
  return table;
}

double stieltjes(int n) {
  if (n < 0 || n >= kStieltjesTableSize) throw DomainError("stieltjes: n outside [0, 20]");
  return stieltjes_table()[n];
}

void stieltjes_cross_check() {
  const auto& primary = stieltjes_table();
  const auto fit = stieltjes_laurent_fit(kStieltjesCrossCheckMax);
  for (int n = 0; n <= kStieltjesCrossCheckMax; ++n) {
    const double gap = std::abs(primary[n] - fit[n]);
    if (gap > 1e-9)
      throw AccuracyError("stieltjes: limit formula and Laurent fit disagree at n = " + std::to_string(n) +
                          " by " + std::to_string(gap));
  }
}

}  // namespace hzml
