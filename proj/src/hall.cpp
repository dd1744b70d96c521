#include <cmath>

#include "hzml/complex_point.hpp"
#include "hzml/errors.hpp"
#include "hzml/moments.hpp"
#include "hzml/stieltjes.hpp"

namespace hzml {

namespace {

// Coefficients of W_g in powers of v: v^{g-i} carries (-1)^i g!/(g-i)!.
std::vector<double> w_coefficients(int g) {
  std::vector<double> c(g + 1, 0.0);
  double falling = 1.0;
  for (int i = 0; i <= g; ++i) {
    if (i > 0) falling *= (g - i + 1);
    c[g - i] = (i % 2 ? -falling : falling);
  }
  return c;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double hall_W(int g, double v) {
  if (g < 0 || g > 20) throw DomainError("hall_W: g outside [0, 20]");
  const auto c = w_coefficients(g);
  double acc = 0.0;
  for (int i = g; i >= 0; --i) acc = acc * v + c[i];
  return acc;
}

double HallPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

HallPolynomial hall_polynomial(int j) {
  if (j < 0 || j > 8) throw DomainError("hall_polynomial: j outside [0, 8]");
  const int deg = 2 * j + 1;
  HallPolynomial p{j, w_coefficients(deg)};
  // (4j+2) sum_n binom(2j, n) (-2)^n c_n W_{2j-n}
  for (int n = 0; n <= 2 * j; ++n) {
    const double weight = (4.0 * j + 2.0) * binom(2 * j, n) * std::pow(-2.0, n) * stieltjes(n);
    const auto w = w_coefficients(2 * j - n);
    for (std::size_t i = 0; i < w.size(); ++i) p.coefficients[i] += weight * w[i];
  }
  return p;
}

double hall_prediction(int j, double T) {
  if (!(T >= 10.0)) throw DomainError("hall_prediction: requires T >= 10");
  const auto p = hall_polynomial(j);
  return T * p(std::log(T / kTwoPi)) / (std::pow(4.0, j) * (2.0 * j + 1.0));
}

}  // namespace hzml
