#include "hzml/gamma.hpp"

#include <array>
#include <cmath>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "hzml/errors.hpp"

namespace hzml {

namespace {

constexpr int kStirlingOrder = 10;
constexpr int kPolygammaTerms = 14;

double b2n(int n) { return boost::math::bernoulli_b2n<double>(n); }

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleProximityError("log_gamma: pole at non-positive integer");
  cplx shift_sum = 0.0;
  while (std::abs(z) <= 10.0 || z.real() < 0.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  static const auto coeffs = [] {
    std::array<double, kStirlingOrder + 1> c{};
    for (int k = 1; k <= kStirlingOrder; ++k) c[k] = b2n(k) / (2.0 * k * (2.0 * k - 1.0));
    return c;
  }();
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx p = inv;
  for (int k = 1; k <= kStirlingOrder; ++k) {
    series += coeffs[k] * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift_sum;
}

cplx polygamma(int m, cplx z) {
  if (m < 0) throw DomainError("polygamma: negative order");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw PoleProximityError("polygamma: pole at non-positive integer");
  const double mfact = factorial(m);
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
  // psi^(m)(z) = psi^(m)(z+1) - (-1)^m m! / z^{m+1}
  cplx shift = 0.0;
  const double threshold = 20.0 + m;
  while (std::abs(z) < threshold || z.real() < 0.0) {
    const cplx zp = std::pow(z, m + 1);
    if (m == 0)
      shift -= 1.0 / z;
    else
      shift += sign * mfact / zp;
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  cplx result;
  if (m == 0) {
    result = std::log(z) - 0.5 * inv;
    cplx p = inv * inv;
    for (int k = 1; k <= kPolygammaTerms; ++k) {
      result -= b2n(k) / (2.0 * k) * p;
      p *= inv * inv;
    }
  } else {
    // (-1)^{m+1} [ (m-1)!/z^m + m!/(2 z^{m+1}) + sum_k B_2k (2k+m-1)!/((2k)! z^{2k+m}) ]
    const cplx zm = std::pow(inv, m);
    cplx acc = factorial(m - 1) * zm + 0.5 * mfact * zm * inv;
    cplx p = zm * inv * inv;
    for (int k = 1; k <= kPolygammaTerms; ++k) {
      acc += b2n(k) * (factorial(2 * k + m - 1) / factorial(2 * k)) * p;
      p *= inv * inv;
    }
    result = sign * acc;
  }
  return result + shift;
}

std::vector<cplx> tan_jet(cplx w, int r_max) {
  std::vector<cplx> out(r_max + 1);
  const double y = w.imag();
  if (std::abs(y) >= 0.5) {
    // tan w = i - 2i sum_{n>=1} (-1)^{n-1} q^n, q = e^{2iw} (|q| < 1 for Im w > 0).
    const bool flip = y < 0.0;
    const cplx ww = flip ? std::conj(w) : w;
    const cplx q = std::exp(cplx(0.0, 2.0) * ww);
    std::vector<cplx> acc(r_max + 1, 0.0);
    cplx qn = q;
    for (int n = 1; n < 400; ++n) {
      const double sgn = (n % 2) ? 1.0 : -1.0;
      cplx factor = 1.0;
      const cplx step(0.0, 2.0 * n);
      double biggest = 0.0;
      for (int r = 0; r <= r_max; ++r) {
        const cplx term = sgn * factor * qn;
        acc[r] += term;
        biggest = std::max(biggest, std::abs(term));
        factor *= step;
      }
      if (biggest < 1e-18 * std::max(1.0, std::abs(acc[r_max]))) break;
      qn *= q;
    }
    const cplx minus_2i(0.0, -2.0);
    out[0] = cplx(0.0, 1.0) + minus_2i * acc[0];
    for (int r = 1; r <= r_max; ++r) out[r] = minus_2i * acc[r];
    if (flip)
      for (auto& v : out) v = std::conj(v);
    return out;
  }
  // Near the real axis: d^r tan = P_r(tan), P_0 = x, P_{r+1} = P_r'(x) (1 + x^2).
  const cplx x = std::tan(w);
  std::vector<double> poly{0.0, 1.0};
  for (int r = 0; r <= r_max; ++r) {
    cplx v = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
    out[r] = v;
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 1; i < poly.size(); ++i) {
      next[i - 1] += i * poly[i];
      next[i + 1] += i * poly[i];
    }
    poly.swap(next);
  }
  return out;
}

cplx log_sin(cplx z) {
  const double y = z.imag();
  if (std::abs(y) < 1.0) return std::log(std::sin(z));
  // sin z = e^{-iz} (1 - e^{2iz}) / (-2i) for Im z > 0; conjugate otherwise.
  const bool flip = y < 0.0;
  const cplx zz = flip ? std::conj(z) : z;
  const cplx i(0.0, 1.0);
  const cplx v = -i * zz - std::log(cplx(0.0, -2.0)) + std::log(1.0 - std::exp(2.0 * i * zz));
  return flip ? std::conj(v) : v;
}

}  // namespace hzml
