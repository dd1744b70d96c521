#include "hzml/theta_roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hzml/errors.hpp"

namespace hzml {

namespace {

using ldcplx = std::complex<long double>;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Coefficients of k! * sum_mu theta^mu / mu!, index = power.
std::vector<long double> scaled_coefficients(int k) {
  std::vector<long double> c(k + 1);
  long double v = 1.0L;  // k!/k!
  c[k] = v;
  for (int mu = k - 1; mu >= 0; --mu) {
    v *= (mu + 1);
    c[mu] = v;
  }
  return c;
}

// p(z) and p'(z) by Horner.
void horner(const std::vector<long double>& c, ldcplx z, ldcplx& p, ldcplx& dp) {
  p = c.back();
  dp = 0.0L;
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

std::vector<ldcplx> aberth(const std::vector<long double>& c) {
  const int k = static_cast<int>(c.size()) - 1;
  // |prod theta_g| = k!, so start on the circle of radius (k!)^{1/k}.
  const long double radius = std::pow(c[0], 1.0L / k);
  std::vector<ldcplx> z(k);
  for (int g = 0; g < k; ++g)
    z[g] = std::polar(radius, static_cast<long double>(2.0 * kPi * (g + 0.25) / k + 0.4 / k));

  // Steps stall at the rounding level of p near a root, which grows with k!;
  // the residual check in trunc_exp_roots decides acceptance.
  long double best = INFINITY;
  int stalled = 0;
  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0.0L;
    for (int g = 0; g < k; ++g) {
      ldcplx p, dp;
      horner(c, z[g], p, dp);
      if (p == ldcplx(0.0L)) continue;
      const ldcplx ratio = p / dp;
      ldcplx repulsion = 0.0L;
      for (int h = 0; h < k; ++h)
        if (h != g) repulsion += 1.0L / (z[g] - z[h]);
      const ldcplx step = ratio / (1.0L - ratio * repulsion);
      z[g] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[g])));
    }
    if (max_step < 1e-18L) return z;
    stalled = max_step < 0.5L * best ? 0 : stalled + 1;
    best = std::min(best, max_step);
    if (stalled >= 10 && best < 1e-9L) return z;
  }
  throw ConvergenceError("trunc_exp_roots: Aberth iteration did not converge for k = " + std::to_string(k));
}

cpp_rational factorial_q(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return cpp_rational(f);
}

// Exact p_u = sum_g x_g^u for the roots x_g = 1/theta_g, which solve
// x^k + x^{k-1}/1! + ... + 1/k! = 0, i.e. e_i = (-1)^i / i!.
std::vector<cpp_rational> reciprocal_power_sums_exact(int k, int u_max) {
  std::vector<cpp_rational> e(k + 1);
  for (int i = 0; i <= k; ++i) e[i] = cpp_rational((i % 2) ? -1 : 1) / factorial_q(i);
  std::vector<cpp_rational> p(u_max + 1);
  for (int u = 1; u <= u_max; ++u) {
    cpp_rational acc = 0;
    for (int i = 1; i < u && i <= k; ++i) acc += ((i - 1) % 2 ? -1 : 1) * e[i] * p[u - i];
    if (u <= k) acc += ((u - 1) % 2 ? -1 : 1) * cpp_rational(u) * e[u];
    p[u] = acc;
  }
  return p;
}

}  // namespace

std::vector<double> newton_girard_reciprocal_power_sums(int k, int u_max) {
  if (k < 1 || k > kMaxThetaOrder) throw DomainError("newton_girard: k outside [1, 40]");
  const auto exact = reciprocal_power_sums_exact(k, u_max);
  std::vector<double> out(u_max + 1, 0.0);
  for (int u = 1; u <= u_max; ++u) out[u] = exact[u].convert_to<double>();
  return out;
}

ThetaSystem trunc_exp_roots(int k) {
  if (k < 1 || k > kMaxThetaOrder) throw DomainError("trunc_exp_roots: k outside [1, 40]");
  const auto coeffs = scaled_coefficients(k);
  auto roots_ld = aberth(coeffs);

  // Newton polish against the scaled polynomial.
  for (auto& z : roots_ld) {
    for (int i = 0; i < 4; ++i) {
      ldcplx p, dp;
      horner(coeffs, z, p, dp);
      if (dp == ldcplx(0.0L)) break;
      z -= p / dp;
    }
  }
  // Enforce exact conjugate closure: real roots get Im = 0, the lower half-plane
  // roots are replaced by the mirrors of the upper ones.
  std::vector<ldcplx> upper, real_axis;
  std::size_t lower = 0;
  for (const auto& z : roots_ld) {
    const long double tiny = 1e-15L * std::max(1.0L, std::abs(z));
    if (std::abs(z.imag()) <= tiny)
      real_axis.emplace_back(z.real(), 0.0L);
    else if (z.imag() > 0.0L)
      upper.push_back(z);
    else
      ++lower;
  }
  if (upper.size() != lower)
    throw ConvergenceError("trunc_exp_roots: roots are not conjugate-closed for k = " + std::to_string(k));
  roots_ld = real_axis;
  for (const auto& z : upper) {
    roots_ld.push_back(z);
    roots_ld.push_back(std::conj(z));
  }
  std::sort(roots_ld.begin(), roots_ld.end(), [](const ldcplx& a, const ldcplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  ThetaSystem ts;
  ts.k = k;
  const long double kfact = coeffs[0];
  for (const auto& z : roots_ld) {
    ldcplx p, dp;
    horner(coeffs, z, p, dp);
    ts.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    ts.residuals.push_back(static_cast<double>(std::abs(p) / kfact));
  }
  for (std::size_t g = 0; g < ts.roots.size(); ++g) {
    const double limit = 1e-12 * static_cast<double>(kfact);
    if (!(ts.residuals[g] <= limit))
      throw ConvergenceError("trunc_exp_roots: residual above 1e-12 k! for k = " + std::to_string(k));
  }

  const int u_max = 2 * k + 2;
  ts.power_sums = newton_girard_reciprocal_power_sums(k, u_max);
  ts.power_sums_root_side.assign(u_max + 1, 0.0);
  ts.power_sum_scale.assign(u_max + 1, 0.0);
  for (const auto& z : roots_ld) {
    const ldcplx inv = 1.0L / z;
    ldcplx pw = 1.0L;
    for (int u = 1; u <= u_max; ++u) {
      pw *= inv;
      ts.power_sums_root_side[u] += cplx(static_cast<double>(pw.real()), static_cast<double>(pw.imag()));
      ts.power_sum_scale[u] += static_cast<double>(std::abs(pw));
    }
    ts.exp_factors.push_back(std::exp(-2.0 * cplx(static_cast<double>(z.real()), static_cast<double>(z.imag()))));
  }
  return ts;
}

std::vector<cplx> ThetaSystem::partial_sums(int j) const {
  if (j < 0) throw DomainError("partial_sums: negative order");
  std::vector<cplx> out;
  out.reserve(roots.size());
  for (const auto& theta : roots) {
    cplx term = 1.0, acc = 1.0;
    for (int mu = 1; mu <= j; ++mu) {
      term *= theta / double(mu);
      acc += term;
    }
    out.push_back(acc);
  }
  return out;
}

double power_sum(const ThetaSystem& ts, int u) {
  if (u < 1 || u > 2 * ts.k + 2) throw DomainError("power_sum: u outside [1, 2k+2]");
  const cplx root_side = ts.power_sums_root_side[u];
  const double scale = std::max(1.0, ts.power_sum_scale[u]);
  // The root-side sum carries roundoff relative to its term magnitudes.
  if (std::abs(root_side.imag()) > 1e-10 * scale)
    throw ImaginaryLeakError("power_sum: imaginary part " + std::to_string(root_side.imag()));
  if (std::abs(root_side.real() - ts.power_sums[u]) > 1e-10 * scale)
    throw AccuracyError("power_sum: root side and coefficient side disagree at u = " + std::to_string(u));
  return ts.power_sums[u];
}

cplx z_from_theta(cplx theta, double T) {
  if (!(T >= 10.0)) throw DomainError("z_from_theta: requires T >= 10");
  return 1.0 - 2.0 * theta / std::log(T / kTwoPi);
}

}  // namespace hzml
