#include "hzml/hardy_z.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "hzml/chi.hpp"
#include "hzml/errors.hpp"

namespace hzml {

namespace {

struct Rational {
  long long num = 0;
  long long den = 1;

  void normalize() {
    const long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  Rational& operator+=(const Rational& o) {
    const long long l = std::lcm(den, o.den);
    num = num * (l / den) + o.num * (l / o.den);
    den = l;
    normalize();
    return *this;
  }
};

using Poly = std::map<std::vector<int>, Rational>;

// f_r = D f_{r-1} - (1/2) omega f_{r-1}, D omega^(i) = omega^(i+1).
std::array<std::vector<FkMonomial>, kMaxHardyOrder + 1> build_fk_table() {
  std::array<std::vector<FkMonomial>, kMaxHardyOrder + 1> table;
  const std::size_t width = kMaxHardyOrder + 1;
  Poly current;
  current[std::vector<int>(width, 0)] = {1, 1};
  for (int k = 0; k <= kMaxHardyOrder; ++k) {
    for (const auto& [exps, c] : current)
      if (c.num != 0) table[k].push_back({exps, c.num, c.den});
    if (k == kMaxHardyOrder) break;
    Poly next;
    for (const auto& [exps, c] : current) {
      for (std::size_t i = 0; i + 1 < width; ++i) {
        if (exps[i] == 0) continue;
        auto e = exps;
        e[i] -= 1;
        e[i + 1] += 1;
        Rational term{c.num * exps[i], c.den};
        term.normalize();
        next[e] += term;
      }
      auto e = exps;
      e[0] += 1;
      Rational term{-c.num, c.den * 2};
      term.normalize();
      next[e] += term;
    }
    current.swap(next);
  }
  return table;
}

const std::array<std::vector<FkMonomial>, kMaxHardyOrder + 1>& fk_table() {
  static const auto table = build_fk_table();
  return table;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_order(int k, const char* who) {
  if (k < 0 || k > kMaxHardyOrder) throw DomainError(std::string(who) + ": order outside [0, 8]");
}

}  // namespace

const std::vector<FkMonomial>& fk_polynomial(int k) {
  require_order(k, "fk_polynomial");
  return fk_table()[k];
}

FkJet fk_jet(const ComplexPoint& s, int k) {
  require_order(k, "fk_jet");
  FkJet jet{s, std::vector<cplx>(k + 1)};
  jet.values[0] = 1.0;
  if (k == 0) return jet;
  const OmegaJet omega = omega_jet(s, k - 1);
  for (int r = 1; r <= k; ++r) {
    cplx acc = 0.0;
    for (const auto& mono : fk_table()[r]) {
      cplx term = static_cast<double>(mono.numerator) / static_cast<double>(mono.denominator);
      for (int i = 0; i < r; ++i)
        for (int e = 0; e < mono.exponents[i]; ++e) term *= omega[i];
      acc += term;
    }
    jet.values[r] = acc;
  }
  return jet;
}

ZkValue zk_value(const ComplexPoint& s, int k, const EvalConfig& cfg) {
  require_order(k, "zk_value");
  const auto zeta = zeta_jet(s, k, cfg);
  const auto f = fk_jet(s, k);
  cplx acc = 0.0;
  for (int mu = 0; mu <= k; ++mu) acc += binom(k, mu) * f[k - mu] * zeta[mu];
  return {s, k, acc};
}

ZDerivative z_deriv_detail(double t, int j, const EvalConfig& cfg) {
  require_order(j, "z_deriv");
  if (!(t >= 0.0 && t <= kMaxHeight)) throw DomainError("z_deriv: t outside [0, 5e4]");
  const ComplexPoint s = ComplexPoint::on_line(t);
  const cplx zj = zk_value(s, j, cfg).value;
  static constexpr std::array<cplx, 4> i_pow{cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  const cplx v = i_pow[j % 4] * std::polar(1.0, riemann_siegel_theta(t)) * zj;
  return {v.real(), std::abs(v.imag())};
}

double z_deriv(double t, int j, const EvalConfig& cfg) {
  if (!(t >= 2.0 && t <= kMaxHeight)) throw DomainError("z_deriv: t outside [2, 5e4]");
  const auto d = z_deriv_detail(t, j, cfg);
  if (d.imag_leak > kBranchLeakTolerance * (1.0 + std::abs(d.value)))
    throw BranchError("z_deriv: imaginary part " + std::to_string(d.imag_leak) + " at t = " + std::to_string(t));
  return d.value;
}

double fe_residual(const ComplexPoint& s, int k, const EvalConfig& cfg) {
  const cplx lhs = zk_value(s, k, cfg).value;
  const cplx rhs = ((k % 2) ? -1.0 : 1.0) * chi(s) * zk_value(s.reflect(), k, cfg).value;
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

cplx script_zk(const ComplexPoint& s, int k, double T, const EvalConfig& cfg) {
  if (k < 0 || k > kMaxZetaDerivative) throw DomainError("script_zk: order outside [0, 12]");
  if (!(T >= 10.0)) throw DomainError("script_zk: requires T >= 10");
  const double half_l = 0.5 * std::log(T / kTwoPi);
  const auto zeta = zeta_jet(s, k, cfg);
  cplx acc = 0.0;
  for (int mu = 0; mu <= k; ++mu) acc += binom(k, mu) * std::pow(half_l, k - mu) * zeta[mu];
  return acc;
}

cplx script_zk_root(cplx seed, int k, double T, const EvalConfig& cfg) {
  if (k < 1 || k + 1 > kMaxZetaDerivative) throw DomainError("script_zk_root: order outside [1, 11]");
  if (!(T >= 10.0)) throw DomainError("script_zk_root: requires T >= 10");
  const double half_l = 0.5 * std::log(T / kTwoPi);
  cplx z = seed;
  for (int iter = 0; iter < 60; ++iter) {
    const ComplexPoint p(z);
    if (!(p.sigma > -1.0 && p.sigma < 2.0))
      throw ConvergenceError("script_zk_root: iterate left the strip");
    const auto zeta = zeta_jet(p, k + 1, cfg);
    cplx f = 0.0, df = 0.0;
    for (int mu = 0; mu <= k; ++mu) {
      const double w = binom(k, mu) * std::pow(half_l, k - mu);
      f += w * zeta[mu];
      df += w * zeta[mu + 1];
    }
    const cplx step = f / df;
    z -= step;
    if (std::abs(step) < 1e-13 * (1.0 + std::abs(z))) return z;
  }
  throw ConvergenceError("script_zk_root: Newton iteration did not converge");
}

}  // namespace hzml
