#include "hzml/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "hzml/errors.hpp"
#include "hzml/parallel.hpp"
#include "hzml/stieltjes.hpp"

namespace hzml {

void require_strip(const ComplexPoint& p, const char* who) {
  if (!(p.sigma > -1.0 && p.sigma < 2.0) || !std::isfinite(p.t))
    throw DomainError(std::string(who) + ": sigma outside (-1, 2)");
  if (std::abs(p.t) > kMaxHeight) throw DomainError(std::string(who) + ": |t| exceeds 5e4");
}

Execution Execution::from_env() {
  if (const char* env = std::getenv("HZML_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return {w};
    } catch (...) {
    }
  }
  return {1};
}

void EvalConfig::validate() const {
  if (!(target_abs_tol > 0.0)) throw DomainError("EvalConfig: target_abs_tol must be positive");
  if (bernoulli_order < 4 || bernoulli_order % 2 != 0)
    throw DomainError("EvalConfig: bernoulli_order must be even and >= 4");
  if (max_em_terms < bernoulli_order) throw DomainError("EvalConfig: max_em_terms < bernoulli_order");
  if (max_em_terms > kMaxBernoulli) throw DomainError("EvalConfig: max_em_terms too large");
}

namespace {

constexpr int kOrders = kMaxZetaDerivative + 1;

// Truncated Taylor series in h, coefficients of h^r for r <= order.
using Series = std::array<cplx, kOrders>;

void mul_into(Series& out, const Series& a, const Series& b, int order) {
  for (int r = 0; r <= order; ++r) {
    cplx acc = 0.0;
    for (int i = 0; i <= r; ++i) acc += a[i] * b[r - i];
    out[r] = acc;
  }
}

// Multiplies a in place by (c + h/scale).
void mul_linear(Series& a, cplx c, double inv_scale, int order) {
  for (int r = order; r >= 1; --r) a[r] = a[r] * c + a[r - 1] * inv_scale;
  a[0] *= c;
}

// B_{2p}/(2p)! for p = 1..kMaxBernoulli.
const std::array<double, kMaxBernoulli + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kMaxBernoulli + 1> b{};
    for (int p = 1; p <= kMaxBernoulli; ++p)
      b[p] = boost::math::bernoulli_b2n<double>(p) / boost::math::factorial<double>(2 * p);
    return b;
  }();
  return table;
}

std::vector<cplx> laurent_jet(cplx s, int mu_max) {
  const auto& c = stieltjes_table();
  const cplx h = s - 1.0;
  std::vector<cplx> out(mu_max + 1);
  double fact = 1.0;
  for (int mu = 0; mu <= mu_max; ++mu) {
    if (mu > 0) fact *= mu;
    cplx v = ((mu % 2) ? -fact : fact) / std::pow(h, mu + 1);
    // sum_{n>=mu} (-1)^n c_n h^{n-mu} / (n-mu)!
    cplx hp = 1.0;
    double inv_fact = 1.0;
    for (int n = mu; n < static_cast<int>(c.size()); ++n) {
      if (n > mu) {
        hp *= h;
        inv_fact /= (n - mu);
      }
      v += ((n % 2) ? -c[n] : c[n]) * inv_fact * hp;
    }
    out[mu] = v;
  }
  return out;
}

}  // namespace

int em_dirichlet_terms(double t) {
  return std::max(static_cast<int>(std::ceil(std::abs(t) / kPi)), 30);
}

std::vector<cplx> zeta_jet(const ComplexPoint& p, int mu_max, const EvalConfig& cfg) {
  require_strip(p, "zeta_deriv");
  if (mu_max < 0 || mu_max > kMaxZetaDerivative) throw DomainError("zeta_deriv: derivative order outside [0, 12]");
  cfg.validate();
  const cplx s = p.s();
  if (std::abs(s - 1.0) < 1e-6) {
    if (!cfg.near_pole_laurent) throw PoleProximityError("zeta_deriv: |s - 1| < 1e-6");
    return laurent_jet(s, mu_max);
  }

  const int n_terms = em_dirichlet_terms(p.t);
  const int order = mu_max;

  // Dirichlet part: sum_{n<N} n^{-s} (-log n)^r / r!.
  Series acc{};
  for (int n = 1; n < n_terms; ++n) {
    const double ln = std::log(static_cast<double>(n));
    cplx w = std::polar(std::exp(-p.sigma * ln), -p.t * ln);
    acc[0] += w;
    for (int r = 1; r <= order; ++r) {
      w *= -ln / r;
      acc[r] += w;
    }
  }

  const double big_n = n_terms;
  const double ln_n = std::log(big_n);
  // E(h) = N^{-s-h}
  Series e{};
  e[0] = std::polar(std::exp(-p.sigma * ln_n), -p.t * ln_n);
  for (int r = 1; r <= order; ++r) e[r] = e[r - 1] * (-ln_n / r);

  // N^{1-s-h} / (s+h-1)
  Series pole{};
  {
    const cplx inv = 1.0 / (s - 1.0);
    cplx ip = inv;
    for (int r = 0; r <= order; ++r) {
      pole[r] = ip;
      ip *= -inv;
    }
  }
  Series tail{};
  mul_into(tail, e, pole, order);
  for (int r = 0; r <= order; ++r) acc[r] += tail[r] * big_n + 0.5 * e[r];

  // Bernoulli corrections: b_p (s+h)(s+h+1)...(s+h+2p-2) N^{-s-h-2p+1}.
  const auto& b = bernoulli_ratios();
  Series q{};  // (s+h)...(s+h+2p-2) / N^{2p-1}
  q[0] = 1.0;
  Series term{};
  double prev_size = HUGE_VAL;
  bool converged = false;
  for (int pidx = 1; pidx <= cfg.max_em_terms; ++pidx) {
    if (pidx == 1) {
      mul_linear(q, s / big_n, 1.0 / big_n, order);
    } else {
      mul_linear(q, (s + double(2 * pidx - 3)) / big_n, 1.0 / big_n, order);
      mul_linear(q, (s + double(2 * pidx - 2)) / big_n, 1.0 / big_n, order);
    }
    mul_into(term, q, e, order);
    double size = 0.0;
    double fact = 1.0;
    for (int r = 0; r <= order; ++r) {
      if (r > 0) fact *= r;
      acc[r] += b[pidx] * term[r];
      size = std::max(size, std::abs(b[pidx] * term[r]) * fact);
    }
    if (pidx >= cfg.bernoulli_order) {
      if (size < 0.1 * cfg.target_abs_tol) {
        converged = true;
        break;
      }
      if (size > prev_size) break;  // asymptotic series has started to diverge
    }
    prev_size = size;
  }
  if (!converged)
    throw ConvergenceError("zeta_deriv: Euler-Maclaurin tail above target at t = " + std::to_string(p.t));

  std::vector<cplx> out(order + 1);
  double fact = 1.0;
  for (int r = 0; r <= order; ++r) {
    if (r > 0) fact *= r;
    out[r] = acc[r] * fact;
  }
  return out;
}

cplx zeta_deriv(const ComplexPoint& s, int mu, const EvalConfig& cfg) {
  if (mu < 0 || mu > kMaxZetaDerivative) throw DomainError("zeta_deriv: derivative order outside [0, 12]");
  return zeta_jet(s, mu, cfg).back();
}

}  // namespace hzml
