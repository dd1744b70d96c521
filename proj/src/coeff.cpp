#include "hzml/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "hzml/errors.hpp"
#include "hzml/hardy_z.hpp"
#include "hzml/theta_roots.hpp"

namespace hzml {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline constexpr int kMaxCoeffK = 25;
inline constexpr int kMaxExactJ = 15;
inline constexpr int kMaxSplitJ = 8;
inline constexpr double kExpLeakTolerance = 1e-9;
inline constexpr double kIdentityRelTol = 1e-10;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binom(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return std::round(b);
}

cpp_int binom_exact(int n, int r) {
  if (r < 0 || r > n) return 0;
  cpp_int b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

cpp_int factorial_exact(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

cpp_int pow_exact(int base, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string params(const char* fmt, int a, int b = 0) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

/// Real part of a sum of conjugate-closed terms, with the leak check.
double real_sum(const std::vector<cplx>& terms, const char* what, double* leak_out = nullptr, double* scale_out = nullptr) {
  cplx s{0.0, 0.0};
  double scale = 0.0;
  for (const auto& t : terms) {
    s += t;
    scale += std::abs(t);
  }
  const double leak = std::abs(s.imag()) / std::max(scale, std::numeric_limits<double>::min());
  if (scale > 0.0 && leak > kExpLeakTolerance)
    throw ImaginaryLeakError(std::string(what) + ": imaginary part " + std::to_string(s.imag()) + " of sum " +
                             std::to_string(s.real()));
  if (leak_out) *leak_out = scale > 0.0 ? leak : 0.0;
  if (scale_out) *scale_out = scale;
  return s.real();
}

void check_orders(int j, int k, const char* who) {
  if (j < 0 || j > kMaxCoeffJ) throw DomainError(std::string(who) + ": j outside [0, 12]");
  if (k < 0 || k > kMaxCoeffK) throw DomainError(std::string(who) + ": k outside [0, 25]");
}

IdentityReport make_float_report(std::string name, std::string p, double lhs, double rhs, double scale) {
  IdentityReport r;
  r.name = std::move(name);
  r.parameters = std::move(p);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_gap = std::abs(lhs - rhs);
  r.scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  r.tolerance = kIdentityRelTol * std::max(r.scale, 1e-300);
  return r;
}

}  // namespace

bool IdentityReport::holds() const {
  if (report_only) return true;
  return exact ? abs_gap == 0.0 : abs_gap <= tolerance;
}

CoefficientBreakdown breakdown(int j, int k, double T, CoeffMode mode, RootPlacement placement) {
  check_orders(j, k, "breakdown");
  const bool asym = mode == CoeffMode::Asymptotic;
  if (!asym && !(T >= 100.0)) throw DomainError("breakdown: finite mode needs T >= 100");
  if (!asym && j > kMaxFiniteJ) throw DomainError("breakdown: finite mode needs j <= 8");
  if (asym && !(T > kTwoPi * std::exp(1.0))) throw DomainError("breakdown: normalization T too small");
  if (asym && placement == RootPlacement::Refined)
    throw DomainError("breakdown: refined roots only apply in finite mode");

  CoefficientBreakdown b;
  b.j = j;
  b.k = k;
  b.T = T;
  b.asymptotic = asym;
  b.L = std::log(T / kTwoPi);

  const double two_pow = std::ldexp(1.0, 2 * j + 1);  // 2^{2j+1}
  const double jf = factorial(j);

  // per-TL values first; asymptotic per_TL is then T-independent by construction
  double d = 0.0, cg = 0.0, u_term = 0.0, p2 = 0.0, ex = 0.0;
  if (k == 0) d = 1.0 / (two_pow * (2 * j + 1) * kPi);
  cg = -(k + 1) * (1.0 + sign_pow(j)) / (two_pow * (j + 1.0) * (j + 1.0) * kTwoPi);

  if (k > 0) {
    const auto p = newton_girard_reciprocal_power_sums(k, 2 * j + 2);
    CompensatedSum us;
    for (int u = 1; u <= j; ++u)
      us.add(jf / (factorial(j - u) * (2 * j + 1 - u)) * sign_pow(u) * p[u + 1]);
    u_term = us.value() / (two_pow * kPi);
    p2 = sign_pow(j + 1) * jf * jf * p[2 * j + 2] / (2.0 * two_pow * kPi);

    const ThetaSystem ts = trunc_exp_roots(k);
    const auto partial = ts.partial_sums(j);
    std::vector<cplx> terms(k);
    for (int g = 0; g < k; ++g) {
      const cplx th = ts.roots[g];
      cplx factor;
      if (asym) {
        factor = ts.exp_factors[g];
      } else {
        cplx z = z_from_theta(th, T);
        if (placement == RootPlacement::Refined) z = script_zk_root(z, k, T);
        factor = std::exp((z - 1.0) * b.L);
      }
      terms[g] = factor / std::pow(th, 2 * j + 2) * partial[g] * partial[g];
    }
    ex = sign_pow(j) * jf * jf * real_sum(terms, "breakdown exp term", &b.imag_leak) / (2.0 * two_pow * kPi);
  }

  const double unit = T * std::pow(b.L, 2 * j + 2);
  b.term_delta = d * unit;
  b.term_cg = cg * unit;
  b.term_u = u_term * unit;
  b.term_p2j2 = p2 * unit;
  b.term_exp = ex * unit;
  b.total = b.term_delta + b.term_cg + b.term_u + b.term_p2j2 + b.term_exp;
  b.per_TL = d + cg + u_term + p2 + ex;
  return b;
}

double coefficient_scale(const CoefficientBreakdown& b) {
  const double unit = b.T * std::pow(b.L, 2 * b.j + 2);
  return std::max({std::abs(b.term_delta), std::abs(b.term_cg), std::abs(b.term_u), std::abs(b.term_p2j2),
                   std::abs(b.term_exp)}) /
         unit;
}

double asymptotic_coefficient(int j, int k) {
  const auto a = breakdown(j, k, kAsymptoticNormalization, CoeffMode::Asymptotic);
  const auto b = breakdown(j, k, 1e9, CoeffMode::Asymptotic);
  if (std::abs(a.per_TL - b.per_TL) > 1e-14 * std::max(coefficient_scale(a), std::abs(a.per_TL)))
    throw AccuracyError("asymptotic_coefficient: value depends on the normalization height");
  return a.per_TL;
}

IdentityReport combi_sum(int j, int u) {
  if (j < 0 || j > kMaxExactJ) throw DomainError("combi_sum: j outside [0, 15]");
  if (u < 0 || u > j) throw DomainError("combi_sum: u outside [0, j]");
  const int n = 2 * j + 1 - u;
  cpp_int lhs = 0;
  for (int mu = 0; mu <= j - u; ++mu) {
    cpp_int inner = 0;
    for (int nu = 0; nu <= j; ++nu) {
      if (nu > n - mu) break;
      const int e = n - mu - nu;
      inner += binom_exact(n - mu, nu) * pow_exact(-2, e);
    }
    lhs += binom_exact(n, mu) * inner;
  }
  const cpp_int rhs = sign_pow(j + 1) * binom_exact(2 * j - u, j) * (1 + sign_pow(u));
  IdentityReport r;
  r.name = "combi_sum";
  r.parameters = params("j=%d,u=%d", j, u);
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  const cpp_int gap = lhs > rhs ? cpp_int(lhs - rhs) : cpp_int(rhs - lhs);
  r.abs_gap = static_cast<double>(gap);
  r.scale = std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  r.exact = true;
  return r;
}

IdentityReport first_term_sum(int j) {
  if (j < 0 || j > kMaxExactJ) throw DomainError("first_term_sum: j outside [0, 15]");
  cpp_rational lhs = 0;
  for (int mu = 0; mu <= j; ++mu) {
    for (int nu = 0; nu <= j; ++nu) {
      const int e = 2 * j - mu - nu;
      cpp_rational term(binom_exact(j, mu) * binom_exact(j, nu) * factorial_exact(mu) * factorial_exact(nu),
                        factorial_exact(mu + nu + 2) * pow_exact(2, e));
      if (e % 2) term = -term;
      lhs += term;
    }
  }
  const cpp_rational rhs(cpp_int(1 + sign_pow(j)), pow_exact(2, 2 * j + 2) * (j + 1) * (j + 1));
  IdentityReport r;
  r.name = "first_term_sum";
  r.parameters = params("j=%d", j);
  r.lhs = static_cast<double>(lhs);
  r.rhs = static_cast<double>(rhs);
  r.abs_gap = static_cast<double>(cpp_rational(abs(lhs - rhs)));
  r.scale = std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  r.exact = true;
  return r;
}

std::vector<IdentityReport> step4_sums(int j, int k) {
  if (j < 0 || j > kMaxSplitJ) throw DomainError("step4_sums: j outside [0, 8]");
  if (k < 0 || k > 10) throw DomainError("step4_sums: k outside [0, 10]");
  const std::string p = params("j=%d,k=%d", j, k);
  std::vector<IdentityReport> out;
  if (k == 0) {
    for (const char* name : {"S1", "S2", "S3", "S4"}) out.push_back(make_float_report(name, p, 0.0, 0.0, 0.0));
    return out;
  }

  const ThetaSystem ts = trunc_exp_roots(k);
  const auto pw = newton_girard_reciprocal_power_sums(k, 2 * j + 2);

  // raw[i] collects the S_{i+1} summands, one per (g, mu, nu, u)
  std::vector<cplx> raw[4];
  for (const cplx& th : ts.roots) {
    std::vector<cplx> inv_pow(2 * j + 3);
    inv_pow[0] = 1.0;
    for (int e = 1; e <= 2 * j + 2; ++e) inv_pow[e] = inv_pow[e - 1] / th;
    for (int mu = 0; mu <= j; ++mu) {
      for (int nu = 0; nu <= j; ++nu) {
        const double w = binom(j, mu) * binom(j, nu) * factorial(mu) * factorial(nu);
        for (int u = 0; u <= mu + nu + 1; ++u) {
          const int e = mu + nu + 1 - u;
          const cplx term = w * std::ldexp(double(sign_pow(e)), e) / factorial(e) * inv_pow[u + 1];
          int part;
          if (u == 0)
            part = 0;
          else if (u <= j)
            part = mu <= u - 1 ? 1 : 2;
          else
            part = 3;
          raw[part].push_back(term);
        }
      }
    }
  }

  const double jf = factorial(j);
  double rhs[4] = {sign_pow(j + 1) * 2.0 / (2 * j + 1) * pw[1], 0.0, 0.0, jf * jf * pw[2 * j + 2]};
  for (int u = 1; u <= j; ++u) {
    const double c = jf / ((2 * j + 1 - u) * factorial(j - u)) * pw[u + 1];
    rhs[1] += sign_pow(j) * c * (1 - sign_pow(u));
    rhs[2] += sign_pow(j + 1) * c * (1 + sign_pow(u));
  }

  const char* names[4] = {"S1", "S2", "S3", "S4"};
  for (int i = 0; i < 4; ++i) {
    double scale = 0.0;
    const double lhs = real_sum(raw[i], "step4_sums", nullptr, &scale);
    out.push_back(make_float_report(names[i], p, lhs, rhs[i], scale));
  }
  return out;
}

IdentityReport yildirim_compare(int k) {
  if (k < 1 || k > kMaxCoeffK) throw DomainError("yildirim_compare: k outside [1, 25]");
  const double lhs = kTwoPi * asymptotic_coefficient(0, k);
  const double rhs = (k % 2) ? 1.0 + 1.0 / k : 1.0 - 3.0 / k;
  IdentityReport r;
  r.name = "yildirim";
  r.parameters = params("k=%d", k);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_gap = std::abs(lhs - rhs);
  r.scale = 1.0;
  // the comparison is asymptotic; 10 log k / k^2 is the threshold, and k = 1 has no formula
  r.tolerance = 10.0 * std::log(k) / (double(k) * k);
  r.report_only = k == 1;
  return r;
}

std::vector<IdentityReport> identity_sweep(int j_max, int k_max) {
  if (j_max < 0 || j_max > kMaxSplitJ) throw DomainError("identity_sweep: j_max outside [0, 8]");
  if (k_max < 0 || k_max > 10) throw DomainError("identity_sweep: k_max outside [0, 10]");
  std::vector<IdentityReport> out;
  for (int j = 0; j <= j_max; ++j)
    for (int u = 0; u <= j; ++u) out.push_back(combi_sum(j, u));
  for (int j = 0; j <= j_max; ++j) out.push_back(first_term_sum(j));
  for (int j = 0; j <= j_max; ++j)
    for (int k = 0; k <= k_max; ++k)
      for (auto& r : step4_sums(j, k)) out.push_back(std::move(r));
  for (int k = 0; k <= std::min(j_max, k_max); ++k) {
    const auto b = breakdown(k, k, kAsymptoticNormalization, CoeffMode::Asymptotic);
    out.push_back(make_float_report("diagonal_vanishing", params("j=%d,k=%d", k, k), b.per_TL, 0.0,
                                    coefficient_scale(b)));
  }
  return out;
}

MomentReport verify_moment(int j, int k, double T, const Execution& exec, int density) {
  if (j < 0 || j > kMaxHardyOrder || k < 0 || k > kMaxHardyOrder)
    throw DomainError("verify_moment: j and k must lie in [0, 8]");
  if (!(T >= 100.0 && T <= kMaxHeight)) throw DomainError("verify_moment: T outside [100, 5e4]");
  if (density < 1) throw DomainError("verify_moment: density must be positive");

  const ZeroList zl = find_zeros_census(k, T, density, exec);
  const DiscreteMoment dm = discrete_moment_detail(j, zl, exec);
  const CoefficientBreakdown b = breakdown(j, k, T, CoeffMode::Finite);

  MomentReport r;
  r.j = j;
  r.k = k;
  r.T = T;
  r.measured = dm.value;
  r.predicted = b.total;
  r.ratio = b.total != 0.0 ? dm.value / b.total : std::numeric_limits<double>::quiet_NaN();
  r.n_zeros_used = dm.n_zeros;
  r.count_expected = expected_zero_count(T);
  r.count_deviation = count_check(zl, T);
  r.max_imag_leak = dm.max_imag_leak;
  r.scan_density = zl.scan_density;
  return r;
}

}  // namespace hzml
