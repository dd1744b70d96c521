#pragma once

#include <vector>

#include "hzml/complex_point.hpp"
#include "hzml/zeta.hpp"

namespace hzml {

inline constexpr int kMaxHardyOrder = 8;

/// f_0..f_k at s, with f_0 = 1 and f_k = f_{k-1}' - omega f_{k-1} / 2.
struct FkJet {
  ComplexPoint s;
  std::vector<cplx> values;

  int order() const { return static_cast<int>(values.size()) - 1; }
  const cplx& operator[](std::size_t r) const { return values[r]; }
};

/// Z_k(s) = Z_{k-1}'(s) - omega(s) Z_{k-1}(s) / 2, Z_0 = zeta.
struct ZkValue {
  ComplexPoint s;
  int k = 0;
  cplx value;
};

/// One monomial of f_k in the variables omega, omega', ..., with an exact coefficient.
struct FkMonomial {
  std::vector<int> exponents;  // exponents[i] is the power of omega^(i)
  long long numerator = 0;
  long long denominator = 1;
};

/// Polynomial form of f_k in (omega, omega', ..., omega^(k-1)); built once, shared read-only.
const std::vector<FkMonomial>& fk_polynomial(int k);

FkJet fk_jet(const ComplexPoint& s, int k);

/// Z_k(s) = sum_mu binom(k, mu) f_{k-mu}(s) zeta^(mu)(s).
ZkValue zk_value(const ComplexPoint& s, int k, const EvalConfig& cfg = {});

/// Real value of i^j chi(1/2+it)^{-1/2} Z_j(1/2+it) together with the size of
/// the imaginary part that was discarded.
struct ZDerivative {
  double value = 0.0;
  double imag_leak = 0.0;
};

/// Threshold on |Im| / (1 + |Re|) above which z_deriv reports a branch failure.
inline constexpr double kBranchLeakTolerance = 1e-8;

/// Z^(j)(t) for 2 <= t <= 5e4; throws BranchError when the imaginary part is not negligible.
double z_deriv(double t, int j, const EvalConfig& cfg = {});

/// As z_deriv but for any 0 <= t <= 5e4 and without the branch check.
ZDerivative z_deriv_detail(double t, int j, const EvalConfig& cfg = {});

/// |Z_k(s) - (-1)^k chi(s) Z_k(1-s)| / (1 + |Z_k(s)|).
double fe_residual(const ComplexPoint& s, int k, const EvalConfig& cfg = {});

/// (L/2 + d/ds)^k zeta(s) with L = log(T / 2pi).
cplx script_zk(const ComplexPoint& s, int k, double T, const EvalConfig& cfg = {});

/// Newton refinement of a zero of script_zk(., k, T) starting from seed.
cplx script_zk_root(cplx seed, int k, double T, const EvalConfig& cfg = {});

}  // namespace hzml
