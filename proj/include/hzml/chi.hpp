#pragma once

#include <vector>

#include "hzml/complex_point.hpp"

namespace hzml {

/// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), evaluated in the log domain.
cplx chi(const ComplexPoint& s);

/// Leading Stirling term of chi(1 - s):
/// e^{-i pi/4} (t/2pi)^{sigma-1/2} exp(i t log(t / (2 pi e))). Requires t >= 1.
cplx chi_one_minus_s_stirling(const ComplexPoint& s);

/// omega(s) = chi'/chi(s) and its derivatives at a fixed point.
struct OmegaJet {
  ComplexPoint s;
  std::vector<cplx> values;  // values[r] = omega^(r)(s)

  int order() const { return static_cast<int>(values.size()) - 1; }
  const cplx& operator[](std::size_t r) const { return values[r]; }
};

inline constexpr int kMaxOmegaOrder = 12;

/// omega^(r)(s) for r = 0..m, from
///   omega(s) = log 2pi - psi(s) + (pi/2) tan(pi s / 2).
OmegaJet omega_jet(const ComplexPoint& s, int m);

/// Riemann-Siegel theta, continuous in t; chi(1/2 + it)^{-1/2} = exp(i theta(t)).
double riemann_siegel_theta(double t);

}  // namespace hzml
