#pragma once

#include <vector>

#include "hzml/complex_point.hpp"

namespace hzml {

inline constexpr int kMaxThetaOrder = 40;

/// The k roots of the truncated exponential sum_{mu<=k} theta^mu / mu!.
struct ThetaSystem {
  int k = 0;
  std::vector<cplx> roots;        // sorted by (Re, Im)
  std::vector<double> residuals;  // |sum_{mu<=k} theta^mu / mu!| per root
  /// power_sums[u] = sum_g theta_g^{-u} for u = 1..2k+2 from exact Newton-Girard
  /// recursion on the coefficients; index 0 unused.
  std::vector<double> power_sums;
  /// The same sums accumulated from the roots.
  std::vector<cplx> power_sums_root_side;
  /// sum_g |theta_g|^{-u}, the magnitude scale of each power sum.
  std::vector<double> power_sum_scale;
  std::vector<cplx> exp_factors;  // e^{-2 theta_g}

  /// sum_{mu<=j} theta_g^mu / mu! for every root.
  std::vector<cplx> partial_sums(int j) const;
};

/// Roots by Aberth-Ehrlich iteration on the k!-scaled integer polynomial,
/// polished with Newton steps in extended precision.
ThetaSystem trunc_exp_roots(int k);

/// sum_g theta_g^{-u}; checks the root-side imaginary part and agreement with
/// the coefficient side (ImaginaryLeakError otherwise).
double power_sum(const ThetaSystem& ts, int u);

/// p_u = sum_g theta_g^{-u} for u = 1..u_max from the coefficients alone:
/// Newton-Girard in exact rational arithmetic, rounded once to double.
std::vector<double> newton_girard_reciprocal_power_sums(int k, int u_max);

/// 1 - 2 theta / L with L = log(T / 2pi).
cplx z_from_theta(cplx theta, double T);

}  // namespace hzml
