#pragma once

#include <vector>

#include "hzml/complex_point.hpp"

namespace hzml {

struct EvalConfig {
  /// Absolute truncation target for the Euler-Maclaurin tail.
  double target_abs_tol = 1e-12;
  /// Ceiling on Bernoulli corrections when the minimum does not meet the target.
  int max_em_terms = 40;
  /// Bernoulli corrections always applied.
  int bernoulli_order = 12;
  /// Near s = 1, evaluate through the Stieltjes Laurent series instead of failing.
  bool near_pole_laurent = false;

  void validate() const;
};

inline constexpr int kMaxZetaDerivative = 12;
inline constexpr int kMaxBernoulli = 60;

/// zeta^(mu)(s) by termwise-differentiated Euler-Maclaurin summation.
cplx zeta_deriv(const ComplexPoint& s, int mu, const EvalConfig& cfg = {});

/// [zeta(s), zeta'(s), ..., zeta^(mu_max)(s)] from a single summation pass.
std::vector<cplx> zeta_jet(const ComplexPoint& s, int mu_max, const EvalConfig& cfg = {});

/// Number of Dirichlet terms used at height t.
int em_dirichlet_terms(double t);

}  // namespace hzml
