#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace hzml {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(mid + half * nodes[i]);
    return acc * half;
  }
};

/// n-point rule, nodes by Newton iteration on P_n; cached per n.
const GaussLegendreRule& gauss_legendre(int n);

struct PanelResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive bisection of [a, b]: a panel is accepted when the whole-panel rule
/// and the sum over its two halves agree to max(abs_tol, rel_tol |value|).
/// Throws QuadratureError after max_depth levels.
PanelResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                               double abs_tol, int max_depth = 12, int points = 10);

}  // namespace hzml
