#include "hzml/quadrature.hpp"

#include <map>
#include <mutex>
#include <string>

#include "hzml/complex_point.hpp"
#include "hzml/errors.hpp"

namespace hzml {

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pn1 = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

struct Split {
  double value;
  double error;
  int evaluations;
};

Split refine(const std::function<double(double)>& f, const GaussLegendreRule& rule, double a, double b,
             double whole, double rel_tol, double abs_tol, int depth, int max_depth) {
  const double mid = 0.5 * (a + b);
  const double left = rule.integrate(f, a, mid);
  const double right = rule.integrate(f, mid, b);
  const double halves = left + right;
  const double diff = std::abs(halves - whole);
  const int evals = 2 * static_cast<int>(rule.nodes.size());
  if (diff <= std::max(abs_tol, rel_tol * std::abs(halves))) return {halves, diff, evals};
  if (depth >= max_depth)
    throw QuadratureError("integrate_adaptive: refinement stalled on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  const auto l = refine(f, rule, a, mid, left, rel_tol, 0.5 * abs_tol, depth + 1, max_depth);
  const auto r = refine(f, rule, mid, b, right, rel_tol, 0.5 * abs_tol, depth + 1, max_depth);
  return {l.value + r.value, l.error + r.error, evals + l.evaluations + r.evaluations};
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 512) throw DomainError("gauss_legendre: n outside [1, 512]");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

PanelResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                               double abs_tol, int max_depth, int points) {
  const auto& rule = gauss_legendre(points);
  const double whole = rule.integrate(f, a, b);
  const auto s = refine(f, rule, a, b, whole, rel_tol, abs_tol, 0, max_depth);
  return {s.value, s.error, s.evaluations + points};
}

}  // namespace hzml
