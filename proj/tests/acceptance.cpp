// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hzml/coeff.hpp"
#include "hzml/errors.hpp"
#include "hzml/hardy_z.hpp"
#include "hzml/moments.hpp"
#include "hzml/stieltjes.hpp"
#include "hzml/theta_roots.hpp"

using namespace hzml;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

Outcome conrey_ghosh_anchor() {
  const double c = asymptotic_coefficient(0, 1);
  const double gap = std::abs(c - (std::exp(2.0) - 5.0) / (4.0 * kPi));
  return {gap <= 1e-12, fmt("C_{0,1} = %.17g, gap %.3g", c, gap)};
}

Outcome diagonal_vanishing() {
  double worst = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const auto b = breakdown(k, k, kAsymptoticNormalization, CoeffMode::Asymptotic);
    const double c = asymptotic_coefficient(k, k);
    worst = std::max(worst, std::abs(c) / coefficient_scale(b));
  }
  return {worst <= 1e-12, fmt("max |C_{k,k}| / term scale = %.3g over k = 0..12", worst)};
}

Outcome power_sum_table() {
  double worst_table = 0.0, worst_sides = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const auto ts = trunc_exp_roots(k);
    for (int u = 1; u <= 2 * k + 2; ++u) {
      double expected;
      if (u == 1)
        expected = -1.0;
      else if (u <= k)
        expected = 0.0;
      else if (u == k + 1)
        expected = 1.0 / factorial(k);
      else if (u == 2 * k + 2)
        expected = ((k % 2 ? 1.0 : -1.0) + 1.0) / (factorial(k) * factorial(k + 1));
      else
        expected = std::nan("");
      const double p = power_sum(ts, u);  // throws if the two sides disagree
      const double scale = std::max(1.0, ts.power_sum_scale[u]);
      worst_sides = std::max(worst_sides, std::abs(ts.power_sums_root_side[u] - p) / scale);
      if (std::isnan(expected)) continue;
      const double gap = expected != 0.0 ? std::abs(p - expected) / std::abs(expected) : std::abs(p) / scale;
      worst_table = std::max(worst_table, gap);
    }
  }
  return {worst_table <= 1e-9 && worst_sides <= 1e-9,
          fmt("worst table gap %.3g, worst root/coefficient gap %.3g (k = 1..20)", worst_table, worst_sides)};
}

Outcome combinatorial_suite() {
  double combi = 0.0, first = 0.0, step4 = 0.0;
  for (int j = 0; j <= 12; ++j)
    for (int u = 0; u <= j; ++u) combi = std::max(combi, combi_sum(j, u).abs_gap);
  for (int j = 0; j <= 15; ++j) first = std::max(first, first_term_sum(j).abs_gap);
  for (int j = 0; j <= 6; ++j)
    for (int k = 0; k <= 8; ++k)
      for (const auto& r : step4_sums(j, k)) step4 = std::max(step4, r.abs_gap / std::max(r.scale, 1e-300));
  return {combi == 0.0 && first == 0.0 && step4 <= 1e-10,
          fmt("combi gap %.3g, first-term gap %.3g, S1..S4 relative gap %.3g", combi, first, step4)};
}

Outcome continuous_moment_check() {
  const auto reference = [](double T) { return T * (std::log(T / kTwoPi) + 2.0 * stieltjes(0) - 1.0); };
  const double m1 = continuous_moment(0, 1000.0, Execution::from_env());
  const double m5 = continuous_moment(0, 5000.0, Execution::from_env());
  const double r1 = std::abs(m1 / reference(1000.0) - 1.0);
  const double r5 = std::abs(m5 / reference(5000.0) - 1.0);
  return {r1 <= 0.02 && r5 <= 0.01, fmt("relative deviation %.4f at T=1000, %.4f at T=5000", r1, r5)};
}

Outcome zero_census() {
  const double T = 500.0;
  std::string detail;
  bool ok = true;
  for (int k = 0; k <= 2; ++k) {
    try {
      const auto zl = find_zeros_census(k, T, kDefaultScanDensity, Execution::from_env());
      const double dev = count_check(zl, T);
      ok = ok && std::abs(dev) <= census_bound(T);
      detail += fmt("k=%g: %g zeros, deviation %.2f; ", k, double(zl.size()), dev);
    } catch (const CompletenessAlarm& e) {
      ok = false;
      detail += std::string("k=") + std::to_string(k) + ": " + e.what() + "; ";
    }
  }
  return {ok, detail + fmt("bound %.2f", census_bound(T))};
}

Outcome interlacing() {
  bool ok = true;
  std::string detail;
  for (int k = 0; k <= 1; ++k) {
    const auto lo = find_zeros(k, 50.0, 500.0, kDefaultScanDensity, Execution::from_env());
    const auto hi = find_zeros(k + 1, 50.0, 500.0, kDefaultScanDensity, Execution::from_env());
    int bad = 0;
    std::size_t p = 0;
    for (std::size_t i = 0; i + 1 < lo.size(); ++i) {
      while (p < hi.size() && hi.zeros[p].gamma <= lo.zeros[i].gamma) ++p;
      int between = 0;
      for (std::size_t q = p; q < hi.size() && hi.zeros[q].gamma < lo.zeros[i + 1].gamma; ++q) ++between;
      if (between != 1) ++bad;
    }
    ok = ok && bad == 0;
    detail += fmt("k=%g: %g gaps, %g violations; ", k, double(lo.size() ? lo.size() - 1 : 0), bad);
  }
  return {ok, detail};
}

Outcome end_to_end() {
  struct Case {
    int j, k;
    double lo, hi;
  };
  bool ok = true;
  std::string detail;
  for (const Case c : {Case{0, 1, 0.75, 1.25}, Case{1, 2, 0.6, 1.4}}) {
    const auto r500 = verify_moment(c.j, c.k, 500.0, Execution::from_env());
    const auto r2000 = verify_moment(c.j, c.k, 2000.0, Execution::from_env());
    const bool in_window = r2000.ratio >= c.lo && r2000.ratio <= c.hi;
    const bool trend = std::abs(r2000.ratio - 1.0) <= 1.5 * std::abs(r500.ratio - 1.0);
    ok = ok && in_window && trend;
    detail += fmt("(j,k)=(%g,%g): ", c.j, c.k) + fmt("ratio %.4f at T=500, %.4f at T=2000; ", r500.ratio, r2000.ratio);
  }
  return {ok, detail};
}

Outcome derivative_correctness() {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> dist(10.0, 2000.0);
  const double h = 1e-3;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = dist(rng);
    for (int j = 1; j <= 4; ++j) {
      const auto f = [&](double x) { return z_deriv(x, j - 1); };
      const double fd = (f(t - 2 * h) - 8.0 * f(t - h) + 8.0 * f(t + h) - f(t + 2 * h)) / (12.0 * h);
      const double v = z_deriv(t, j);
      worst = std::max(worst, std::abs(fd - v) / std::abs(v));
    }
  }
  return {worst <= 1e-5, fmt("worst relative error %.3g over 100 points, j = 1..4", worst)};
}

Outcome functional_equation() {
  double worst = 0.0;
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      const ComplexPoint s{-0.5 + 2.0 * a / 9.0, 10.0 * std::pow(2000.0, b / 9.0)};
      for (int k = 0; k <= 4; ++k) worst = std::max(worst, fe_residual(s, k));
    }
  }
  return {worst <= 1e-8, fmt("worst residual %.3g on 100 points, k = 0..4", worst)};
}

Outcome operator_roots() {
  const double T = 1e6;
  const double L = std::log(T / kTwoPi);
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    for (const auto& th : trunc_exp_roots(k).roots) {
      const cplx seed = z_from_theta(th, T);
      worst = std::max(worst, std::abs(script_zk_root(seed, k, T) - seed) * L * L);
    }
  }
  return {worst <= 10.0, fmt("max |z - seed| L^2 = %.3f (bound 10)", worst)};
}

Outcome yildirim_trend() {
  bool ok = true;
  std::string detail;
  for (const auto& ks : {std::vector<int>{4, 8, 16}, std::vector<int>{5, 9, 17}}) {
    double prev = INFINITY;
    for (int k : ks) {
      const auto r = yildirim_compare(k);
      ok = ok && r.abs_gap <= 10.0 * std::log(k) / (double(k) * k) && r.abs_gap < prev;
      prev = r.abs_gap;
      detail += fmt("k=%g gap %.4f; ", k, r.abs_gap);
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Conrey-Ghosh anchor", conrey_ghosh_anchor},
      {"diagonal vanishing", diagonal_vanishing},
      {"power-sum identities", power_sum_table},
      {"combinatorial suite", combinatorial_suite},
      {"continuous moment", continuous_moment_check},
      {"zero census", zero_census},
      {"interlacing", interlacing},
      {"end-to-end discrete moment", end_to_end},
      {"derivative correctness", derivative_correctness},
      {"functional equation", functional_equation},
      {"operator-polynomial roots", operator_roots},
      {"Yildirim trend", yildirim_trend},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
