#include "hzml/moments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "hzml/errors.hpp"
#include "hzml/hardy_z.hpp"
#include "hzml/quadrature.hpp"

namespace hzml {

namespace {

void validate_scan(int k, double t_lo, double t_hi, int density, const ZeroSearchOptions& opts) {
  if (k < 0 || k > kMaxHardyOrder) throw DomainError("find_zeros: k outside [0, 8]");
  if (!(t_lo >= 2.0 && t_lo < t_hi && t_hi <= kMaxHeight))
    throw DomainError("find_zeros: need 2 <= t_lo < t_hi <= 5e4");
  if (density < 4) throw DomainError("find_zeros: density must be >= 4");
  if (!(opts.bracket_width > 0.0)) throw DomainError("find_zeros: bracket width must be positive");
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Shrinks [a, b] (fa, fb of opposite sign) to the requested width.
Zero bisect(int k, double a, double b, double fa, const ZeroSearchOptions& opts) {
  while (b - a > opts.bracket_width) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = z_deriv(m, k, opts.eval);
    if (fm == 0.0) return {m, 0.0};
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return {0.5 * (a + b), b - a};
}

struct Bracket {
  double a, b, fa;
  bool exact;  // the grid point a is itself a zero
};

std::vector<Bracket> brackets_from_grid(const std::vector<double>& grid, const std::vector<double>& values) {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      out.push_back({grid[i], grid[i], 0.0, true});
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 && sign_of(values[i]) != sign_of(values[i + 1]))
      out.push_back({grid[i], grid[i + 1], values[i], false});
  }
  return out;
}

double integrand(int j, double t, const EvalConfig& cfg) {
  const double v = z_deriv(t, j, cfg);
  return v * v;
}

void validate_moment(int j, double T) {
  if (j < 0 || j > kMaxHardyOrder) throw DomainError("continuous_moment: j outside [0, 8]");
  if (!(T > 0.0 && T <= kMaxHeight)) throw DomainError("continuous_moment: T outside (0, 5e4]");
}

double sliver_integral(int j, double T, const ContinuousMomentOptions& opts) {
  const double upper = std::min(T, 2.0);
  const auto& rule = gauss_legendre(opts.sliver_points);
  return rule.integrate(
      [&](double t) {
        const double v = z_deriv_detail(t, j, opts.eval).value;
        return v * v;
      },
      0.0, upper);
}

PanelResult integrate_panel(int j, double a, double b, const ContinuousMomentOptions& opts) {
  return integrate_adaptive([&](double t) { return integrand(j, t, opts.eval); }, a, b, opts.rel_tol,
                            opts.abs_tol_per_unit * (b - a));
}

}  // namespace

double expected_gap(double t) { return kTwoPi / std::max(std::log(t / kTwoPi), 1.0); }

std::vector<double> scan_grid(double t_lo, double t_hi, int density) {
  if (density < 1) throw DomainError("scan_grid: density must be positive");
  if (!(t_lo <= t_hi) || !std::isfinite(t_hi)) throw DomainError("scan_grid: need t_lo <= t_hi");
  std::vector<double> grid{t_lo};
  double t = t_lo;
  while (t < t_hi) {
    t = std::min(t + expected_gap(t) / density, t_hi);
    grid.push_back(t);
  }
  return grid;
}

ZeroList find_zeros(int k, double t_lo, double t_hi, int density, const Execution& exec,
                    const ZeroSearchOptions& opts) {
  validate_scan(k, t_lo, t_hi, density, opts);
  const auto grid = scan_grid(t_lo, t_hi, density);
  const auto values = parallel_map<double>(grid.size(), exec, [&](std::size_t i) { return z_deriv(grid[i], k, opts.eval); });
  const auto brackets = brackets_from_grid(grid, values);
  auto zeros = parallel_map<Zero>(brackets.size(), exec, [&](std::size_t i) {
    const auto& br = brackets[i];
    return br.exact ? Zero{br.a, 0.0} : bisect(k, br.a, br.b, br.fa, opts);
  });
  return {k, t_lo, t_hi, std::move(zeros), density};
}

ZeroList find_zeros_serial(int k, double t_lo, double t_hi, int density, const ZeroSearchOptions& opts) {
  validate_scan(k, t_lo, t_hi, density, opts);
  ZeroList zl{k, t_lo, t_hi, {}, density};
  double t = t_lo;
  double f = z_deriv(t, k, opts.eval);
  while (true) {
    if (f == 0.0) zl.zeros.push_back({t, 0.0});
    if (t >= t_hi) break;
    const double t_next = std::min(t + expected_gap(t) / density, t_hi);
    const double f_next = z_deriv(t_next, k, opts.eval);
    if (f != 0.0 && f_next != 0.0 && sign_of(f) != sign_of(f_next)) zl.zeros.push_back(bisect(k, t, t_next, f, opts));
    t = t_next;
    f = f_next;
  }
  return zl;
}

double expected_zero_count(double T) {
  const double x = T / kTwoPi;
  return x * std::log(x) - x;
}

double census_bound(double T) { return 10.0 + 2.0 * std::log(T); }

double count_check(const ZeroList& zl, double T) {
  if (!(zl.t_lo <= 2.0 + 1e-12 && zl.t_hi >= T))
    throw DomainError("count_check: zero list does not cover (2, T]");
  const auto found = std::count_if(zl.zeros.begin(), zl.zeros.end(), [&](const Zero& z) { return z.gamma <= T; });
  return static_cast<double>(found) - expected_zero_count(T);
}

ZeroList find_zeros_census(int k, double T, int density, const Execution& exec, const ZeroSearchOptions& opts) {
  double deviation = 0.0;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    auto zl = find_zeros(k, 2.0, T, density << attempt, exec, opts);
    deviation = count_check(zl, T);
    if (std::abs(deviation) <= census_bound(T)) return zl;
  }
  throw CompletenessAlarm("count_check: deviation " + std::to_string(deviation) + " exceeds " +
                          std::to_string(census_bound(T)) + " for k = " + std::to_string(k));
}

DiscreteMoment discrete_moment_detail(int j, const ZeroList& zl, const Execution& exec, const EvalConfig& cfg) {
  if (j < 0 || j > kMaxHardyOrder) throw DomainError("discrete_moment: j outside [0, 8]");
  struct Sample {
    double square = 0.0;
    double leak = 0.0;
  };
  const auto samples = parallel_map<Sample>(zl.zeros.size(), exec, [&](std::size_t i) {
    const double t = zl.zeros[i].gamma;
    const auto d = z_deriv_detail(t, j, cfg);
    const double leak = d.imag_leak / (1.0 + std::abs(d.value));
    if (leak > kBranchLeakTolerance)
      throw BranchError("discrete_moment: imaginary leak " + std::to_string(leak) + " at t = " + std::to_string(t));
    return Sample{d.value * d.value, leak};
  });
  DiscreteMoment out;
  CompensatedSum sum;
  for (const auto& s : samples) {
    sum.add(s.square);
    out.max_imag_leak = std::max(out.max_imag_leak, s.leak);
  }
  out.value = sum.value();
  out.n_zeros = samples.size();
  return out;
}

double discrete_moment(int j, const ZeroList& zl, const Execution& exec, const EvalConfig& cfg) {
  if (j < 0 || j > kMaxHardyOrder) throw DomainError("discrete_moment: j outside [0, 8]");
  const auto squares = parallel_map<double>(zl.zeros.size(), exec, [&](std::size_t i) {
    const double v = z_deriv(zl.zeros[i].gamma, j, cfg);
    return v * v;
  });
  CompensatedSum sum;
  for (double v : squares) sum.add(v);
  return sum.value();
}

double discrete_moment_serial(int j, const ZeroList& zl, const EvalConfig& cfg) {
  if (j < 0 || j > kMaxHardyOrder) throw DomainError("discrete_moment: j outside [0, 8]");
  CompensatedSum sum;
  for (const auto& z : zl.zeros) {
    const double v = z_deriv(z.gamma, j, cfg);
    sum.add(v * v);
  }
  return sum.value();
}

std::vector<double> moment_panels(double T) {
  std::vector<double> edges{2.0};
  double t = 2.0;
  while (t < T) {
    t = std::min(t + 0.5 * expected_gap(t), T);
    edges.push_back(t);
  }
  return edges;
}

ContinuousMoment continuous_moment_detail(int j, double T, const Execution& exec,
                                          const ContinuousMomentOptions& opts) {
  validate_moment(j, T);
  ContinuousMoment out;
  out.sliver = sliver_integral(j, T, opts);
  if (T <= 2.0) {
    out.value = out.sliver;
    return out;
  }
  const auto edges = moment_panels(T);
  const auto panels = parallel_map<PanelResult>(edges.size() - 1, exec, [&](std::size_t i) {
    return integrate_panel(j, edges[i], edges[i + 1], opts);
  });
  CompensatedSum sum, err;
  sum.add(out.sliver);
  for (const auto& p : panels) {
    sum.add(p.value);
    err.add(p.error_estimate);
  }
  out.value = sum.value();
  out.error_estimate = err.value();
  out.panels = panels.size();
  return out;
}

ContinuousMoment continuous_moment_serial(int j, double T, const ContinuousMomentOptions& opts) {
  validate_moment(j, T);
  ContinuousMoment out;
  out.sliver = sliver_integral(j, T, opts);
  CompensatedSum sum, err;
  sum.add(out.sliver);
  double a = 2.0;
  while (a < T) {
    const double b = std::min(a + 0.5 * expected_gap(a), T);
    const auto p = integrate_panel(j, a, b, opts);
    sum.add(p.value);
    err.add(p.error_estimate);
    ++out.panels;
    a = b;
  }
  out.value = sum.value();
  out.error_estimate = err.value();
  return out;
}

double continuous_moment(int j, double T, const Execution& exec) {
  return continuous_moment_detail(j, T, exec).value;
}

}  // namespace hzml
