#pragma once

#include <vector>

#include "hzml/parallel.hpp"
#include "hzml/zeta.hpp"

namespace hzml {

struct Zero {
  double gamma = 0.0;
  double bracket_width = 0.0;
};

/// Real zeros of Z^(k) on [t_lo, t_hi], each certified by a sign change across its bracket.
struct ZeroList {
  int k = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::vector<Zero> zeros;  // strictly increasing gamma
  int scan_density = 0;

  std::size_t size() const { return zeros.size(); }
};

struct ZeroSearchOptions {
  double bracket_width = 1e-9;
  EvalConfig eval{};
};

inline constexpr int kDefaultScanDensity = 6;

/// Mean zero spacing 2 pi / log(t / 2 pi), with the logarithm floored at 1.
double expected_gap(double t);

/// Scan grid t_0 = t_lo, t_{i+1} = t_i + expected_gap(t_i) / density, ending at t_hi.
std::vector<double> scan_grid(double t_lo, double t_hi, int density);

/// Scans z_deriv(., k) on scan_grid, brackets sign changes and bisects each to
/// opts.bracket_width. Grid evaluation and refinement run on exec.workers threads.
ZeroList find_zeros(int k, double t_lo, double t_hi, int density, const Execution& exec = {},
                    const ZeroSearchOptions& opts = {});

/// Straight-line single-threaded version of find_zeros; the parallel kernel
/// must reproduce it bit for bit.
ZeroList find_zeros_serial(int k, double t_lo, double t_hi, int density, const ZeroSearchOptions& opts = {});

/// (T/2pi) log(T/2pi) - T/2pi.
double expected_zero_count(double T);

/// Bound applied to count_check: 10 + 2 log T.
double census_bound(double T);

/// Zeros with gamma <= T minus expected_zero_count(T). The list must cover (2, T].
double count_check(const ZeroList& zl, double T);

/// find_zeros on [2, T], doubling the density (at most three times) while
/// count_check exceeds census_bound. Throws CompletenessAlarm when it never settles.
ZeroList find_zeros_census(int k, double T, int density = kDefaultScanDensity, const Execution& exec = {},
                           const ZeroSearchOptions& opts = {});

struct DiscreteMoment {
  double value = 0.0;
  double max_imag_leak = 0.0;  // largest relative imaginary part discarded by z_deriv
  std::size_t n_zeros = 0;
};

/// sum over zeros of z_deriv(gamma, j)^2, compensated, ascending in gamma.
DiscreteMoment discrete_moment_detail(int j, const ZeroList& zl, const Execution& exec = {},
                                      const EvalConfig& cfg = {});
double discrete_moment(int j, const ZeroList& zl, const Execution& exec = {}, const EvalConfig& cfg = {});
double discrete_moment_serial(int j, const ZeroList& zl, const EvalConfig& cfg = {});

struct ContinuousMomentOptions {
  double rel_tol = 1e-10;
  double abs_tol_per_unit = 1e-10;
  int sliver_points = 64;
  EvalConfig eval{};
};

struct ContinuousMoment {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
  double sliver = 0.0;  // contribution of [0, 2]
};

/// Panel boundaries on [2, T]: widths at most half the local expected gap.
std::vector<double> moment_panels(double T);

/// int_0^T Z^(j)(t)^2 dt: adaptive composite Gauss-Legendre on [2, T] plus a
/// fixed rule on [0, 2].
ContinuousMoment continuous_moment_detail(int j, double T, const Execution& exec = {},
                                          const ContinuousMomentOptions& opts = {});
ContinuousMoment continuous_moment_serial(int j, double T, const ContinuousMomentOptions& opts = {});
double continuous_moment(int j, double T, const Execution& exec = {});

/// W_g(v) = e^{-v} int_0^{e^v} (log u)^g du = sum_i (-1)^i g!/(g-i)! v^{g-i}.
double hall_W(int g, double v);

/// Monic P_{2j+1}(x) in the monomial basis (coefficients[i] multiplies x^i).
struct HallPolynomial {
  int j = 0;
  std::vector<double> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double x) const;
};

HallPolynomial hall_polynomial(int j);

/// T P_{2j+1}(log(T/2pi)) / (4^j (2j+1)).
double hall_prediction(int j, double T);

}  // namespace hzml
