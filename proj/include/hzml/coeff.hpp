#pragma once

#include <string>
#include <vector>

#include "hzml/moments.hpp"
#include "hzml/parallel.hpp"

namespace hzml {

enum class CoeffMode { Finite, Asymptotic };

/// Where the exp-factor term places the zeros z_g of the operator polynomial.
enum class RootPlacement { FirstOrder, Refined };

/// Finite-T breakdowns stop at j = 8; the asymptotic coefficient extends to j = 12.
inline constexpr int kMaxFiniteJ = 8;
inline constexpr int kMaxCoeffJ = 12;
inline constexpr double kAsymptoticNormalization = 1e6;

/// The five terms of the predicted discrete moment. Each term carries the
/// full T L^{2j+2} scaling; per_TL divides it back out.
struct CoefficientBreakdown {
  int j = 0;
  int k = 0;
  double T = 0.0;
  bool asymptotic = false;
  double L = 0.0;
  double term_delta = 0.0;
  double term_cg = 0.0;
  double term_u = 0.0;
  double term_p2j2 = 0.0;
  double term_exp = 0.0;
  double total = 0.0;
  double per_TL = 0.0;
  double imag_leak = 0.0;  // relative, of the conjugate-paired exp sum
};

CoefficientBreakdown breakdown(int j, int k, double T, CoeffMode mode,
                               RootPlacement placement = RootPlacement::FirstOrder);

/// C_{j,k}; asserts agreement between two normalizations.
double asymptotic_coefficient(int j, int k);

/// Largest absolute per_TL term, the natural scale for "C = 0" checks.
double coefficient_scale(const CoefficientBreakdown& b);

struct IdentityReport {
  std::string name;
  std::string parameters;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_gap = 0.0;
  double scale = 1.0;  // magnitude used for relative comparisons
  double tolerance = 0.0;    // allowed abs_gap for floating comparisons
  bool exact = false;        // lhs and rhs were compared in exact arithmetic
  bool report_only = false;  // no claim is attached to the gap

  bool holds() const;
};

IdentityReport combi_sum(int j, int u);
IdentityReport first_term_sum(int j);

/// S1..S4: direct nested sums over the roots against their closed forms.
std::vector<IdentityReport> step4_sums(int j, int k);

IdentityReport yildirim_compare(int k);

/// Every identity for j <= j_max, k <= k_max.
std::vector<IdentityReport> identity_sweep(int j_max, int k_max);

struct MomentReport {
  int j = 0;
  int k = 0;
  double T = 0.0;
  double measured = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  std::size_t n_zeros_used = 0;
  double count_expected = 0.0;
  double count_deviation = 0.0;
  double max_imag_leak = 0.0;
  int scan_density = 0;
};

MomentReport verify_moment(int j, int k, double T, const Execution& exec = {},
                           int density = kDefaultScanDensity);

}  // namespace hzml
