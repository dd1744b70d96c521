#pragma once

#include <string>
#include <vector>

namespace hzml {

/// Laurent coefficients of zeta at s = 1:
///   zeta(s) = 1/(s-1) + sum_n (-1)^n c_n / n! (s-1)^n.
class StieltjesTable {
 public:
  enum class Method { LimitFormula, LaurentFit };

  StieltjesTable(std::vector<double> values, Method method)
      : values_(std::move(values)), method_(method) {}

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t n) const { return values_.at(n); }
  std::size_t size() const { return values_.size(); }
  Method method() const { return method_; }
  std::string method_tag() const { return method_ == Method::LimitFormula ? "limit-formula" : "laurent-fit"; }

 private:
  std::vector<double> values_;
  Method method_;
};

inline constexpr int kStieltjesTableSize = 21;  // c_0 .. c_20

/// Shared table, built once on first use.
const StieltjesTable& stieltjes_table();

/// c_n from the shared table (n <= 20).
double stieltjes(int n);

/// Limit formula sum_{l<=m}(log l)^n/l - (log m)^{n+1}/(n+1) with Euler-Maclaurin
/// tail corrections, evaluated in 50-digit arithmetic.
StieltjesTable stieltjes_limit_formula(int n_max);

/// Trapezoidal Cauchy fit of zeta(s) - 1/(s-1) on |s-1| = radius.
StieltjesTable stieltjes_laurent_fit(int n_max, double radius = 0.98, int samples = 2048);

/// Largest n for which the two methods are required to agree within 1e-9.
inline constexpr int kStieltjesCrossCheckMax = 10;

/// Throws AccuracyError when the two methods disagree beyond 1e-9 for n <= kStieltjesCrossCheckMax.
void stieltjes_cross_check();

}  // namespace hzml
