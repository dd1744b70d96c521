#pragma once

#include <cmath>
#include <complex>

namespace hzml {

using cplx = std::complex<double>;

/// A point s = sigma + i t.
struct ComplexPoint {
  double sigma = 0.5;
  double t = 0.0;

  constexpr ComplexPoint() = default;
  constexpr ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {}
  explicit ComplexPoint(cplx s) : sigma(s.real()), t(s.imag()) {}

  cplx s() const { return {sigma, t}; }
  ComplexPoint conj() const { return {sigma, -t}; }
  ComplexPoint reflect() const { return {1.0 - sigma, -t}; }  // 1 - s

  static constexpr ComplexPoint on_line(double t) { return {0.5, t}; }
};

/// Largest |t| accepted by evaluation entry points.
inline constexpr double kMaxHeight = 5.0e4;

/// Entry points reject points outside -1 < sigma < 2 or above kMaxHeight.
void require_strip(const ComplexPoint& p, const char* who);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace hzml
