#include "hzml/chi.hpp"

#include <cmath>
#include <limits>

#include "hzml/errors.hpp"
#include "hzml/gamma.hpp"

namespace hzml {

cplx chi(const ComplexPoint& p) {
  require_strip(p, "chi");
  const cplx s = p.s();
  if (std::abs(s - 1.0) < 1e-6) throw PoleProximityError("chi: pole at s = 1");
  const cplx half_pi_s = 0.5 * kPi * s;
  if (std::sin(half_pi_s) == 0.0) return 0.0;
  const cplx log_chi = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(half_pi_s) + log_gamma(1.0 - s);
  if (log_chi.real() > std::log(std::numeric_limits<double>::max()))
    throw AccuracyError("chi: exponent overflow");
  return std::exp(log_chi);
}

cplx chi_one_minus_s_stirling(const ComplexPoint& p) {
  if (!(p.sigma > -1.0 && p.sigma < 2.0)) throw DomainError("chi_one_minus_s_stirling: sigma outside (-1, 2)");
  if (!(p.t >= 1.0)) throw DomainError("chi_one_minus_s_stirling: requires t >= 1");
  const double x = p.t / kTwoPi;
  const double modulus = std::pow(x, p.sigma - 0.5);
  const double phase = -0.25 * kPi + p.t * (std::log(x) - 1.0);
  return std::polar(modulus, phase);
}

OmegaJet omega_jet(const ComplexPoint& p, int m) {
  require_strip(p, "omega_jet");
  if (m < 0 || m > kMaxOmegaOrder) throw DomainError("omega_jet: order outside [0, 12]");
  const cplx s = p.s();
  // tan(pi s/2) has poles at odd integers; psi(s) at s = 0.
  for (double pole : {-1.0, 0.0, 1.0})
    if (std::abs(s - pole) < 1e-3) throw PoleProximityError("omega_jet: within 1e-3 of a pole");

  const auto tan_d = tan_jet(0.5 * kPi * s, m);
  OmegaJet jet{p, std::vector<cplx>(m + 1)};
  double scale = 0.5 * kPi;
  for (int r = 0; r <= m; ++r) {
    jet.values[r] = scale * tan_d[r] - polygamma(r, s);
    scale *= 0.5 * kPi;
  }
  jet.values[0] += std::log(kTwoPi);
  return jet;
}

double riemann_siegel_theta(double t) {
  return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

}  // namespace hzml
