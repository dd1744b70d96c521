#pragma once

#include <vector>

#include "hzml/complex_point.hpp"

namespace hzml {

/// log Gamma(z): shift upward until |z + shift| > 10, then a Stirling series of
/// order 10. Continuous along any path in Re z > 0 (the analytic branch there).
cplx log_gamma(cplx z);

/// psi^(m)(z), m = 0 is the digamma function. Upward recurrence plus asymptotic series.
cplx polygamma(int m, cplx z);

/// d^r/dw^r tan(w) for r = 0..r_max.
std::vector<cplx> tan_jet(cplx w, int r_max);

/// log sin(z) without overflow for large |Im z| (branch unspecified).
cplx log_sin(cplx z);

}  // namespace hzml
