"""Regenerates tests/reference_values.hpp from mpmath at 40 digits.

The C++ library shares no code with mpmath, so these tables act as an
independent oracle for the unit tests.  Run from the repository root:

    python3 tests/oracles/make_reference.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def f(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-mp.inf, max_fixed=mp.inf) if abs(x) > 0 else "0.0"


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (f(z.real), f(z.imag))


out = ["// Generated by tests/oracles/make_reference.py (mpmath, 40 digits). Do not edit.",
       "#pragma once", "", "#include <complex>", "", "namespace ref {", "",
       "struct ZetaPoint { double sigma, t; int mu; std::complex<double> value; };",
       "struct RealPoint { double x; double value; };",
       "struct ComplexValue { std::complex<double> z; std::complex<double> value; };",
       "struct PolygammaPoint { int m; std::complex<double> z; std::complex<double> value; };",
       "struct ZDerivPoint { double t; int j; double value; };", ""]

zeta_pts = [(0.5, 14.0), (0.5, 100.0), (0.5, 1234.5), (0.7, 1000.0), (1.9, 3.0), (1.5, 0.2),
            (-0.5, 20.0), (0.25, 5000.0), (0.5, 40000.0)]
out.append("inline constexpr ZetaPoint kZeta[] = {")
for s, t in zeta_pts:
    for mu in range(4):
        v = mp.zeta(mp.mpc(s, t), derivative=mu)
        out.append("    {%s, %s, %d, %s}," % (f(s), f(t), mu, c(v)))
out.append("};\n")

out.append("inline constexpr double kStieltjes[] = {")
for n in range(21):
    out.append("    %s," % f(mp.stieltjes(n)))
out.append("};\n")

out.append("inline constexpr ComplexValue kLogGamma[] = {")
for z in [mp.mpc(0.25, 7), mp.mpc(0.5, 100), mp.mpc(3.5, -2), mp.mpc(0.1, 0.1), mp.mpc(12, 40), mp.mpc(0.25, 20000)]:
    out.append("    {%s, %s}," % (c(z), c(mp.loggamma(z))))
out.append("};\n")

out.append("inline constexpr PolygammaPoint kPolygamma[] = {")
for m in range(0, 6):
    for z in [mp.mpc(0.5, 14), mp.mpc(2, 0), mp.mpc(0.3, 0.7), mp.mpc(0.5, 3000)]:
        out.append("    {%d, %s, %s}," % (m, c(z), c(mp.polygamma(m, z))))
out.append("};\n")

out.append("inline constexpr RealPoint kTheta[] = {")
for t in [2.0, 10.0, 14.134725, 100.0, 1000.5, 49999.0]:
    out.append("    {%s, %s}," % (f(t), f(mp.siegeltheta(t))))
out.append("};\n")

out.append("inline constexpr ZDerivPoint kZDeriv[] = {")
for t in [3.5, 17.0, 50.25, 123.456, 1000.0, 4321.0]:
    for j in range(5):
        out.append("    {%s, %d, %s}," % (f(t), j, f(mp.siegelz(t, derivative=j))))
out.append("};\n")

out.append("inline constexpr double kZetaZeros[] = {")
for n in range(1, 31):
    out.append("    %s," % f(mp.zetazero(n).imag))
out.append("};\n")

# integral of Z(t)^2 over [0, 100], one subinterval per unit length
val = mp.mpf(0)
for a in range(100):
    val += mp.quad(lambda t: mp.siegelz(t) ** 2, [a, a + 0.5, a + 1])
out.append("inline constexpr double kZSquaredIntegral100 = %s;" % f(val))
out.append("")
out.append("}  // namespace ref")
print("\n".join(out))
