"""Independent reference values for the unit tests (mpmath, 40 digits).

Writes tests/unit/oracle_values.hpp. Nothing here shares code with the C++
library: scattering data is assembled from hand-derived closed forms, survival
amplitudes from oscillatory quadrature on the real axis.
"""
import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)
out = []


def emit(name, z):
    z = mp.mpc(z)
    out.append(f"inline const cplx {name}{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}};")


def emit_real(name, x):
    out.append(f"inline constexpr double {name} = {mp.nstr(mp.mpf(x), 20)};")


def sorted_roots(coeffs):
    r = mp.polyroots(coeffs, maxsteps=200, extraprec=200)
    return sorted(r, key=lambda z: (float(z.real), float(z.imag)))


# oneD-gamma, γ² = 0.1: (z-1)(z+i) - 0.1
for k, z in enumerate(sorted_roots([1, I - 1, -(I + mp.mpf("0.1"))])):
    emit(f"gamma_root_{k}", z)
# paper-1d: (z-1)(z+i) - 1
for k, z in enumerate(sorted_roots([1, I - 1, -(I + 1)])):
    emit(f"p1d_root_{k}", z)
# weak coupling γ² = 1e-4
for k, z in enumerate(sorted_roots([1, I - 1, -(I + mp.mpf("1e-4"))])):
    emit(f"weak_root_{k}", z)
# twoK-oneE: (z-1)(z+i)(z+2i) - c1²(z+2i) - c2²(z+i)/2, c1 = c2 = 1/2
c1 = c2 = mp.mpf("0.5")
cubic = mp.polyroots(
    [1, 3 * I - 1, -2 - 3 * I - c1**2 - c2**2 / 2, 2 - 2 * I * c1**2 - I * c2**2 / 2],
    maxsteps=200, extraprec=200)
for k, z in enumerate(sorted(cubic, key=lambda z: (float(z.real), float(z.imag)))):
    emit(f"twok_root_{k}", z)


def s_p1d(z, g2=1):
    # S = 1 - 2πi M L⁻¹ M#, M = γπ^{-1/2}/(z+i), L = z - 1 - γ²/(z+i)
    M = mp.sqrt(g2) / mp.sqrt(mp.pi) / (z + I)
    Ms = mp.sqrt(g2) / mp.sqrt(mp.pi) / (z - I)
    L = z - 1 - g2 / (z + I)
    return 1 - 2 * mp.pi * I * M * Ms / L


emit("p1d_s_at_0", s_p1d(mp.mpf(0)))
emit("p1d_s_at_2m1i", s_p1d(mp.mpc(2, -1)))
eps = mp.mpf("1e-25")
emit("p1d_residue_at_i", eps * s_p1d(I + eps))


def s_twok(z):
    s = 1 / mp.sqrt(mp.pi)
    M = mp.matrix([[c1 * s / (z + I)], [c2 * s / (z + 2 * I)]])
    Ms = mp.matrix([[c1 * s / (z - I), c2 * s / (z - 2 * I)]])
    L = z - 1 - c1**2 / (z + I) - c2**2 / (2 * (z + 2 * I))
    return mp.eye(2) - 2 * mp.pi * I * M * Ms / L


A = s_twok(I + eps) * eps
for r in range(2):
    for c in range(2):
        emit(f"twok_lead_i_{r}{c}", A[r, c])
B = s_twok(2 * I + eps) * eps
for r in range(2):
    for c in range(2):
        emit(f"twok_lead_2i_{r}{c}", B[r, c])
S = s_twok(mp.mpf(5))
for r in range(2):
    for c in range(2):
        emit(f"twok_s_at_5_{r}{c}", S[r, c])


# conjugate-pair coupling; M#M on the real line is |m0|² + |m1|²
def conj_gram(l):
    s = 1 / mp.sqrt(mp.pi)
    m0 = s * (1 / (l + I) - mp.mpf("1.5") / (l + 2 * I))
    m1 = s / (l + 2 * I)
    return abs(m0) ** 2 + abs(m1) ** 2


def conj_livsic_upper(z):
    return z - 1 - mp.quad(lambda l: conj_gram(l) / (z - l), [-mp.inf, 0, mp.inf])


zt = mp.mpc("0.7", "1.3")
emit("conj_livsic_upper_at_07_13", conj_livsic_upper(zt))

# Breit-Wigner truncated survival: ∫_0^∞ e^{-itλ} (α/π)/((λ-c)²+α²) dλ / N₊
def trunc_survival(c, a, t):
    c, a, t = mp.mpf(c), mp.mpf(a), mp.mpf(t)
    zeta = mp.mpc(c, -a)

    def half(p):  # ∫_0^∞ e^{-itλ}/(λ-p) dλ on the real axis
        return mp.quadosc(lambda l: mp.exp(-I * t * l) / (l - p), [0, mp.inf], omega=t)

    w = (half(mp.conj(zeta)) - half(zeta)) / (2 * mp.pi * I)
    n = (mp.pi / 2 + mp.atan(c / a)) / mp.pi
    return w / n


emit("trunc_1_005_t10", trunc_survival("1", "0.05", 10))
emit("trunc_1_005_t1000", trunc_survival("1", "0.05", 1000))
emit("trunc_1_01_t5", trunc_survival("1", "0.1", 5))

# Cauchy transforms by quadrature at 2i
emit("cauchy_lorentz_at_2i", mp.quad(lambda l: (1 / mp.pi) / (l**2 + 1) / (2 * I - l), [-mp.inf, 0, mp.inf]))
emit("cauchy_lorentz4_at_2i", mp.quad(lambda l: (1 / mp.pi) / (l**2 + 4) / (2 * I - l), [-mp.inf, 0, mp.inf]))
emit("inner_ip_2ip", mp.quad(lambda l: mp.conj(1 / (l + I)) / (l + 2 * I), [-mp.inf, 0, mp.inf]))

with open("tests/unit/oracle_values.hpp", "w") as f:
    f.write("// Generated by tests/oracles/compute_oracles.py; do not edit.\n#pragma once\n\n")
    f.write('#include "resolab/tolerances.hpp"\n\nnamespace oracle_values {\n\nusing resolab::cplx;\n\n')
    f.write("\n".join(out))
    f.write("\n\n}  // namespace oracle_values\n")
print("\n".join(out))
