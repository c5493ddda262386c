"""Laws for N=2 and N=4 superconformal denominators and modified characters."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from ..scft_chars import (
    n2_char_indexed,
    n2_denom,
    n2_smatrix,
    n2_window,
    n4_char_indexed,
    n4_coefficient,
    n4_denom,
    n4_numerator,
    n4_smatrix,
    n4_window,
)
from ..numerics import TWO_PI_I
from ..sl21_chars import HALF, Sector
from ..theta import eta, jacobi_theta, jacobi_theta_dz
from .core import identity

N2_PARAMS = {"M": lambda v: isinstance(v, int) and 2 <= v <= 9, "m": lambda v: isinstance(v, int) and 0 <= v <= 4}
N4_PARAMS = {"M": lambda v: isinstance(v, int) and 2 <= v <= 9, "m": lambda v: isinstance(v, int) and 1 <= v <= 4}


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def n2_level_ok(p):
    if p["m"] > 0 and math.gcd(p["M"], 2 * p["m"] + 2) != 1:
        return f"gcd(M, 2m+2) must be 1 for m > 0; got M={p['M']}, m={p['m']}"
    return None


def n4_level_ok(p):
    if math.gcd(p["M"], p["m"]) != 1 or (p["m"] > 1 and math.gcd(p["M"], 2 * p["m"]) != 1):
        return f"M, m must be coprime with gcd(M, 2m) = 1 for m > 1; got M={p['M']}, m={p['m']}"
    return None


def _central_n2(M, m):
    return 3 * (1 - (2 * m + 2) / M)


@identity("N2-DEN-S", "N=2 denominators under S: i^{4 eps eps' - 2 eps - 2 eps'} tau e^{-pi i z^2/tau}, sectors swap",
          args=("tau", "z1"), default_tol=1e-9)
def _n2_den_s(p, x, pol, c):
    tau, z = x.tau, x.z1
    lhs, rhs = [], []
    for s in Sector.all():
        power = float(4 * s.epsilon * s.epsilon_prime - 2 * s.epsilon - 2 * s.epsilon_prime)
        lhs.append(n2_denom(s, -1 / tau, z / tau, pol))
        rhs.append(cmath.exp(1j * math.pi / 2 * power) * tau * cmath.exp(-1j * math.pi * z * z / tau)
                   * n2_denom(s.swapped(), tau, z, pol))
    return lhs, rhs


@identity("N2-DEN-T", "N=2 denominators under T: Ramond periodic; NS gains e^{pi i/4} and swaps eps",
          args=("tau", "z1"), default_tol=1e-10)
def _n2_den_t(p, x, pol, c):
    tau, z = x.tau, x.z1
    lhs, rhs = [], []
    for s in Sector.all():
        if s.epsilon_prime == 0:
            phase, target = 1, s
        else:
            phase, target = cmath.exp(1j * math.pi / 4), Sector(HALF - s.epsilon, HALF)
        lhs.append(n2_denom(s, tau + 1, z, pol))
        rhs.append(phase * n2_denom(target, tau, z, pol))
    return lhs, rhs


def _n2_s_sides(M, m, tau, z, pol, modified, gauss_div):
    lhs, rhs = [], []
    gauss = cmath.exp(1j * math.pi * _central_n2(M, m) * z * z / (gauss_div * tau))
    for s in Sector.all():
        dual = s.swapped()
        basis = {ab: n2_char_indexed(M, m, dual, *ab, tau, z, pol, modified) for ab in n2_window(M, dual)}
        for jk in n2_window(M, s):
            lhs.append(n2_char_indexed(M, m, s, *jk, -1 / tau, z / tau, pol, modified))
            rhs.append(gauss * sum(n2_smatrix(M, m, s, jk, ab) * v for ab, v in basis.items()))
    return lhs, rhs


@identity("T9.2-S", "modified N=2 characters under S: Gaussian e^{pi i c z^2/(3 tau)} times the sine S-matrix",
          args=("tau", "z1"), params=N2_PARAMS, defaults={"M": 5, "m": 0},
          grid=[{"M": 5, "m": 0}, {"M": 3, "m": 1}, {"M": 3, "m": 0}, {"M": 5, "m": 1}],
          constraint=n2_level_ok, default_tol=1e-6, consts={"gauss_div": 3})
def _t92s(p, x, pol, c):
    return _n2_s_sides(p.M, p.m, x.tau, x.z1, pol, True, c["gauss_div"])


@identity("T9.2-T", "modified N=2 characters under T: e((m+1)jk/M - eps'/4), eps -> eps + eps' mod 1",
          args=("tau", "z1"), params=N2_PARAMS, defaults={"M": 5, "m": 0},
          grid=[{"M": 5, "m": 0}, {"M": 3, "m": 1}, {"M": 5, "m": 1}],
          constraint=n2_level_ok, default_tol=1e-9, consts={"w": 0})
def _t92t(p, x, pol, c):
    M, m, tau, z = p.M, p.m, x.tau, x.z1
    w = m + 1 + c["w"]
    lhs, rhs = [], []
    for s in Sector.all():
        target = Sector((s.epsilon + s.epsilon_prime) % 1, s.epsilon_prime)
        for j, k in n2_window(M, s):
            lhs.append(n2_char_indexed(M, m, s, j, k, tau + 1, z, pol))
            rhs.append(ex(w * float(j * k) / M - float(s.epsilon_prime) / 4) * n2_char_indexed(M, m, target, j, k, tau, z, pol))
    return lhs, rhs


def _n2_boundary_closed(M, s, j, k, tau, z, pol):
    """m = 0 characters as a theta quotient at M tau over the N=2 denominator."""
    e, j, k = float(s.epsilon), float(j), float(k)
    big = M * tau
    num = (-1j * eta(big, pol) ** 3 * jacobi_theta("11", big, (j + k) * tau + 2 * e, pol)
           / (jacobi_theta("11", big, -z + j * tau + e, pol) * jacobi_theta("11", big, z + k * tau + e, pol)))
    return ex(j * k * tau / M + (j - k) * z / M) * num / n2_denom(s, tau, z, pol)


@identity("R9.3b", "m = 0 N=2 characters: modification trivial, theta-quotient form, S law without tilde",
          args=("tau", "z1"), params={"M": lambda v: isinstance(v, int) and 2 <= v <= 9}, defaults={"M": 3},
          grid=[{"M": 3}, {"M": 4}, {"M": 5}], default_tol=1e-9)
def _r93b(p, x, pol, c):
    M, tau, z = p.M, x.tau, x.z1
    lhs, rhs = [], []
    for s in Sector.all():
        for j, k in n2_window(M, s):
            plain = n2_char_indexed(M, 0, s, j, k, tau, z, pol, modified=False)
            lhs += [n2_char_indexed(M, 0, s, j, k, tau, z, pol), plain]
            rhs += [plain, _n2_boundary_closed(M, s, j, k, tau, z, pol)]
    sl, sr = _n2_s_sides(M, 0, tau, z, pol, False, 3)
    return lhs + sl, rhs + sr


@identity("N4-DEN-S", "N=4 denominators under S with t + z^2/tau: -(-1)^{(1-2eps)(1-2eps')} tau, sectors swap",
          args=("tau", "z1", "t"), default_tol=1e-9)
def _n4_den_s(p, x, pol, c):
    tau, z, t = x.tau, x.z1, x.t
    lhs, rhs = [], []
    for s in Sector.all():
        parity = int((1 - 2 * s.epsilon) * (1 - 2 * s.epsilon_prime))
        lhs.append(n4_denom(s, -1 / tau, z / tau, t + z * z / tau, pol))
        rhs.append(-((-1) ** parity) * tau * n4_denom(s.swapped(), tau, z, t, pol))
    return lhs, rhs


@identity("N4-DEN-T", "N=4 denominators under T: e^{pi i eps'}, eps -> |eps - eps'|",
          args=("tau", "z1", "t"), default_tol=1e-10)
def _n4_den_t(p, x, pol, c):
    tau, z, t = x.tau, x.z1, x.t
    lhs, rhs = [], []
    for s in Sector.all():
        target = Sector(abs(s.epsilon - s.epsilon_prime), s.epsilon_prime)
        lhs.append(n4_denom(s, tau + 1, z, t, pol))
        rhs.append(cmath.exp(1j * math.pi * float(s.epsilon_prime)) * n4_denom(target, tau, z, t, pol))
    return lhs, rhs


N4_GRID = [{"M": 2, "m": 1}, {"M": 3, "m": 1}, {"M": 3, "m": 2}, {"M": 5, "m": 2}]


@identity("T10.7-S", "modified N=4 characters under S: sine S-matrix over the dual window, factor tau",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=N4_GRID,
          constraint=n4_level_ok, default_tol=1e-6, consts={"m": 0})
def _t107s(p, x, pol, c):
    M, m, tau, z, t = p.M, p.m, x.tau, x.z1, x.t
    mm = m + c["m"]
    lhs, rhs = [], []
    for s in Sector.all():
        dual = s.swapped()
        basis = {ab: n4_char_indexed(M, m, dual, *ab, tau, z, t, pol) for ab in n4_window(M, dual)}
        for jk in n4_window(M, s):
            lhs.append(n4_char_indexed(M, m, s, *jk, -1 / tau, z / tau, t + z * z / tau, pol))
            rhs.append(tau * sum(n4_coefficient(M, mm, s, jk, ab) * v for ab, v in basis.items()))
    return lhs, rhs


@identity("T10.7-T", "modified N=4 characters under T: e(-m jt kt/M - eps'/2), eps -> |eps - eps'|",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=N4_GRID,
          constraint=n4_level_ok, default_tol=1e-9, consts={"m": 0})
def _t107t(p, x, pol, c):
    M, m, tau, z, t = p.M, p.m, x.tau, x.z1, x.t
    mm = m + c["m"]
    lhs, rhs = [], []
    for s in Sector.all():
        target = Sector(abs(s.epsilon - s.epsilon_prime), s.epsilon_prime)
        for jt, kt in n4_window(M, s):
            lhs.append(n4_char_indexed(M, m, s, jt, kt, tau + 1, z, t, pol))
            rhs.append(ex(-mm * float(jt * kt) / M - float(s.epsilon_prime) / 2) * n4_char_indexed(M, m, target, jt, kt, tau, z, t, pol))
    return lhs, rhs


R106_GRID = [{"M": 2, "m": 1}, {"M": 3, "m": 1}, {"M": 3, "m": 2}]


def _literal(M, m, s, jt, kt, x, pol):
    return n4_char_indexed(M, m, s, jt, kt, x.tau, x.z1, x.t, pol, canonical=False)


@identity("R10.6a", "N=4 characters are M-periodic in each index separately, after the factor e^{pi i m (jt-kt)/M} when eps = 1/2",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=R106_GRID,
          constraint=n4_level_ok, default_tol=1e-8)
def _r106a(p, x, pol, c):
    M, m = p.M, p.m
    lhs, rhs = [], []
    for s in Sector.all():
        def weighted(jt, kt):
            return cmath.exp(1j * math.pi * m * float(jt - kt) / M) ** int(2 * s.epsilon) * _literal(M, m, s, jt, kt, x, pol)

        for jt, kt in n4_window(M, s):
            base = weighted(jt, kt)
            # a diagonal shift composes these two; evaluated directly it loses ~8 digits
            for sj, sk in ((-M, 0), (0, -M)):
                lhs.append(weighted(jt + sj, kt + sk))
                rhs.append(base)
    return lhs, rhs


@identity("R10.6b", "N=4 characters: ch(jt, kt) = -ch(-kt, -jt)",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=R106_GRID,
          constraint=n4_level_ok, default_tol=1e-8)
def _r106b(p, x, pol, c):
    lhs, rhs = [], []
    for s in Sector.all():
        for jt, kt in n4_window(p.M, s):
            lhs.append(_literal(p.M, p.m, s, jt, kt, x, pol))
            rhs.append(-_literal(p.M, p.m, s, -kt, -jt, x, pol))
    return lhs, rhs


@identity("R10.6c", "N=4 characters vanish when jt + kt is a multiple of M",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=R106_GRID,
          constraint=n4_level_ok, default_tol=1e-8)
def _r106c(p, x, pol, c):
    M = p.M
    lhs = []
    for s in Sector.all():
        for a in range(M):
            jt = a + s.epsilon_prime
            # kt = M - jt would put the numerator at (jt, jt - M), which is ill-conditioned
            for n in (0, -1):
                lhs.append(_literal(M, p.m, s, jt, n * M - jt, x, pol))
    return lhs, [0j] * len(lhs)


@identity("R10.6d", "N=4 S-law: the (at, bt) and (M - bt, M - at) summands agree",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=R106_GRID,
          constraint=n4_level_ok, default_tol=1e-8)
def _r106d(p, x, pol, c):
    # the bare coefficients differ by a sign; the characters supply the matching sign
    M, m = p.M, p.m
    lhs, rhs = [], []
    for s in Sector.all():
        dual = s.swapped()
        for jk in n4_window(M, s):
            for a, b in n4_window(M, dual):
                lhs.append(n4_coefficient(M, m, s, jk, (a, b))
                           * n4_char_indexed(M, m, dual, a, b, x.tau, x.z1, x.t, pol))
                rhs.append(n4_coefficient(M, m, s, jk, (M - b, M - a))
                           * n4_char_indexed(M, m, dual, M - b, M - a, x.tau, x.z1, x.t, pol))
    return lhs, rhs


@identity("R10.6e", "Ramond N=4 characters: ch(0, kt) = -e^{2 pi i m eps} ch(M - kt, 0)",
          args=("tau", "z1", "t"), params=N4_PARAMS, defaults={"M": 3, "m": 1}, grid=R106_GRID,
          constraint=n4_level_ok, default_tol=1e-8)
def _r106e(p, x, pol, c):
    M, m = p.M, p.m
    lhs, rhs = [], []
    for eps in (0, HALF):
        s = Sector(eps, 0)
        for kt in range(1, M):
            lhs.append(_literal(M, m, s, 0, kt, x, pol))
            rhs.append(-ex(m * float(eps)) * _literal(M, m, s, M - kt, 0, x, pol))
    return lhs, rhs


def _log_d0(big, u, pol):
    return jacobi_theta_dz("11", big, u, pol) / jacobi_theta("11", big, u, pol)


@identity("R10.8", "level -1/M N=4 numerators as D0 of a theta quotient at M tau plus the prefactor term",
          args=("tau", "z1", "t"), params={"M": lambda v: isinstance(v, int) and 2 <= v <= 9}, defaults={"M": 3},
          grid=[{"M": 2}, {"M": 3}, {"M": 5}], default_tol=1e-7)
def _r108(p, x, pol, c):
    M, tau, z, t = p.M, x.tau, x.z1, x.t
    big = M * tau
    lhs, rhs = [], []
    for s in Sector.all():
        e = float(s.epsilon)
        sign = -1 if s.epsilon == HALF else 1
        for jt, kt in n4_window(M, s):
            a, b = float(jt), float(kt)
            u1, u2 = z + a * tau + e, z - b * tau + e
            quot = (eta(big, pol) ** 3 * jacobi_theta("11", big, 2 * z + (a - b) * tau, pol)
                    / (jacobi_theta("11", big, u1, pol) * jacobi_theta("11", big, u2, pol)))
            d0 = quot * (-_log_d0(big, u1, pol) + _log_d0(big, u2, pol))
            pref = sign * ex(-t / M - a * b * tau / M + (a - b) * z / M)
            closed = -1j * pref * d0 + 1j * pref * (a + b) / M * quot
            lhs.append(n4_numerator(M, 1, s.epsilon, jt, -kt, tau, z, t, pol))
            rhs.append(closed)
    return lhs, rhs


__all__ = ["n2_level_ok", "n4_level_ok"]
