"""Laws for A(1|1) denominators, the operators D0/D1 and the modified characters."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from ..a11_chars import A11Label, DKind, PhiNumerator, PsiNumerator, apply_D, char_tilde_a11, denom_a11, phi_a11
from ..mock import TorusPoint, log_pole2
from ..numerics import TWO_PI_I
from ..sl21_chars import HALF, Sector
from ..theta import eta, jacobi_theta, jacobi_theta_dz
from .core import identity

HALF_F = Fraction(1, 2)
POS_M = {"m": lambda v: isinstance(v, int) and 1 <= v <= 6}
MM_A11 = {"M": lambda v: isinstance(v, int) and 1 <= v <= 9, "m": lambda v: isinstance(v, int) and 1 <= v <= 6}
A11_GRID = [{"M": 3, "m": 1}, {"M": 2, "m": 1}, {"M": 3, "m": 2}, {"M": 5, "m": 2}]


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def coprime_a11(p):
    if p["m"] > 1 and math.gcd(p["M"], 2 * p["m"]) != 1:
        return f"gcd(M, 2m) must be 1 for m > 1; got M={p['M']}, m={p['m']}"
    return None


def _win(M, e):
    return [a + Fraction(e) for a in range(M)]


def _win_neg_k(M, e):
    return [a + Fraction(e) for a in range(M)] if e == 0 else [a - HALF_F for a in range(M)]


@identity("A11-DEN-S", "A(1|1) denominators under S: factor (-1)^{2(eps-eps')} i tau, sectors swap",
          default_tol=1e-9, consts={"i_power": 0})
def _den_s(p, x, pol, c):
    tau = x.tau
    lhs, rhs = [], []
    for s in Sector.all():
        sign = -1 if (2 * (s.epsilon - s.epsilon_prime)) % 2 else 1
        lhs.append(denom_a11(s, -1 / tau, x.z1 / tau, x.z2 / tau, pol))
        rhs.append(1j ** (1 + c["i_power"]) * sign * tau * denom_a11(s.swapped(), tau, x.z1, x.z2, pol))
    return lhs, rhs


@identity("A11-DEN-T", "A(1|1) denominators under T: phase e(eps' - 1/12), eps -> |eps - eps'|",
          default_tol=1e-10, consts={"twelfth": 0})
def _den_t(p, x, pol, c):
    lhs, rhs = [], []
    for s in Sector.all():
        target = Sector(abs(s.epsilon - s.epsilon_prime), s.epsilon_prime)
        lhs.append(denom_a11(s, x.tau + 1, x.z1, x.z2, pol))
        rhs.append(ex(s.eps_p - 1 / (12 + c["twelfth"])) * denom_a11(target, x.tau, x.z1, x.z2, pol))
    return lhs, rhs


@identity("L8.1", "double-pole numerator series equals D0 of the level-(m-1) numerator",
          params=POS_M, defaults={"m": 1}, grid=[{"m": m} for m in (1, 2, 3, 4)], default_tol=1e-10)
def _l81(p, x, pol, c):
    pt = TorusPoint(x.z1, x.z2, x.t)
    return phi_a11(p.m, x.tau, pt, pol), apply_D(DKind.D0, PhiNumerator(p.m - 1, modified=False), x.tau, pt, pol)


def _wirtinger_d1(g, tau, z1, z2, t, h=2e-4):
    """D1 of g(z1, z2, t) from fourth-order central differences of the Wirtinger derivatives."""

    def d(f, z):
        def cd(step):
            return (-f(z + 2 * step) + 8 * f(z + step) - 8 * f(z - step) + f(z - 2 * step)) / (12 * abs(step))

        return (cd(h) - 1j * cd(1j * h)) / 2 / TWO_PI_I

    d1 = d(lambda s: g(s, z2, t), z1)
    d2 = d(lambda s: g(z1, s, t), z2)
    dt = d(lambda s: g(z1, z2, s), t)
    return d1 - d2 - (z1 - z2) / (2 * tau) * dt


@identity("E8.7", "D1 is S-equivariant: (D1 F)|S = tau D1(F|S), second route by finite differences",
          params=MM_A11, defaults={"M": 3, "m": 1}, grid=[{"M": 3, "m": 1}, {"M": 2, "m": 1}, {"M": 3, "m": 2}],
          constraint=coprime_a11, default_tol=1e-6)
def _e87(p, x, pol, c):
    tau = x.tau
    lhs, rhs = [], []
    for eps, j, k in ((0, 0, 1), (HALF_F, HALF_F, Fraction(3, 2)), (HALF_F, 1, 2)):
        f = PsiNumerator(p.M, p.m - 1, Fraction(eps), Fraction(j), Fraction(k))
        s_pt = TorusPoint(x.z1 / tau, x.z2 / tau, x.t - x.z1 * x.z2 / tau)
        lhs.append(apply_D(DKind.D1, f, -1 / tau, s_pt, pol) / tau)

        def f_s(a, b, t):
            return f.value(-1 / tau, TorusPoint(a / tau, b / tau, t - a * b / tau), pol) / tau

        rhs.append(tau * _wirtinger_d1(f_s, tau, x.z1, x.z2, x.t))
    return lhs, rhs


@identity("T8.2a", "completed A(1|1) numerator is an S-eigenfunction with factor tau^2",
          params=POS_M, defaults={"m": 2}, grid=[{"m": m} for m in (1, 2, 3)], default_tol=1e-7, consts={"power": 0})
def _t82a(p, x, pol, c):
    tau = x.tau
    f = PhiNumerator(p.m - 1)
    lhs = apply_D(DKind.D1, f, -1 / tau, TorusPoint(x.z1 / tau, x.z2 / tau, x.t - x.z1 * x.z2 / tau), pol)
    return lhs, tau ** (2 + c["power"]) * apply_D(DKind.D1, f, tau, TorusPoint(x.z1, x.z2, x.t), pol)


@identity("T8.2b", "D1 of the completed numerators under S: (tau^2/M) Fourier sum over the dual sector",
          params=MM_A11, defaults={"M": 3, "m": 1}, grid=A11_GRID, constraint=coprime_a11, default_tol=1e-6,
          consts={"m": 0})
def _t82b(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    mm = m + c["m"]
    pt = TorusPoint(x.z1, x.z2, x.t)
    s_pt = TorusPoint(x.z1 / tau, x.z2 / tau, x.t - x.z1 * x.z2 / tau)
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        basis = {(a, b): apply_D(DKind.D1, PsiNumerator(M, m - 1, ep, a, b), tau, pt, pol)
                 for a in _win(M, e) for b in _win(M, e)}
        for j in _win(M, ep):
            for k in _win(M, ep):
                lhs.append(apply_D(DKind.D1, PsiNumerator(M, m - 1, e, j, k), -1 / tau, s_pt, pol))
                rhs.append(tau * tau / M * sum(ex(-mm * float(a * k + b * j) / M) * v for (a, b), v in basis.items()))
    return lhs, rhs


@identity("T8.4", "positive-level modified characters under S: -(-1)^{2(eps-eps')} (i tau/M) Fourier sum",
          params=MM_A11, defaults={"M": 3, "m": 1}, grid=A11_GRID, constraint=coprime_a11, default_tol=1e-6,
          consts={"m": 0, "sign": 0})
def _t84(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    mm = m + c["m"]
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        sign = (1 if (2 * (e - ep)) % 2 else -1) * (-1) ** c["sign"]
        dual = s.swapped()
        basis = {(a, b): char_tilde_a11(A11Label(M, m, "+", a, b, dual), tau, x.z1, x.z2, x.t, pol)
                 for a in _win(M, e) for b in _win(M, e)}
        for j in _win(M, ep):
            for k in _win(M, ep):
                lab = A11Label(M, m, "+", j, k, s)
                lhs.append(char_tilde_a11(lab, -1 / tau, x.z1 / tau, x.z2 / tau, x.t - x.z1 * x.z2 / tau, pol))
                rhs.append(sign * 1j * tau / M * sum(ex(-mm * float(a * k + b * j) / M) * v for (a, b), v in basis.items()))
    return lhs, rhs


@identity("T8.7", "negative-level modified characters under S: (-1)^{2(eps-eps')} (tau/iM) Fourier sum",
          params=MM_A11, defaults={"M": 3, "m": 1}, grid=A11_GRID, constraint=coprime_a11, default_tol=1e-6,
          consts={"m": 0})
def _t87(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    mm = m + c["m"]
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        sign = -1 if (2 * (e - ep)) % 2 else 1
        dual = s.swapped()
        basis = {(a, b): char_tilde_a11(A11Label(M, m, "-", a, b, dual), tau, x.z1, x.z2, x.t, pol)
                 for a in _win(M, e) for b in _win_neg_k(M, e)}
        for j in _win(M, ep):
            for k in _win_neg_k(M, ep):
                lab = A11Label(M, m, "-", j, k, s)
                lhs.append(char_tilde_a11(lab, -1 / tau, x.z1 / tau, x.z2 / tau, x.t + x.z1 * x.z2 / tau, pol))
                rhs.append(sign * tau / (1j * M) * sum(ex(mm * float(a * k + b * j) / M) * v for (a, b), v in basis.items()))
    return lhs, rhs


def _log_d0_theta11(tau, z, pol):
    return jacobi_theta_dz("11", tau, z, pol) / jacobi_theta("11", tau, z, pol)


@identity("R8.5", "level-one A(1|1) numerator is D0 of the sl(2|1) superdenominator (closed form)",
          default_tol=1e-9)
def _r85(p, x, pol, c):
    tau, z1, z2 = x.tau, x.z1, x.z2
    pt = TorusPoint(z1, z2, 0j)
    # D0 of -i eta^3 theta11(z1+z2) / (theta11(z1) theta11(z2)); the z1 + z2 factor is annihilated
    base = -1j * eta(tau, pol) ** 3 * jacobi_theta("11", tau, z1 + z2, pol) / (
        jacobi_theta("11", tau, z1, pol) * jacobi_theta("11", tau, z2, pol))
    closed = base * (-_log_d0_theta11(tau, z1, pol) + _log_d0_theta11(tau, z2, pol))
    lhs = [phi_a11(1, tau, pt, pol), apply_D(DKind.D0, PhiNumerator(0), tau, pt, pol)]
    return lhs, [closed, closed]


GRAM = np.array([[0, 1], [1, -2]])  # (alpha_i | alpha_j) for alpha_1 (= alpha_3) and alpha_2


def _root_values(z1, z2):
    """alpha_1(h), alpha_2(h) / (2 pi i) in the coordinates with -(z1 - z2) alpha_1 - z1 alpha_2."""
    coeff = np.array([-(z1 - z2), -z1])
    return GRAM @ coeff


@identity("E8.21", "negative-level supercharacter series from root data equals the level-m numerator at -t",
          params=POS_M, defaults={"m": 1}, grid=[{"m": m} for m in (1, 2, 3)], default_tol=1e-9)
def _e821(p, x, pol, c):
    m, tau = p.m, x.tau
    a1, a2 = _root_values(x.z1, x.z2)
    j = np.arange(-40, 41)
    quad = m * j * j * tau
    # q^j e^{-beta}/(1 - q^j e^{-beta})^2 times e^{beta} q^{-j}, for beta = alpha_1 and alpha_1 + alpha_2
    first = np.exp(TWO_PI_I * (j * m * a2 + quad + a1) + log_pole2(j * tau - a1))
    second = np.exp(TWO_PI_I * (-a2 - j * m * a2 + quad + a1 + a2) + log_pole2(j * tau - a1 - a2))
    # normalization e^{-m Lambda_0 + rho} with rho = -alpha_1
    lhs = ex(-m * x.t) * ex(-a1) * complex((first - second).sum())
    return lhs, phi_a11(m, tau, TorusPoint(x.z1, x.z2, -x.t), pol)
