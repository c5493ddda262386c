"""Laws for sl(2|1)^ denominators, numerators and modified admissible characters."""

from __future__ import annotations

import cmath

from ..mock import TorusPoint, phi
from ..numerics import TWO_PI_I
from ..sl21_chars import Sector, SL21Label, Twist, denom_sl21, psi, char_tilde_sl21
from .core import identity
from .scaling_laws import MM_PARAMS, coprime_level

SL21_GRID = [{"M": 3, "m": 1}, {"M": 2, "m": 0}, {"M": 4, "m": 0}, {"M": 5, "m": 1}]
TWISTS = (Twist.XI, Twist.XI_PRIME)


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def _pt(x, scale=1.0, dt=0.0):
    return TorusPoint(x.z1 * scale, x.z2 * scale, x.t + dt)


def denom_product(eps: float, tau, z1, z2, t, terms: int = 80) -> complex:
    """Untwisted (super)denominator from its infinite product (rho vanishes and sdim is zero)."""
    q = ex(tau)
    s = -1 if eps else 1
    out = ex(t)
    qn = 1.0
    for _ in range(terms):
        qn1 = qn * q
        out *= (1 - qn1) ** 2 * (1 - ex(z1 + z2) * qn) * (1 - ex(-z1 - z2) * qn1)
        out /= (1 - s * ex(z1) * qn) * (1 - s * ex(-z1) * qn1) * (1 - s * ex(z2) * qn) * (1 - s * ex(-z2) * qn1)
        qn = qn1
    return out


def denom_product_twisted(sector: Sector, twist: Twist, tau, z1, z2, t) -> complex:
    eps = sector.eps
    if sector.epsilon_prime == 0:
        return denom_product(eps, tau, z1, z2, t)
    if twist is Twist.XI:
        return denom_product(eps, tau, z1 + tau / 2, z2 + tau / 2, t + (z1 + z2) / 2 + tau / 4)
    return denom_product(eps, tau, z1 + tau / 2, z2 - tau / 2, t + (z2 - z1) / 2 - tau / 4)


@identity("SL21-DEN-PROD", "theta-quotient denominators agree with the infinite products, both twists, all sectors",
          default_tol=1e-10)
def _den_prod(p, x, pol, c):
    pt = _pt(x)
    lhs, rhs = [], []
    for tw in TWISTS:
        for s in Sector.all():
            lhs.append(denom_sl21(s, x.tau, pt, pol, tw))
            rhs.append(denom_product_twisted(s, tw, x.tau, x.z1, x.z2, x.t))
    return lhs, rhs


@identity("SL21-DEN-S", "denominators under S swap eps and eps' with factor (-1)^{4 eps eps'} tau e(z1 z2/tau)",
          default_tol=1e-9, consts={"i_power": 0})
def _den_s(p, x, pol, c):
    tau = x.tau
    pt, spt = _pt(x), _pt(x, 1 / tau)
    lhs, rhs = [], []
    for tw in TWISTS:
        for s in Sector.all():
            sign = -1 if 4 * s.epsilon * s.epsilon_prime == 1 else 1
            lhs.append(denom_sl21(s, -1 / tau, spt, pol, tw))
            rhs.append(1j ** c["i_power"] * sign * tau * ex(x.z1 * x.z2 / tau) * denom_sl21(s.swapped(), tau, pt, pol, tw))
    return lhs, rhs


@identity("SL21-DEN-T", "denominators under T: phase e(+-eps'/2) (sign by twist) and eps -> |eps - eps'|",
          default_tol=1e-9)
def _den_t(p, x, pol, c):
    pt = _pt(x)
    lhs, rhs = [], []
    for tw in TWISTS:
        sgn = 1 if tw is Twist.XI else -1
        for s in Sector.all():
            target = Sector(abs(s.epsilon - s.epsilon_prime), s.epsilon_prime)
            lhs.append(denom_sl21(s, x.tau + 1, pt, pol, tw))
            rhs.append(ex(sgn * s.eps_p / 2) * denom_sl21(target, x.tau, pt, pol, tw))
    return lhs, rhs


def _window(M, eps):
    return [a + float(eps) for a in range(M)]


@identity("T7.1-S", "completed numerators under S: finite Fourier transform over the (eps + Z/M)^2 window",
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=SL21_GRID, constraint=coprime_level,
          default_tol=1e-8, consts={"w": 0})
def _t71s(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    w = m + 1 + c["w"]
    pt, spt = _pt(x), _pt(x, 1 / tau)
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        basis = {(a, b): psi(M, m, ep, a, b, e, tau, pt, pol) for a in _window(M, e) for b in _window(M, e)}
        pref = tau / M * ex(w * x.z1 * x.z2 / (M * tau))
        for j in _window(M, ep):
            for k in _window(M, ep):
                lhs.append(psi(M, m, e, j, k, ep, -1 / tau, spt, pol))
                rhs.append(pref * sum(ex(-w * (a * k + b * j) / M) * v for (a, b), v in basis.items()))
    return lhs, rhs


@identity("T7.1-T", "completed numerators under T: phase e((m+1)jk/M) and eps -> eps + eps' mod 1",
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=SL21_GRID, constraint=coprime_level,
          default_tol=1e-8, consts={"w": 0})
def _t71t(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    w = m + 1 + c["w"]
    pt = _pt(x)
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        for j in _window(M, ep):
            for k in _window(M, ep):
                lhs.append(psi(M, m, e, j, k, ep, tau + 1, pt, pol))
                rhs.append(ex(w * j * k / M) * psi(M, m, (e + ep) % 1, j, k, ep, tau, pt, pol))
    return lhs, rhs


@identity("T7.3-S", "modified admissible characters under S: (+-1/M) Fourier sum over the dual sector",
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=SL21_GRID, constraint=coprime_level,
          default_tol=1e-6, consts={"w": 0, "sign": 0})
def _t73s(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    w = m + 1 + c["w"]
    pt, spt = _pt(x), _pt(x, 1 / tau, -x.z1 * x.z2 / tau)
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        sign = (-1 if 4 * e * ep == 1 else 1) * (-1) ** c["sign"]
        dual = s.swapped()
        basis = {(a, b): char_tilde_sl21(SL21Label(M, m, a, b, dual), tau, pt, pol)
                 for a in _window(M, e) for b in _window(M, e)}
        for j in _window(M, ep):
            for k in _window(M, ep):
                lhs.append(char_tilde_sl21(SL21Label(M, m, j, k, s), -1 / tau, spt, pol))
                rhs.append(sign / M * sum(ex(-w * (a * k + b * j) / M) * v for (a, b), v in basis.items()))
    return lhs, rhs


@identity("T7.3-T", "modified admissible characters under T: phase e((m+1)jk/M - eps'/2), eps -> |eps - eps'|",
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=SL21_GRID, constraint=coprime_level,
          default_tol=1e-6, consts={"w": 0})
def _t73t(p, x, pol, c):
    M, m, tau = p.M, p.m, x.tau
    w = m + 1 + c["w"]
    pt = _pt(x)
    lhs, rhs = [], []
    for s in Sector.all():
        e, ep = s.epsilon, s.epsilon_prime
        target = Sector(abs(e - ep), ep)
        for j in _window(M, ep):
            for k in _window(M, ep):
                lhs.append(char_tilde_sl21(SL21Label(M, m, j, k, s), tau + 1, pt, pol))
                rhs.append(ex(w * j * k / M - float(ep) / 2) * char_tilde_sl21(SL21Label(M, m, j, k, target), tau, pt, pol))
    return lhs, rhs


@identity("R7.4", "level-zero numerator equals the untwisted superdenominator (bilateral summation)",
          default_tol=1e-10)
def _r74(p, x, pol, c):
    pt = _pt(x)
    return phi(0, x.tau, pt, pol), denom_sl21(Sector(0, 0), x.tau, pt, pol)


@identity("R7.4-CHAR", "boundary-level characters as a quotient of superdenominators at M tau and tau",
          params={"M": lambda v: isinstance(v, int) and 1 <= v <= 8}, defaults={"M": 3},
          grid=[{"M": 2}, {"M": 3}, {"M": 5}], default_tol=1e-10)
def _r74_char(p, x, pol, c):
    M, tau = p.M, x.tau
    pt = _pt(x)
    lhs, rhs = [], []
    for s in Sector.all():
        e = s.eps
        den = denom_sl21(s, tau, pt, pol)
        for j in _window(M, s.epsilon_prime):
            for k in _window(M, s.epsilon_prime):
                lhs.append(char_tilde_sl21(SL21Label(M, 0, j, k, s), tau, pt, pol))
                inner = TorusPoint(x.z1 + j * tau + e, x.z2 + k * tau + e, x.t / M)
                rhs.append(ex(j * k * tau / M + (k * x.z1 + j * x.z2) / M) * denom_sl21(Sector(0, 0), M * tau, inner, pol) / den)
    return lhs, rhs
