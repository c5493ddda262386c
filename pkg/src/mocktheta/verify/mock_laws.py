"""Registered laws for the level-m mock functions, R, h, G and the completions."""

from __future__ import annotations

import cmath
import math

from ..mock import (
    TorusPoint,
    g_direct,
    g_via_h,
    h_integral,
    h_zw,
    mu,
    phi,
    phi_add,
    phi_add_uv,
    phi_tilde,
    phi_tilde_uv,
    phi_uv,
    r_zw,
    s_transform_uv,
    theta_odd_diff,
    zwegers_R,
)
from ..numerics import TWO_PI_I, principal_sqrt
from ..theta import jacobi_theta
from .core import QUADRATURE_TOL, draw_real, draw_tau, draw_z, identity


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def _m(lo):
    return lambda v: isinstance(v, int) and lo <= v <= 8


M_ALL = [{"m": m} for m in (0, 1, 2, 3)]
M_POS = [{"m": m} for m in (1, 2, 3)]
M_QUAD = [{"m": m} for m in (1, 2)]

Z_ARGS = ("tau", "z1", "z2", "t")
UV_ARGS = ("tau", "u", "v", "t")


def P(m, tau, z1, z2, t, pol):
    return phi(m, tau, TorusPoint(z1, z2, t), pol)


def PT(m, tau, z1, z2, t, pol):
    return phi_tilde(m, tau, TorusPoint(z1, z2, t), pol)


def odd_theta_sum(m, tau, u, v, t, pol, upper, coeff):
    """e(w t) * sum_{j=1}^{upper} coeff(j) (Theta_{j,w} - Theta_{-j,w})(tau, 2u), w = m+1."""
    w = m + 1
    total = 0j
    for j in range(1, upper + 1):
        if j % w == 0:
            continue
        total += coeff(j) * theta_odd_diff(j, w, tau, 2 * u, 0j, pol)
    return ex(w * t) * total


# ---- level-m numerator in (z1, z2) coordinates


@identity("L5.1a", "numerator is periodic under integer shifts of z1, z2", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l51a(p, x, pol, c):
    base = P(p.m, x.tau, x.z1, x.z2, x.t, pol)
    shifts = ((1, 0), (0, 1), (1, -1), (-2, 3))
    return [P(p.m, x.tau, x.z1 + a, x.z2 + b, x.t, pol) for a, b in shifts], [base] * len(shifts)


@identity("L5.1b", "numerator is odd under (z1, z2) -> (-z1, -z2)", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l51b(p, x, pol, c):
    return P(p.m, x.tau, -x.z1, -x.z2, x.t, pol), -P(p.m, x.tau, x.z1, x.z2, x.t, pol)


@identity("L5.1c", "numerator is symmetric in z1 <-> z2", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l51c(p, x, pol, c):
    return P(p.m, x.tau, x.z2, x.z1, x.t, pol), P(p.m, x.tau, x.z1, x.z2, x.t, pol)


@identity("L5.1d", "numerator under the diagonal shift (z1, z2) -> (z1 + tau, z2 + tau)", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL, consts={"w": 0})
def _l51d(p, x, pol, c):
    w = p.m + 1 + c["w"]
    return (
        P(p.m, x.tau, x.z1 + x.tau, x.z2 + x.tau, x.t, pol),
        ex(-w * x.tau - w * (x.z1 + x.z2)) * P(p.m, x.tau, x.z1, x.z2, x.t, pol),
    )


@identity("L5.1e", "numerator minus its z2 -> z2 + tau translate is a finite odd theta sum", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l51e(p, x, pol, c):
    m, w = p.m, p.m + 1
    lhs = P(m, x.tau, x.z1, x.z2, x.t, pol) - ex(w * x.z1) * P(m, x.tau, x.z1, x.z2 + x.tau, x.t, pol)
    rhs = ex(w * x.t) * sum(
        ex(j * (x.z1 - x.z2) / 2 - j * j * x.tau / (4 * w)) * theta_odd_diff(j, w, x.tau, x.z1 + x.z2, 0j, pol)
        for j in range(1, m + 1)
    )
    return lhs, rhs


# ---- the same function in (u, v) coordinates


def U(m, x, pol, u=None, v=None, t=None, tau=None):
    return phi_uv(m, x.tau if tau is None else tau, x.u if u is None else u, x.v if v is None else v,
                  x.t if t is None else t, pol)


HALF_SHIFTS = ((0.5, 0.5), (0.5, -0.5), (1, 0), (0, 1), (-1.5, 0.5))


@identity("L5.3a", "(u, v) form is invariant under half-period shifts with integral sum", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l53a(p, x, pol, c):
    base = U(p.m, x, pol)
    return [U(p.m, x, pol, u=x.u + a, v=x.v + b) for a, b in HALF_SHIFTS], [base] * len(HALF_SHIFTS)


@identity("L5.3b", "(u, v) form is odd in u", args=UV_ARGS, params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l53b(p, x, pol, c):
    return U(p.m, x, pol, u=-x.u), -U(p.m, x, pol)


@identity("L5.3c", "(u, v) form is even in v", args=UV_ARGS, params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l53c(p, x, pol, c):
    return U(p.m, x, pol, v=-x.v), U(p.m, x, pol)


@identity("L5.3d", "(u, v) form under u -> u +- tau", args=UV_ARGS, params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l53d(p, x, pol, c):
    w = p.m + 1
    base = U(p.m, x, pol)
    return (
        [U(p.m, x, pol, u=x.u + x.tau), U(p.m, x, pol, u=x.u - x.tau)],
        [ex(-w * x.tau - 2 * w * x.u) * base, ex(-w * x.tau + 2 * w * x.u) * base],
    )


@identity("L5.3e", "(u, v) form minus its half-period translate is a finite odd theta sum", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _l53e(p, x, pol, c):
    m, w = p.m, p.m + 1
    lhs = U(m, x, pol) - ex(w * (x.v - x.u)) * U(m, x, pol, u=x.u - x.tau / 2, v=x.v - x.tau / 2)
    rhs = -odd_theta_sum(m, x.tau, x.u, x.v, x.t, pol, m, lambda j: ex(j * x.v - j * j * x.tau / (4 * w)))
    return lhs, rhs


@identity("E5.5", "(u, v) form under v -> v - tau: the full-period variant of the previous law", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_ALL)
def _e55(p, x, pol, c):
    m, w = p.m, p.m + 1
    lhs = U(m, x, pol) - ex(w * (2 * x.v - x.tau)) * U(m, x, pol, v=x.v - x.tau)
    rhs = -odd_theta_sum(m, x.tau, x.u, x.v, x.t, pol, 2 * m + 1, lambda j: ex(j * x.v - j * j * x.tau / (4 * w)))
    return lhs, rhs


# ---- the holomorphic S-defect G


def _g_pair(m, tau, u, v, t, pol):
    return g_direct(m, tau, u, v, t, pol), g_via_h(m, tau, u, v, t, pol)


@identity("P5.4a", "G jumps under v -> v + 1 by a Gaussian theta combination (both G routes)", args=UV_ARGS,
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=QUADRATURE_TOL, quadrature=True)
def _p54a(p, x, pol, c):
    m, w, tau, u, v, t = p.m, p.m + 1, x.tau, x.u, x.v, x.t
    jump = []
    for route in (g_direct, g_via_h):
        jump.append(route(m, tau, u, v + 1, t, pol) - route(m, tau, u, v, t, pol))
    total = 0j
    for k in range(2 * w):
        th = jacobi_theta_k(k, w, tau, u, pol)
        if th == 0:
            continue
        coeff = sum(ex(w * (v + j / (2 * w)) ** 2 / tau) * math.sin(math.pi * j * k / w) for j in range(1, 2 * w))
        total += coeff * th
    rhs = ex(w * t) * math.sqrt(2 / w) * principal_sqrt(-1j * tau) ** -1 * total
    return jump, [rhs, rhs]


def jacobi_theta_k(k, w, tau, u, pol):
    from ..theta import theta_jm

    return theta_jm((k, w), tau, 2 * u, 0j, pol)


@identity("P5.4b", "G under v -> v - tau (both G routes)", args=UV_ARGS,
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=QUADRATURE_TOL, quadrature=True)
def _p54b(p, x, pol, c):
    m, w, tau, u, v, t = p.m, p.m + 1, x.tau, x.u, x.v, x.t
    lhs = []
    for route in (g_direct, g_via_h):
        lhs.append(route(m, tau, u, v, t, pol) - ex(w * (2 * v - tau)) * route(m, tau, u, v - tau, t, pol))
    rhs = -odd_theta_sum(m, tau, u, v, t, pol, 2 * m + 1, lambda j: ex(j * v - j * j * tau / (4 * w)))
    return lhs, [rhs, rhs]


@identity("T5.5", "G from its definition equals the h-integral expansion", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_QUAD, default_tol=QUADRATURE_TOL, quadrature=True)
def _t55(p, x, pol, c):
    return _g_pair(p.m, x.tau, x.u, x.v, x.t, pol)


def a_coef(m, j, tau, v, pol):
    """h_{m+1; 2m+2-j}, the coefficient family of the G expansion."""
    return h_zw(m + 1, 2 * m + 2 - j, tau, v, pol)


@identity("E5.10", "h-coefficients jump under v -> v + 1 by a Gaussian sum", args=("tau", "v"),
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=1e-8, quadrature=True)
def _e510(p, x, pol, c):
    m, w, tau, v = p.m, p.m + 1, x.tau, x.v
    lhs, rhs = [], []
    pref = 1j / math.sqrt(2 * w) * principal_sqrt(-1j * tau) ** -1
    for j in range(1, 2 * w):
        lhs.append(a_coef(m, j, tau, v + 1, pol) - a_coef(m, j, tau, v, pol))
        rhs.append(pref * sum(
            cmath.exp(-1j * math.pi * j * k / w) * ex(w * (v + k / (2 * w)) ** 2 / tau) for k in range(1, 2 * w + 1)
        ))
    return lhs, rhs


@identity("E5.11", "h-coefficients under v -> v - tau", args=("tau", "v"),
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=1e-8, quadrature=True)
def _e511(p, x, pol, c):
    m, w, tau, v = p.m, p.m + 1, x.tau, x.v
    lhs, rhs = [], []
    for j in range(1, 2 * w):
        lhs.append(a_coef(m, j, tau, v, pol) - ex(w * (2 * v - tau)) * a_coef(m, j, tau, v - tau, pol))
        rhs.append(-ex(j * v - j * j * tau / (4 * w)))
    return lhs, rhs


def _rank(lo=1):
    return lambda v: isinstance(v, int) and lo <= v <= 8


R_GRID = [{"m": m} for m in (1, 2, 3)]


@identity("E5.13", "R plus its S-transform equals twice h", args=("tau", "v"),
          params={"m": _rank()}, defaults={"m": 2}, grid=R_GRID, default_tol=QUADRATURE_TOL, quadrature=True,
          consts={"m": 0})
def _e513(p, x, pol, c):
    m, tau, v = p.m, x.tau, x.v
    mm = m + c["m"]
    pref = 1j / principal_sqrt(-2j * m * tau) * ex(m * v * v / tau)
    rs = [r_zw(m, k, -1 / tau, v / tau, pol) for k in range(2 * m)]
    lhs, rhs = [], []
    for j in range(2 * m):
        lhs.append(r_zw(m, j, tau, v, pol) + pref * sum(cmath.exp(-1j * math.pi * j * k / mm) * r for k, r in enumerate(rs)))
        rhs.append(2 * h_zw(m, j, tau, v, pol))
    return lhs, rhs


@identity("E5.14", "R reflection: R_j(-v) + R_{-j}(v) = 2 delta_{j,0}", args=("tau", "v"),
          params={"m": _rank()}, defaults={"m": 2}, grid=R_GRID)
def _e514(p, x, pol, c):
    m = p.m
    lhs = [r_zw(m, j, x.tau, -x.v, pol) + r_zw(m, -j, x.tau, x.v, pol) for j in range(2 * m)]
    rhs = [2.0 if j == 0 else 0.0 for j in range(2 * m)]
    return lhs, rhs


@identity("L5.7a", "R under v -> v + 1/2", args=("tau", "v"), params={"m": _rank()}, defaults={"m": 2}, grid=R_GRID)
def _l57a(p, x, pol, c):
    m = p.m
    return (
        [r_zw(m, j, x.tau, x.v + 0.5, pol) for j in range(2 * m)],
        [(-1) ** j * r_zw(m, j, x.tau, x.v, pol) for j in range(2 * m)],
    )


@identity("L5.7b", "R under v -> v - tau", args=("tau", "v"), params={"m": _rank()}, defaults={"m": 2}, grid=R_GRID)
def _l57b(p, x, pol, c):
    m, tau, v = p.m, x.tau, x.v
    lhs = [r_zw(m, j, tau, v, pol) - ex(m * (2 * v - tau)) * r_zw(m, j, tau, v - tau, pol) for j in range(2 * m)]
    # the constant term arises from sign(n + 1/2) - sign(n + 2m + 1/2) = -2 at n = j - 2m
    rhs = [-2 * ex(-(2 * m - j) ** 2 * tau / (4 * m) + (2 * m - j) * v) for j in range(2 * m)]
    return lhs, rhs


@identity("R5.6a", "h-integrals at indices j and j + 2m differ by a single Gaussian", args=("tau", "v"),
          params={"m": _rank()}, defaults={"m": 2}, grid=R_GRID, default_tol=QUADRATURE_TOL, quadrature=True)
def _r56a(p, x, pol, c):
    m, tau, v = p.m, x.tau, x.v
    lhs = [h_integral(m, j, tau, v, pol) - h_integral(m, j + 2 * m, tau, v, pol) for j in range(2 * m)]
    rhs = [ex(-j * j * tau / (4 * m) - j * v) for j in range(2 * m)]
    return lhs, rhs


# ---- the correction and the completion


def A(m, x, pol, u=None, v=None, t=None):
    return phi_add_uv(m, x.tau, x.u if u is None else u, x.v if v is None else v, x.t if t is None else t, pol)


@identity("L5.8a", "correction minus its S-transform equals -G", args=UV_ARGS,
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=QUADRATURE_TOL, quadrature=True)
def _l58a(p, x, pol, c):
    m = p.m
    lhs = A(m, x, pol) - s_transform_uv(phi_add_uv, m, x.tau, x.u, x.v, x.t, pol)
    return lhs, -g_via_h(m, x.tau, x.u, x.v, x.t, pol)


@identity("L5.8b", "correction is invariant under half-period shifts with integral sum", args=UV_ARGS,
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_POS)
def _l58b(p, x, pol, c):
    base = A(p.m, x, pol)
    return [A(p.m, x, pol, u=x.u + a, v=x.v + b) for a, b in HALF_SHIFTS], [base] * len(HALF_SHIFTS)


@identity("L5.8c", "correction under u -> u + tau", args=UV_ARGS, params={"m": _m(1)}, defaults={"m": 1}, grid=M_POS)
def _l58c(p, x, pol, c):
    w = p.m + 1
    return A(p.m, x, pol, u=x.u + x.tau), ex(-w * x.tau - 2 * w * x.u) * A(p.m, x, pol)


@identity("L5.8d", "correction under v -> v - tau", args=UV_ARGS, params={"m": _m(1)}, defaults={"m": 1}, grid=M_POS)
def _l58d(p, x, pol, c):
    m, w = p.m, p.m + 1
    lhs = A(m, x, pol) - ex(w * (2 * x.v - x.tau)) * A(m, x, pol, v=x.v - x.tau)
    rhs = odd_theta_sum(m, x.tau, x.u, x.v, x.t, pol, 2 * m + 1, lambda j: ex(j * x.v - j * j * x.tau / (4 * w)))
    return lhs, rhs


def TU(m, x, pol, tau=None, u=None, v=None, t=None):
    return phi_tilde_uv(m, x.tau if tau is None else tau, x.u if u is None else u, x.v if v is None else v,
                        x.t if t is None else t, pol)


@identity("T5.9a", "completed (u, v) form is S-covariant with weight one", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _t59a(p, x, pol, c):
    tau, u, v, t = x.tau, x.u, x.v, x.t
    return TU(p.m, x, pol, tau=-1 / tau, u=u / tau, v=v / tau, t=t - (u * u - v * v) / tau), tau * TU(p.m, x, pol)


@identity("T5.9b", "completed (u, v) form is invariant under half-period shifts with integral sum", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _t59b(p, x, pol, c):
    base = TU(p.m, x, pol)
    return [TU(p.m, x, pol, u=x.u + a, v=x.v + b) for a, b in HALF_SHIFTS], [base] * len(HALF_SHIFTS)


@identity("T5.9c", "completed (u, v) form is even in v and odd in u", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _t59c(p, x, pol, c):
    base = TU(p.m, x, pol)
    return [TU(p.m, x, pol, v=-x.v), TU(p.m, x, pol, u=-x.u)], [base, -base]


@identity("T5.9d", "completed (u, v) form is T-invariant", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _t59d(p, x, pol, c):
    return TU(p.m, x, pol, tau=x.tau + 1), TU(p.m, x, pol)


HALF_LATTICE = ((0.5, 0.5), (0.5, -0.5), (1, 0), (0, 1), (-1, 0))


@identity("T5.9e", "completed (u, v) form under (u, v) -> (u + a tau, v + b tau)", args=UV_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _t59e(p, x, pol, c):
    w, tau, u, v = p.m + 1, x.tau, x.u, x.v
    base = TU(p.m, x, pol)
    lhs = [TU(p.m, x, pol, u=u + a * tau, v=v + b * tau) for a, b in HALF_LATTICE]
    rhs = [ex(w * (b * b - a * a) * tau + 2 * w * (-a * u + b * v)) * base for a, b in HALF_LATTICE]
    return lhs, rhs


@identity("C5.10a", "completed numerator is S-covariant with weight one", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _c510a(p, x, pol, c):
    tau, z1, z2, t = x.tau, x.z1, x.z2, x.t
    return PT(p.m, -1 / tau, z1 / tau, z2 / tau, t - z1 * z2 / tau, pol), tau * PT(p.m, tau, z1, z2, t, pol)


@identity("C5.10b", "completed numerator is periodic under integer shifts", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _c510b(p, x, pol, c):
    base = PT(p.m, x.tau, x.z1, x.z2, x.t, pol)
    shifts = ((1, 0), (0, 1), (1, -1), (-2, 3))
    return [PT(p.m, x.tau, x.z1 + a, x.z2 + b, x.t, pol) for a, b in shifts], [base] * len(shifts)


@identity("C5.10c", "completed numerator is odd and symmetric", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _c510c(p, x, pol, c):
    base = PT(p.m, x.tau, x.z1, x.z2, x.t, pol)
    return [PT(p.m, x.tau, -x.z1, -x.z2, x.t, pol), PT(p.m, x.tau, x.z2, x.z1, x.t, pol)], [-base, base]


@identity("C5.10d", "completed numerator is T-invariant", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS)
def _c510d(p, x, pol, c):
    return PT(p.m, x.tau + 1, x.z1, x.z2, x.t, pol), PT(p.m, x.tau, x.z1, x.z2, x.t, pol)


LATTICE = ((1, 0), (0, 1), (1, 1), (-1, 2))


@identity("C5.10e", "completed numerator under (z1, z2) -> (z1 + j tau, z2 + k tau)", args=Z_ARGS,
          params={"m": _m(0)}, defaults={"m": 1}, grid=M_POS, consts={"w": 0})
def _c510e(p, x, pol, c):
    w, tau, z1, z2 = p.m + 1 + c["w"], x.tau, x.z1, x.z2
    base = PT(p.m, tau, z1, z2, x.t, pol)
    lhs = [PT(p.m, tau, z1 + j * tau, z2 + k * tau, x.t, pol) for j, k in LATTICE]
    rhs = [ex(-w * j * k * tau - w * (k * z1 + j * z2)) * base for j, k in LATTICE]
    return lhs, rhs


# ---- the level-one case and the Appell-Lerch sum


@identity("E5.16", "level-one numerator equals theta11(z1 + z2) times the Appell-Lerch sum",
          args=("tau", "z1", "z2"), default_tol=1e-9)
def _e516(p, x, pol, c):
    return P(1, x.tau, x.z1, x.z2, 0j, pol), jacobi_theta("11", x.tau, x.z1 + x.z2, pol) * mu(x.tau, x.z1, x.z2, pol)


@identity("E5.17", "level-one correction equals (i/2) R(z1 - z2) theta11(z1 + z2)",
          args=("tau", "z1", "z2"), default_tol=1e-9)
def _e517(p, x, pol, c):
    return (
        phi_add(1, x.tau, TorusPoint(x.z1, x.z2), pol),
        0.5j * zwegers_R(x.tau, x.z1 - x.z2, pol) * jacobi_theta("11", x.tau, x.z1 + x.z2, pol),
    )


@identity("E5.18", "level-one completion equals theta11(z1 + z2) times the completed Appell-Lerch sum",
          args=("tau", "z1", "z2"), default_tol=1e-9)
def _e518(p, x, pol, c):
    mu_t = mu(x.tau, x.z1, x.z2, pol) + 0.5j * zwegers_R(x.tau, x.z1 - x.z2, pol)
    return PT(1, x.tau, x.z1, x.z2, 0j, pol), jacobi_theta("11", x.tau, x.z1 + x.z2, pol) * mu_t


@identity("R5.6", "numerator minus half of G is S-invariant and has the shifted elliptic law", args=UV_ARGS,
          params={"m": _m(1)}, defaults={"m": 1}, grid=M_QUAD, default_tol=QUADRATURE_TOL, quadrature=True)
def _r56(p, x, pol, c):
    m, w, tau, u, v, t = p.m, p.m + 1, x.tau, x.u, x.v, x.t

    def half(mm, tt, uu, vv, ttt, pp):
        return phi_uv(mm, tt, uu, vv, ttt, pp) - 0.5 * g_via_h(mm, tt, uu, vv, ttt, pp)

    here = half(m, tau, u, v, t, pol)
    shifted = half(m, tau, u, v - tau, t, pol)
    corr = odd_theta_sum(m, tau, u, v, t, pol, 2 * m + 1, lambda j: ex(j * v - j * j * tau / (4 * w)))
    return (
        [s_transform_uv(half, m, tau, u, v, t, pol), here - ex(w * (2 * v - tau)) * shifted],
        [here, -0.5 * corr],
    )
