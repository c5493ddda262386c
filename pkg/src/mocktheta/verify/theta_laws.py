"""Registered laws for classical theta functions, eta and the rank-two mock function."""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..numerics import TWO_PI_I, principal_sqrt
from ..theta import eta, jacobi_theta, jacobi_theta_product, mock_rank2, mock_rank2_s, theta_jm
from .core import draw_tau, draw_z, identity

KINDS = ("00", "01", "10", "11")
DEGREES = (1, 2, 3, 4, 5)


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def _degree(k):
    return isinstance(k, int) and 1 <= k <= 12


@identity(
    "A-ELL",
    "degree-k theta: shift z by n*tau relabels j -> j + k n with a Gaussian factor",
    params={"k": _degree},
    defaults={"k": 2},
    grid=[{"k": k} for k in (1, 2, 3, 5)],
    default_tol=1e-10,
    consts={"k": 0},
)
def _a_ell(p, x, pol, c):
    k = p.k
    lhs, rhs = [], []
    for j in range(2 * k):
        for n in (-2, -1, 1, 2):
            lhs.append(theta_jm((j, k), x.tau, x.z1 + n * x.tau, x.t, pol))
            kk = k + c["k"]
            rhs.append(ex(-kk * n * n * x.tau / 4 - kk * n * x.z1 / 2) * theta_jm((j + k * n, k), x.tau, x.z1, x.t, pol))
    return lhs, rhs


@identity(
    "A-S",
    "degree-k theta under tau -> -1/tau is a finite Fourier transform in j",
    params={"k": _degree},
    defaults={"k": 2},
    grid=[{"k": k} for k in (1, 2, 3, 5)],
    default_tol=1e-9,
    consts={"k": 0},
)
def _a_s(p, x, pol, c):
    k, tau, z, t = p.k, x.tau, x.z1, x.t
    basis = [theta_jm((jp, k), tau, z, t, pol) for jp in range(2 * k)]
    pref = principal_sqrt(-1j * tau / (2 * (k + c["k"])))
    lhs, rhs = [], []
    for j in range(2 * k):
        lhs.append(theta_jm((j, k), -1 / tau, z / tau, t - z * z / (4 * tau), pol))
        rhs.append(pref * sum(cmath.exp(-1j * math.pi * j * jp / k) * b for jp, b in enumerate(basis)))
    return lhs, rhs


@identity(
    "A-T",
    "degree-k theta under tau -> tau+1 picks up exp(pi i j^2 / 2k)",
    params={"k": _degree},
    defaults={"k": 2},
    grid=[{"k": k} for k in (1, 2, 3, 5)],
    default_tol=1e-10,
)
def _a_t(p, x, pol, c):
    k = p.k
    lhs = [theta_jm((j, k), x.tau + 1, x.z1, x.t, pol) for j in range(2 * k)]
    rhs = [cmath.exp(1j * math.pi * j * j / (2 * k)) * theta_jm((j, k), x.tau, x.z1, x.t, pol) for j in range(2 * k)]
    return lhs, rhs


@identity(
    "JAC-ELL",
    "Jacobi thetas under z -> z + n tau",
    args=("tau", "z1"),
    default_tol=1e-10,
)
def _jac_ell(p, x, pol, c):
    lhs, rhs = [], []
    for kind in KINDS:
        b = int(kind[1])
        for n in (-2, -1, 1, 2):
            lhs.append(jacobi_theta(kind, x.tau, x.z1 + n * x.tau, pol))
            rhs.append((-1) ** (b * n) * ex(-n * n * x.tau / 2 - n * x.z1) * jacobi_theta(kind, x.tau, x.z1, pol))
    return lhs, rhs


@identity(
    "JAC-ST",
    "Jacobi thetas under S (characteristics swap) and under T",
    args=("tau", "z1"),
    default_tol=1e-9,
)
def _jac_st(p, x, pol, c):
    tau, z = x.tau, x.z1
    lhs, rhs = [], []
    root = principal_sqrt(-1j * tau)
    for kind in KINDS:
        a, b = int(kind[0]), int(kind[1])
        lhs.append(jacobi_theta(kind, -1 / tau, z / tau, pol))
        rhs.append((-1j) ** (a * b) * root * cmath.exp(1j * math.pi * z * z / tau) * jacobi_theta(f"{b}{a}", tau, z, pol))
    lhs += [jacobi_theta("00", tau + 1, z, pol), jacobi_theta("01", tau + 1, z, pol)]
    rhs += [jacobi_theta("01", tau, z, pol), jacobi_theta("00", tau, z, pol)]
    for kind in ("10", "11"):
        lhs.append(jacobi_theta(kind, tau + 1, z, pol))
        rhs.append(cmath.exp(1j * math.pi / 4) * jacobi_theta(kind, tau, z, pol))
    return lhs, rhs


@identity(
    "JTP",
    "Jacobi thetas from the theta series agree with their triple products",
    args=("tau", "z1"),
    default_tol=1e-10,
)
def _jtp(p, x, pol, c):
    return (
        [jacobi_theta(k, x.tau, x.z1, pol) for k in KINDS],
        [jacobi_theta_product(k, x.tau, x.z1, pol) for k in KINDS],
    )


@identity("ETA-ST", "eta under S and T", args=("tau",), default_tol=1e-9, consts={"twelfth": 0})
def _eta_st(p, x, pol, c):
    tau = x.tau
    e0 = eta(tau, pol)
    return (
        [eta(-1 / tau, pol), eta(tau + 1, pol)],
        [principal_sqrt(-1j * tau) * e0, cmath.exp(1j * math.pi / (12 + c["twelfth"])) * e0],
    )


@identity(
    "THETA-S-DEG",
    "degree-m theta at t = 0 under S with the Gaussian factor exp(pi i m z^2 / 2 tau)",
    args=("tau", "z1"),
    params={"m": _degree},
    defaults={"m": 3},
    grid=[{"m": m} for m in (1, 2, 3, 5)],
    default_tol=1e-9,
)
def _theta_s_deg(p, x, pol, c):
    m, tau, z = p.m, x.tau, x.z1
    basis = [theta_jm((n, m), tau, z, 0j, pol) for n in range(2 * m)]
    pref = cmath.exp(1j * math.pi * m * z * z / (2 * tau)) * principal_sqrt(-1j * tau / (2 * m))
    lhs = [theta_jm((j, m), -1 / tau, z / tau, 0j, pol) for j in range(2 * m)]
    rhs = [pref * sum(cmath.exp(-1j * math.pi * n * j / m) * b for n, b in enumerate(basis)) for j in range(2 * m)]
    return lhs, rhs


HOLO_RADIUS = 0.12
HOLO_NODES = 64


def _holo_sampler(rng, params):
    tau = draw_tau(rng)
    a = int(rng.integers(-1, 2))
    n = int(rng.integers(-1, 2))
    return {"tau": tau, "pole": n - a * tau, "z2": draw_z(rng), "t": draw_z(rng)}


def rank2_defect(K, s, tau, z1, z2, t, policy):
    """The mock function minus its S-transform."""
    return mock_rank2(K, s, tau, z1, z2, t, policy) - mock_rank2_s(K, s, tau, z1, z2, t, policy)


def circle_residue(f, centre, radius=HOLO_RADIUS, nodes=HOLO_NODES) -> complex:
    """(1/2 pi i) times the contour integral of f around a circle (trapezoid rule)."""
    theta = 2 * math.pi * np.arange(nodes) / nodes
    pts = centre + radius * np.exp(1j * theta)
    vals = np.array([f(complex(z)) for z in pts])
    return complex(np.sum(vals * (pts - centre)) / nodes)


@identity(
    "P4.7-HOLO",
    "rank-two mock function and its S-transform have equal residues at every pole, so their difference is holomorphic",
    args=("tau", "pole", "z2", "t"),
    params={"K": lambda v: isinstance(v, int) and v >= 1, "s": lambda v: isinstance(v, int) and v >= 1},
    defaults={"K": 1, "s": 2},
    grid=[{"K": 1, "s": 2}, {"K": 2, "s": 4}, {"K": 3, "s": 6}],
    default_tol=1e-9,
    sampler=_holo_sampler,
    sample_guard=1e-3,
)
def _p47(p, x, pol, c):
    f = lambda z1: mock_rank2(p.K, p.s, x.tau, z1, x.z2, x.t, pol)  # noqa: E731
    g = lambda z1: mock_rank2_s(p.K, p.s, x.tau, z1, x.z2, x.t, pol)  # noqa: E731
    return circle_residue(f, x.pole), circle_residue(g, x.pole)
