"""Laws relating the completed functions at tau/M to sums of values at M*tau."""

from __future__ import annotations

import cmath
import math

from ..mock import TorusPoint, offset_set, phi, phi_tilde, phi_tilde_uv, r_zw
from ..numerics import TWO_PI_I
from ..theta import theta_jm
from .core import QUADRATURE_TOL, TAU_RE, draw_z, identity


def ex(x):
    return cmath.exp(TWO_PI_I * x)


def _int(lo, hi=12):
    return lambda v: isinstance(v, int) and lo <= v <= hi


def coprime_level(p):
    """Reject M sharing a factor with 2m+2 (needed whenever m > 0)."""
    if p["m"] > 0 and math.gcd(p["M"], 2 * p["m"] + 2) != 1:
        return f"gcd(M, 2m+2) must be 1 for m > 0; got M={p['M']}, m={p['m']}"
    return None


def coprime_strict(p):
    if math.gcd(p["M"], 2 * p["m"] + 2) != 1:
        return f"gcd(M, 2m+2) must be 1; got M={p['M']}, m={p['m']}"
    return None


def low_tau_sampler(names):
    """tau with Im in [0.6, 0.8]: the offset prefactors grow like exp(2 pi (m+1) b^2 Im tau / M), and
    the corrected lemmas cancel them against explicit sign-flip terms."""

    def sample(rng, params):
        point = {"tau": complex(rng.uniform(*TAU_RE), rng.uniform(0.6, 0.8))}
        for name in names:
            point[name] = draw_z(rng)
        return point

    return sample


MM_GRID = [{"M": 3, "m": 1}, {"M": 5, "m": 1}, {"M": 5, "m": 2}]
MM_PARAMS = {"M": _int(1), "m": _int(0, 6)}
Z_ARGS = ("tau", "z1", "z2", "t")
UV_ARGS = ("tau", "u", "v", "t")


def PT(m, tau, z1, z2, t, pol):
    return phi_tilde(m, tau, TorusPoint(z1, z2, t), pol)


def P(m, tau, z1, z2, t, pol):
    return phi(m, tau, TorusPoint(z1, z2, t), pol)


def omega_reps(M):
    """Representatives (a, b) of the half-integral pairs modulo M, as (-(j+k)/2, (j-k)/2)."""
    return [(-(j + k) / 2, (j - k) / 2) for j in range(M) for k in range(M)]


@identity("T6.1a", "completed (u, v) form at tau/M equals its S-transform at -M/tau", args=UV_ARGS,
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=MM_GRID, constraint=coprime_level)
def _t61a(p, x, pol, c):
    m, M, tau, u, v, t = p.m, p.M, x.tau, x.u, x.v, x.t
    lhs = phi_tilde_uv(m, tau / M, u / M, v / M, t, pol)
    rhs = M / tau * phi_tilde_uv(m, -M / tau, u / tau, v / tau, t - (u * u - v * v) / (tau * M), pol)
    return lhs, rhs


@identity("T6.1b", "completed (u, v) form at tau/M as a sum over half-integral shifts modulo M", args=UV_ARGS,
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=MM_GRID, constraint=coprime_level, consts={"w": 0})
def _t61b(p, x, pol, c):
    m, M, tau, u, v, t = p.m, p.M, x.tau, x.u, x.v, x.t
    w = m + 1 + c["w"]
    lhs = phi_tilde_uv(m, tau / M, u / M, v / M, t, pol)
    rhs = sum(
        ex(w * (a * a - b * b) * tau / M + 2 * w * (a * u - b * v) / M)
        * phi_tilde_uv(m, M * tau, u + a * tau, v + b * tau, t, pol)
        for a, b in omega_reps(M)
    )
    return lhs, rhs


def _l62_pairs(M, m):
    if m == 0:
        # offsets modulo m+1 = 1: every residue 0..M-1, and 2b is replaced by b
        return [(a, a + b) for a in range(M) for b in range(M)]
    return [(a, a + 2 * b) for a in range(M) for b in offset_set(M, 2 * m + 2)]


def sign_mismatches(M, p, I):
    """Pairs (n', b), b in I, where n = n' M + b p and n' lie on opposite sides of -1/2."""
    bound = max(abs(b) for b in I) * p // M + 2
    out = []
    for b in I:
        for n_prime in range(-bound, bound + 1):
            n = n_prime * M + b * p
            if (n >= 0) != (n_prime >= 0):
                out.append((n_prime, b))
    return out


def _l62_half(m, M, tau, z1, z2, pol, mismatches):
    # sum over mismatched k = k' M + p b of (1[k >= 0] - 1[k' >= 0]) * sum_{j in Z} T(j, k), where
    # T(j, k) = e((m+1) j (z1+z2)/M + k z1/M) q^{((m+1) j^2 + j k)/M}
    w = m + 1
    total = 0j
    for k_prime, b in mismatches:
        k = k_prime * M + b * (2 * w)
        weight = (1 if k >= 0 else 0) - (1 if k_prime >= 0 else 0)
        jj = range(-40, 41)
        total += weight * sum(
            ex(w * j * (z1 + z2) / M + k * z1 / M + (w * j * j + j * k) * tau / M) for j in jj
        )
    return total


@identity("L6.2", "numerator at (tau/M, z/M) splits over 0 <= a < M and the offset set, up to a finite theta correction",
          args=Z_ARGS, params=MM_PARAMS, defaults={"M": 3, "m": 1},
          grid=[{"M": 3, "m": 1}, {"M": 2, "m": 0}, {"M": 3, "m": 0}, {"M": 4, "m": 0}],
          constraint=coprime_level, sampler=low_tau_sampler(("z1", "z2", "t")))
def _l62(p, x, pol, c):
    m, M, tau, z1, z2, t = p.m, p.M, x.tau, x.z1, x.z2, x.t
    w = m + 1
    lhs = P(m, tau / M, z1 / M, z2 / M, t, pol)
    rhs = sum(
        ex(w * (cc * z1 + a * z2) / M + w * a * cc * tau / M) * P(m, M * tau, z1 + a * tau, z2 + cc * tau, t, pol)
        for a, cc in _l62_pairs(M, m)
    )
    if m > 0:
        mism = sign_mismatches(M, 2 * w, offset_set(M, 2 * w))
        rhs += ex(w * t) * (_l62_half(m, M, tau, z1, z2, pol, mism) - _l62_half(m, M, tau, -z2, -z1, pol, mism))
    return lhs, rhs


def _reduce_index(j, M, p):
    """j0 with j - M j0 divisible by p."""
    return next(k for k in range(p) if (j - M * k) % p == 0)


R_SCALE_GRID = [{"M": 3, "m": 1}, {"M": 5, "m": 1}, {"M": 5, "m": 2}]


@identity("L6.3a", "R at (tau/M, v/M) as a sum over the offset set of R at M tau, plus finitely many sign-flip terms",
          args=("tau", "v"), params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=[{"M": 3, "m": 1}],
          constraint=coprime_strict, sampler=low_tau_sampler(("v",)))
def _l63a(p, x, pol, c):
    m, M, tau, v = p.m, p.M, x.tau, x.v
    w = m + 1
    I = offset_set(M, 2 * w)
    mism = sign_mismatches(M, 2 * w, I)
    lhs, rhs = [], []
    for j in range(2 * w):
        j0 = _reduce_index(j, M, 2 * w)
        lhs.append(r_zw(w, j, tau / M, v / M, pol))
        main = sum(ex(-w * b * b * tau / M - 2 * w * b * v / M) * r_zw(w, j0, M * tau, v + b * tau, pol) for b in I)
        # terms n = n' M + b p with n' = j0 (mod p) whose sign(n + 1/2) differs from sign(n' + 1/2)
        fix = 0j
        for n_prime, b in mism:
            if (n_prime - j0) % (2 * w):
                continue
            n = n_prime * M + b * 2 * w
            fix += 2 * (1 if n >= 0 else -1) * ex(-n * n * tau / (4 * w * M) - n * v / M)
        rhs.append(main + fix)
    return lhs, rhs


@identity("L6.3b", "degree-(m+1) theta at (tau/M, 2u/M) as a sum over the offset set", args=("tau", "u"),
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=R_SCALE_GRID, constraint=coprime_strict)
def _l63b(p, x, pol, c):
    m, M, tau, u = p.m, p.M, x.tau, x.u
    w = m + 1
    I = offset_set(M, 2 * w)
    lhs, rhs = [], []
    for j in range(2 * w):
        j0 = _reduce_index(j, M, 2 * w)
        lhs.append(theta_jm((j, w), tau / M, 2 * u / M, 0j, pol))
        rhs.append(sum(ex(w * a * a * tau / M + 2 * w * a * u / M) * theta_jm((j0, w), M * tau, 2 * u + 2 * a * tau, 0j, pol)
                       for a in I))
    return lhs, rhs


def lattice_sum(f, m, M, tau, z1, z2, t, pol, w):
    """sum_{j,k mod M} q^{w jk/M} e(w (k z1 + j z2)/M) f(M tau, z1 + j tau, z2 + k tau, t)."""
    return sum(
        ex(w * j * k * tau / M + w * (k * z1 + j * z2) / M) * f(m, M * tau, z1 + j * tau, z2 + k * tau, t, pol)
        for j in range(M)
        for k in range(M)
    )


@identity("T6.5a", "completed numerator at -M/tau as a lattice sum at M tau", args=Z_ARGS,
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=MM_GRID, constraint=coprime_strict,
          default_tol=QUADRATURE_TOL, consts={"w": 0})
def _t65a(p, x, pol, c):
    m, M, tau, z1, z2, t = p.m, p.M, x.tau, x.z1, x.z2, x.t
    lhs = PT(m, -M / tau, z1 / tau, z2 / tau, t - z1 * z2 / (tau * M), pol)
    rhs = tau / M * lattice_sum(PT, m, M, tau, z1, z2, t, pol, m + 1 + c["w"])
    return lhs, rhs


@identity("T6.5b", "completed numerator at (tau/M, z/M) as a lattice sum at M tau", args=Z_ARGS,
          params=MM_PARAMS, defaults={"M": 3, "m": 1}, grid=MM_GRID, constraint=coprime_strict,
          default_tol=QUADRATURE_TOL, consts={"w": 0})
def _t65b(p, x, pol, c):
    m, M, tau, z1, z2, t = p.m, p.M, x.tau, x.z1, x.z2, x.t
    lhs = PT(m, tau / M, z1 / M, z2 / M, t, pol)
    rhs = lattice_sum(PT, m, M, tau, z1, z2, t, pol, m + 1 + c["w"])
    return lhs, rhs


@identity("R6.6", "level-zero numerator obeys both lattice-sum laws for every M", args=Z_ARGS,
          params={"M": _int(1)}, defaults={"M": 2}, grid=[{"M": M} for M in (2, 3, 4)], default_tol=1e-9)
def _r66(p, x, pol, c):
    M, tau, z1, z2, t = p.M, x.tau, x.z1, x.z2, x.t
    total = lattice_sum(P, 0, M, tau, z1, z2, t, pol, 1)
    return (
        [P(0, -M / tau, z1 / tau, z2 / tau, t - z1 * z2 / (tau * M), pol), P(0, tau / M, z1 / M, z2 / M, t, pol)],
        [tau / M * total, total],
    )
