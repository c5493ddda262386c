"""Mock theta functions of level m, their Zwegers-type completions and the
holomorphic S-defect G.

Coordinates: a torus point carries (z1, z2, t); the alternative frame is
u = -(z1+z2)/2, v = (z1-z2)/2, so z1 = v - u and z2 = -(v + u).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import erfcx

from .numerics import (
    DEFAULT_POLICY,
    SQRT_PI,
    TWO_PI_I,
    DomainError,
    PolicyError,
    SeriesPolicy,
    as_point,
    contour_integral,
    gaussian_window,
    guard_lattice,
    guard_nonzero,
    principal_sqrt,
    series_tol,
)
from .theta import jacobi_theta, theta_jm

MAX_R_TERMS = 20000


@dataclass(frozen=True)
class TorusPoint:
    z1: complex
    z2: complex
    t: complex = 0j

    def __post_init__(self):
        for name in ("z1", "z2", "t"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @property
    def u(self) -> complex:
        return -(self.z1 + self.z2) / 2

    @property
    def v(self) -> complex:
        return (self.z1 - self.z2) / 2

    @classmethod
    def from_uv(cls, u: complex, v: complex, t: complex = 0j) -> "TorusPoint":
        return cls(v - u, -(v + u), t)


@dataclass(frozen=True)
class MockIndex:
    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 0:
            raise DomainError(f"level parameter m must be a nonnegative integer, got {self.m}")
        object.__setattr__(self, "m", int(self.m))


def _level(m) -> int:
    return MockIndex(m.m if isinstance(m, MockIndex) else m).m


def _point(pt=None, z1=None, z2=None, t=0j) -> TorusPoint:
    if isinstance(pt, TorusPoint):
        return pt
    if pt is not None:
        return TorusPoint(*pt)
    return TorusPoint(z1, z2, t)


def _window_union(decay: float, drifts, tol: float, floor: int) -> np.ndarray:
    lo, hi = None, None
    for d in drifts:
        w = gaussian_window(decay, d, tol, floor)
        lo = w[0] if lo is None else min(lo, w[0])
        hi = w[-1] if hi is None else max(hi, w[-1])
    return np.arange(lo - 1, hi + 2)


def log_geom(a):
    """log of 1/(1 - e(a)), elementwise, without forming e(a) when |e(a)| > 1."""
    a = np.asarray(a, dtype=complex)
    big = a.imag < 0
    b = np.where(big, -a, a)
    out = -np.log1p(-np.exp(TWO_PI_I * b))
    return np.where(big, 1j * math.pi + TWO_PI_I * b + out, out)


def log_pole2(a):
    """log of e(a)/(1 - e(a))^2, elementwise; the function is even in a."""
    a = np.asarray(a, dtype=complex)
    b = np.where(a.imag < 0, -a, a)
    return TWO_PI_I * b - 2 * np.log1p(-np.exp(TWO_PI_I * b))


def phi(m, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Level-m Appell-Lerch type numerator in (z1, z2, t) coordinates."""
    m = _level(m)
    tau = as_point(tau).tau
    pt = _point(pt)
    z1, z2 = pt.z1, pt.z2
    guard_lattice(z1, tau, policy, "phi pole z1 in Z + Z tau")
    guard_lattice(z2, tau, policy, "phi pole z2 in Z + Z tau")
    w = m + 1
    decay = 2 * math.pi * w * tau.imag
    s = (z1 + z2).imag
    j = _window_union(decay, (-2 * math.pi * w * s, 2 * math.pi * w * s), series_tol(policy), policy.trunc_radius)
    quad = w * j * j * tau
    first = np.exp(TWO_PI_I * (j * w * (z1 + z2) + quad) + log_geom(z1 + j * tau))
    second = np.exp(TWO_PI_I * (-j * w * (z1 + z2) + quad) + log_geom(j * tau - z2))
    return complex(cmath.exp(TWO_PI_I * w * pt.t) * (first - second).sum())


def phi_d0(m, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """(1/2 pi i)(d/dz1 - d/dz2) of :func:`phi`, differentiated term by term.

    The exponentials in z1 + z2 are annihilated, leaving
    X/(1-X) and Y/(1-Y) factors on the two halves.
    """
    m = _level(m)
    tau = as_point(tau).tau
    pt = _point(pt)
    z1, z2 = pt.z1, pt.z2
    guard_lattice(z1, tau, policy, "phi pole z1 in Z + Z tau")
    guard_lattice(z2, tau, policy, "phi pole z2 in Z + Z tau")
    w = m + 1
    decay = 2 * math.pi * w * tau.imag
    s = (z1 + z2).imag
    j = _window_union(decay, (-2 * math.pi * w * s, 2 * math.pi * w * s), series_tol(policy), policy.trunc_radius + 1)
    quad = w * j * j * tau
    first = np.exp(TWO_PI_I * (j * w * (z1 + z2) + quad) + log_pole2(z1 + j * tau))
    second = np.exp(TWO_PI_I * (-j * w * (z1 + z2) + quad) + log_pole2(j * tau - z2))
    return complex(cmath.exp(TWO_PI_I * w * pt.t) * (first - second).sum())


def phi_uv(m, tau, u: complex, v: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return phi(m, tau, TorusPoint.from_uv(u, v, t), policy)


def mu(tau, z1: complex, z2: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Appell-Lerch sum normalised by the odd Jacobi theta function in z2."""
    tau = as_point(tau).tau
    z1, z2 = complex(z1), complex(z2)
    guard_lattice(z1, tau, policy, "mu pole z1 in Z + Z tau")
    guard_lattice(z2, tau, policy, "mu divisor zero z2 in Z + Z tau")
    th = jacobi_theta("11", tau, z2, policy)
    guard_nonzero(th, 1.0, policy, "mu: theta11(tau, z2)")
    decay = math.pi * tau.imag
    n = gaussian_window(decay, -2 * math.pi * z2.imag - math.pi * tau.imag, series_tol(policy), policy.trunc_radius)
    n = np.arange(n[0] - 2, n[-1] + 3)
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    terms = sign * np.exp(TWO_PI_I * ((n * n + n) * tau / 2 + n * z2)) / (1 - np.exp(TWO_PI_I * (z1 + n * tau)))
    return complex(cmath.exp(1j * math.pi * z1) * terms.sum() / th)


def _h_contour(m: int, j: int, tau: complex, v: complex, policy: SeriesPolicy) -> complex:
    # i * integral of g(w) / (1 - exp(2 pi (w + i c))), g(w) = e(m tau w^2) exp(-4 pi m v w),
    # c = (2m-j)/2m, over the line midway between the poles w = -ic and w = i(1-c).
    # The line is moved by an integer to the midline nearest the saddle of g; each
    # crossed pole w_n contributes -+ g(w_n).
    c = (2 * m - j) / (2 * m)
    saddle = -1j * v / tau
    shift = round(saddle.imag - (0.5 - c))
    sigma = 0.5 - c + shift

    def g(w):
        return np.exp(TWO_PI_I * m * tau * w * w - 4 * math.pi * m * v * w)

    centre = saddle.real

    def integrand(x):
        w = x + centre
        return g(w) / (1 - np.exp(2 * math.pi * (w + 1j * c)))

    decay = 2 * math.pi * m * tau.imag
    growth = 4 * math.pi * m * abs(tau.real) * (abs(sigma - saddle.imag) + 1) + 2 * math.pi
    spacing = 2 * math.pi * 0.45 / (-math.log(series_tol(policy)) + m * 0.45 * growth)
    value = 1j * contour_integral(integrand, sigma, policy, decay=(decay, growth), spacing=spacing)
    if shift > 0:
        value += sum(complex(g(1j * (n - c))) for n in range(1, shift + 1))
    elif shift < 0:
        value -= sum(complex(g(1j * (n - c))) for n in range(shift + 1, 1))
    return value


def h_integral(m: int, j: int, tau, v: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Mordell-type integral for any index j, by direct quadrature.

    Accurate for moderate |j|; :func:`h_zw` is the preferred entry point.
    """
    if int(m) != m or m < 1:
        raise DomainError("h requires a positive integer rank m")
    return _h_contour(int(m), int(j), as_point(tau).tau, complex(v), policy)


def h_zw(m: int, j: int, tau, v: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Zwegers' h-function of rank m and index j.

    Indices in [0, 2m) are integrated directly; others are reached through
    h_{m;j} - h_{m;j+2m} = q^{-j^2/4m} e(-j v).
    """
    if int(m) != m or m < 1:
        raise DomainError("h requires a positive integer rank m")
    m, j = int(m), int(j)
    tau = as_point(tau).tau
    v = complex(v)
    j0 = j % (2 * m)
    value = _h_contour(m, j0, tau, v, policy)
    step = lambda jj: cmath.exp(TWO_PI_I * (-jj * jj * tau / (4 * m) - jj * v))  # noqa: E731
    cur = j0
    while cur < j:
        value -= step(cur)
        cur += 2 * m
    while cur > j:
        cur -= 2 * m
        value += step(cur)
    return value


def _r_window(m: int, j: int, tau: complex, v: complex, tol: float, floor: int) -> np.ndarray:
    y = tau.imag
    peak = -2 * m * v.imag / y
    radius = math.sqrt(-math.log(tol) * 2 * m / (math.pi * y)) + 2 * m * (floor + 1)
    lo = math.floor((min(0.0, 2 * peak) - radius - j) / (2 * m))
    hi = math.ceil((max(0.0, 2 * peak) + radius - j) / (2 * m))
    if hi - lo > MAX_R_TERMS:
        raise PolicyError(
            f"R-series window of {hi - lo} terms exceeds budget; v={v} is too far from the real locus"
        )
    return j + 2 * m * np.arange(lo, hi + 1)


def r_zw(m: int, j: int, tau, v: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Zwegers' non-holomorphic R-series of rank m, index j (mod 2m)."""
    if int(m) != m or m < 1:
        raise DomainError("R requires a positive integer rank m")
    m = int(m)
    j = int(j) % (2 * m)
    tau = as_point(tau).tau
    v = complex(v)
    y = tau.imag
    n = _r_window(m, j, tau, v, series_tol(policy), policy.trunc_radius).astype(float)
    x = SQRT_PI * (n + 2 * m * v.imag / y) * math.sqrt(y / m)
    sign = np.where(n >= 0, 1.0, -1.0)
    # sign - erf(x) = sign * erfc(sign * x) = sign * erfcx(sign * x) * exp(-x^2)
    expo = -x * x + (-1j * math.pi * n * n * tau / (2 * m) - TWO_PI_I * n * v)
    terms = sign * erfcx(sign * x) * np.exp(expo)
    return complex(terms.sum())


def r_zw_d0(m: int, j: int, tau, v: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """(1/2 pi i) times the Wirtinger derivative d/dv of :func:`r_zw`.

    R depends on v through exp(-2 pi i n v) and through Im v inside the
    error function; d(Im v)/dv = -i/2.
    """
    if int(m) != m or m < 1:
        raise DomainError("R requires a positive integer rank m")
    m = int(m)
    j = int(j) % (2 * m)
    tau = as_point(tau).tau
    v = complex(v)
    y = tau.imag
    n = _r_window(m, j, tau, v, series_tol(policy), policy.trunc_radius + 1).astype(float)
    x = SQRT_PI * (n + 2 * m * v.imag / y) * math.sqrt(y / m)
    sign = np.where(n >= 0, 1.0, -1.0)
    phase = -1j * math.pi * n * n * tau / (2 * m) - TWO_PI_I * n * v
    gauss = np.exp(-x * x + phase)
    terms = sign * erfcx(sign * x) * gauss
    return complex(-(n * terms).sum() + math.sqrt(m / y) / math.pi * gauss.sum())


def zwegers_R(tau, u: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    u = complex(u)
    return r_zw(2, 1, tau, u / 2, policy) - r_zw(2, -1, tau, u / 2, policy)


def theta_odd_diff(j: int, k: int, tau, z: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Theta_{j,k} - Theta_{-j,k} at (tau, z, t)."""
    return theta_jm((j, k), tau, z, t, policy) - theta_jm((-j, k), tau, z, t, policy)


def phi_add(m, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Non-holomorphic correction turning phi into its completion."""
    m = _level(m)
    pt = _point(pt)
    if m == 0:
        return 0j
    w = m + 1
    v = pt.v
    total = 0j
    for j in range(1, 2 * w):
        if j == w:
            continue  # Theta_{w,w} = Theta_{-w,w}
        total += r_zw(w, j, tau, v, policy) * theta_odd_diff(j, w, tau, pt.z1 + pt.z2, 0j, policy)
    return -0.5 * cmath.exp(TWO_PI_I * w * pt.t) * total


def phi_add_uv(m, tau, u: complex, v: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return phi_add(m, tau, TorusPoint.from_uv(u, v, t), policy)


def phi_add_d0(m, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """(1/2 pi i)(d/dz1 - d/dz2) of :func:`phi_add`; only the R factors depend on z1 - z2."""
    m = _level(m)
    pt = _point(pt)
    if m == 0:
        return 0j
    w = m + 1
    total = 0j
    for j in range(1, 2 * w):
        if j == w:
            continue
        total += r_zw_d0(w, j, tau, pt.v, policy) * theta_odd_diff(j, w, tau, pt.z1 + pt.z2, 0j, policy)
    return -0.5 * cmath.exp(TWO_PI_I * w * pt.t) * total


def phi_tilde(m, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return phi(m, tau, pt, policy) + phi_add(m, tau, pt, policy)


def phi_tilde_uv(m, tau, u: complex, v: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return phi_tilde(m, tau, TorusPoint.from_uv(u, v, t), policy)


def s_transform_uv(f, m, tau, u: complex, v: complex, t: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """tau^{-1} f(-1/tau, u/tau, v/tau, t - (u^2 - v^2)/tau) for an evaluator f(m, tau, u, v, t, policy)."""
    tau = as_point(tau).tau
    u, v, t = complex(u), complex(v), complex(t)
    return f(m, -1 / tau, u / tau, v / tau, t - (u * u - v * v) / tau, policy) / tau


def g_direct(m, tau, u: complex, v: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """S-defect of phi: phi minus its weight-one S-transform."""
    return phi_uv(m, tau, u, v, t, policy) - s_transform_uv(phi_uv, m, tau, u, v, t, policy)


def g_via_h(m, tau, u: complex, v: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """S-defect of phi assembled from h-integrals and odd theta differences."""
    m = _level(m)
    if m == 0:
        return 0j
    w = m + 1
    total = 0j
    for j in range(1, 2 * w):
        if j == w:
            continue
        total += h_zw(w, j, tau, v, policy) * theta_odd_diff(j, w, tau, 2 * complex(u), 0j, policy)
    return -cmath.exp(TWO_PI_I * w * complex(t)) * total


@dataclass(frozen=True)
class QExpansion:
    """Sparse table of integer coefficients c[(power, a, b)] of q^power e(a z1 + b z2)."""

    m: int
    entries: dict

    def coefficient(self, power, a: int, b: int) -> int:
        return self.entries.get((Fraction(power), a, b), 0)

    def evaluate(self, tau, z1: complex, z2: complex) -> complex:
        tau = as_point(tau).tau
        keys = list(self.entries)
        if not keys:
            return 0j
        p = np.array([float(k[0]) for k in keys])
        a = np.array([k[1] for k in keys], dtype=float)
        b = np.array([k[2] for k in keys], dtype=float)
        c = np.array([self.entries[k] for k in keys], dtype=float)
        return complex((c * np.exp(TWO_PI_I * (p * tau + a * complex(z1) + b * complex(z2)))).sum())

    def __len__(self) -> int:
        return len(self.entries)


def phi_qexp(m, max_power, z_degree_bound: int, reading: str = "divisible") -> QExpansion:
    """Exact double-sum expansion of phi at t = 0.

    Nonnegative (a, b) with (m+1) | min(a, b) contribute +1; negative (a, b)
    with (m+1) | max(a, b) contribute -1; the q-power is a*b/(m+1).
    ``reading="divides"`` swaps in the rejected alternative reading
    (min(a, b) divides m+1) for comparison only.
    """
    m = _level(m)
    w = m + 1
    max_power = Fraction(max_power)
    bound = int(z_degree_bound)

    def ok(x: int) -> bool:
        if reading == "divisible":
            return x % w == 0
        if reading == "divides":
            return x != 0 and w % abs(x) == 0
        raise DomainError(f"unknown reading {reading!r}")

    entries = {}
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            p = Fraction(a * b, w)
            if p > max_power:
                continue
            if a >= 0 and b >= 0 and ok(min(a, b)):
                entries[(p, a, b)] = 1
            elif a < 0 and b < 0 and ok(max(a, b)):
                entries[(p, a, b)] = -1
    return QExpansion(m, entries)


def offset_set(M: int, p: int) -> list[int]:
    """The M integers b_n with n = n' M + b_n p, 0 <= n < M, 0 <= n' < p.

    Requires gcd(M, p) = 1. Every integer then splits uniquely as n' M + b p
    with n' in Z and b in the returned set.
    """
    M, p = int(M), int(p)
    if M < 1 or p < 1 or math.gcd(M, p) != 1:
        raise DomainError(f"offset set needs coprime positive M, p; got M={M}, p={p}")
    out = []
    for n in range(M):
        n_prime = next(k for k in range(p) if (k * M - n) % p == 0)
        out.append((n - n_prime * M) // p)
    return out
