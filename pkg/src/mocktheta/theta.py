"""Classical theta functions, Jacobi theta functions, Dedekind eta and the
rank-two mock theta function whose S-defect is holomorphic."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numerics import (
    DEFAULT_POLICY,
    TWO_PI_I,
    DomainError,
    ModularPoint,
    SeriesPolicy,
    as_point,
    gaussian_window,
    guard_lattice,
    series_tol,
)


@dataclass(frozen=True)
class ThetaIndex:
    """Index (j, k) of the degree-k theta function; j is kept in [0, 2k)."""

    j: Fraction
    k: int

    def __post_init__(self):
        k = int(self.k)
        if k != self.k or k < 1:
            raise DomainError(f"theta degree must be a positive integer, got {self.k}")
        j = Fraction(self.j) % (2 * k)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)


@dataclass(frozen=True)
class JacobiThetaKind:
    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise DomainError(f"Jacobi theta characteristics must be bits, got ({self.a},{self.b})")

    @classmethod
    def parse(cls, kind) -> "JacobiThetaKind":
        if isinstance(kind, JacobiThetaKind):
            return kind
        if isinstance(kind, str):
            return cls(int(kind[0]), int(kind[1]))
        if isinstance(kind, int):
            return cls(kind // 10, kind % 10)
        a, b = kind
        return cls(int(a), int(b))


def _index(idx) -> ThetaIndex:
    if isinstance(idx, ThetaIndex):
        return idx
    j, k = idx
    return ThetaIndex(Fraction(j), int(k))


def theta_jm(idx, tau, z: complex = 0j, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Degree-k theta function: e(k t) * sum over n in Z + j/2k of q^{k n^2} e(k n z)."""
    idx = _index(idx)
    tau = as_point(tau).tau
    z = complex(z)
    k = idx.k
    shift = float(idx.j) / (2 * k)
    decay = 2 * math.pi * k * tau.imag
    drift = -2 * math.pi * k * z.imag - 2 * decay * shift
    ell = gaussian_window(decay, drift, series_tol(policy), policy.trunc_radius)
    n = ell + shift
    terms = np.exp(TWO_PI_I * k * (n * n * tau + n * z))
    return complex(cmath.exp(TWO_PI_I * k * complex(t)) * terms.sum())


def theta_jm_dz(idx, tau, z: complex = 0j, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """(1/2 pi i) d/dz of the degree-k theta function, summed termwise."""
    idx = _index(idx)
    tau = as_point(tau).tau
    z = complex(z)
    k = idx.k
    shift = float(idx.j) / (2 * k)
    decay = 2 * math.pi * k * tau.imag
    drift = -2 * math.pi * k * z.imag - 2 * decay * shift
    ell = gaussian_window(decay, drift, series_tol(policy), policy.trunc_radius + 2)
    n = ell + shift
    terms = k * n * np.exp(TWO_PI_I * k * (n * n * tau + n * z))
    return complex(cmath.exp(TWO_PI_I * k * complex(t)) * terms.sum())


def jacobi_theta(kind, tau, z: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """The four Jacobi theta functions as combinations of degree-2 thetas."""
    kind = JacobiThetaKind.parse(kind)
    th = lambda j: theta_jm((j, 2), tau, z, 0j, policy)  # noqa: E731
    if (kind.a, kind.b) == (0, 0):
        return th(2) + th(0)
    if (kind.a, kind.b) == (0, 1):
        return -th(2) + th(0)
    if (kind.a, kind.b) == (1, 0):
        return th(1) + th(-1)
    return 1j * th(1) - 1j * th(-1)


def jacobi_theta_dz(kind, tau, z: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """(1/2 pi i) d/dz of :func:`jacobi_theta`."""
    kind = JacobiThetaKind.parse(kind)
    th = lambda j: theta_jm_dz((j, 2), tau, z, 0j, policy)  # noqa: E731
    if (kind.a, kind.b) == (0, 0):
        return th(2) + th(0)
    if (kind.a, kind.b) == (0, 1):
        return -th(2) + th(0)
    if (kind.a, kind.b) == (1, 0):
        return th(1) + th(-1)
    return 1j * th(1) - 1j * th(-1)


def _product_length(abs_q: float, policy: SeriesPolicy, extra: float = 0.0) -> int:
    # |q|^N (times the largest |e(+-z)| factor) below the series tolerance
    tol = series_tol(policy)
    return max(policy.trunc_radius, int(math.ceil((math.log(tol) - extra) / math.log(abs_q))) + 2)


def eta(tau, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Dedekind eta as q^{1/24} times the Euler product."""
    tau = as_point(tau)
    n = np.arange(1, _product_length(tau.abs_q, policy) + 1)
    return complex(cmath.exp(TWO_PI_I * tau.tau / 24) * np.prod(1 - np.exp(TWO_PI_I * n * tau.tau)))


def jacobi_theta_product(kind, tau, z: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Triple-product form of the Jacobi theta functions.

    Each case solves the corresponding product identity for the theta
    function, so this is an independent route to :func:`jacobi_theta`.
    """
    kind = JacobiThetaKind.parse(kind)
    point = as_point(tau)
    tau = point.tau
    z = complex(z)
    n = np.arange(1, _product_length(point.abs_q, policy, extra=-2 * math.pi * abs(z.imag)) + 1)
    qn = np.exp(TWO_PI_I * n * tau)
    euler = np.prod(1 - qn)
    x = cmath.exp(TWO_PI_I * z)
    if kind.a == 0:
        sign = 1 if kind.b == 0 else -1
        qh = np.exp(TWO_PI_I * (n - 0.5) * tau)
        return complex(euler * np.prod((1 + sign * x * qh) * (1 + sign * qh / x)))
    pre = cmath.exp(TWO_PI_I * tau / 8 - 1j * math.pi * z)
    qm = np.exp(TWO_PI_I * (n - 1) * tau)
    if kind.b == 0:
        return complex(pre * euler * np.prod((1 + qn / x) * (1 + x * qm)))
    return complex(-1j * pre * euler * np.prod((1 - qn / x) * (1 - x * qm)))


def mock_rank2(
    K: int,
    s: int,
    tau,
    z1: complex,
    z2: complex,
    t: complex = 0j,
    policy: SeriesPolicy = DEFAULT_POLICY,
) -> complex:
    """Rank-two mock theta function with one isotropic denominator root.

    Lattice Z*alpha with (alpha|beta) = 1, (beta|beta) = 0 and
    s = K*(alpha|alpha); coordinates z = z1*alpha + z2*beta; the weight
    has zero finite part. Summand a carries q^{s a^2/2} e(a s z1 + K a z2)
    over 1 - e(-(z1 + a tau)).
    """
    if K < 1 or s < 1:
        raise DomainError("K and s must be positive integers")
    tau = as_point(tau).tau
    z1, z2 = complex(z1), complex(z2)
    guard_lattice(z1, tau, policy, "mock_rank2 pole z1 in Z + Z tau")
    decay = math.pi * s * tau.imag
    drift = -2 * math.pi * (s * z1.imag + K * z2.imag)
    a = gaussian_window(decay, drift, series_tol(policy), policy.trunc_radius)
    a = np.arange(a[0] - 2, a[-1] + 3)
    num = np.exp(TWO_PI_I * (a * s * z1 + K * a * z2 + s * a * a * tau / 2))
    den = 1 - np.exp(-TWO_PI_I * (z1 + a * tau))
    return complex(cmath.exp(TWO_PI_I * K * complex(t)) * (num / den).sum())


def mock_rank2_s(
    K: int,
    s: int,
    tau,
    z1: complex,
    z2: complex,
    t: complex = 0j,
    policy: SeriesPolicy = DEFAULT_POLICY,
) -> complex:
    """S-transform tau^{-1} F(-1/tau, z/tau, t - K-norm(z)/(2 tau)) of :func:`mock_rank2`."""
    tau = as_point(tau).tau
    z1, z2 = complex(z1), complex(z2)
    # (z|z) = z1^2 (alpha|alpha) + 2 z1 z2, and K (alpha|alpha) = s
    shift = (s * z1 * z1 + 2 * K * z1 * z2) / (2 * K * tau)
    return mock_rank2(K, s, -1 / tau, z1 / tau, z2 / tau, complex(t) - shift, policy) / tau
