"""psl(2|2)^ (type A(1|1)) denominators, the operators D0 and D1, and modified
characters at positive level m/M and negative level -m/M.

The numerators are D1 applied to the sl(2|1) numerators of level m - 1.
Derivatives are taken analytically, term by term, through small evaluator
objects that know their own D0 and their frequency kappa in t.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .mock import TorusPoint, log_pole2, phi, phi_add, phi_add_d0, phi_d0
from .numerics import (
    DEFAULT_POLICY,
    TWO_PI_I,
    ContractError,
    LabelError,
    SeriesPolicy,
    as_point,
    gaussian_window,
    guard_lattice,
    guard_nonzero,
    series_tol,
)
from .sl21_chars import HALF, Sector, _sector
from .theta import eta, jacobi_theta


def ex(x: complex) -> complex:
    return cmath.exp(TWO_PI_I * x)


class LevelSign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


class DKind(enum.Enum):
    D0 = "D0"
    D1 = "D1"


def denom_a11(sector, tau, z1: complex, z2: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Normalized (super)denominator; independent of t because the dual Coxeter number is zero."""
    sector = _sector(sector)
    tau = as_point(tau).tau
    z1, z2 = complex(z1), complex(z2)
    kind = f"{int(1 - 2 * sector.epsilon_prime)}{int(1 - 2 * sector.epsilon)}"
    d1 = jacobi_theta(kind, tau, z1, policy)
    d2 = jacobi_theta(kind, tau, z2, policy)
    guard_nonzero(d1, 1.0, policy, f"theta{kind}(tau, z1) in the A(1|1) denominator")
    guard_nonzero(d2, 1.0, policy, f"theta{kind}(tau, z2) in the A(1|1) denominator")
    sign = -1 if sector.epsilon_prime == HALF else 1
    num = jacobi_theta("11", tau, z1 - z2, policy) * jacobi_theta("11", tau, z1 + z2, policy)
    return sign * eta(tau, policy) ** 4 * num / (d1 * d1 * d2 * d2)


def phi_a11(m: int, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Level-m supercharacter numerator: the double-pole series."""
    if int(m) != m or m < 1:
        raise LabelError(f"A(1|1) numerators need a positive integer m, got {m}")
    m = int(m)
    tau = as_point(tau).tau
    pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
    z1, z2 = pt.z1, pt.z2
    guard_lattice(z1, tau, policy, "A(1|1) numerator pole z1 in Z + Z tau")
    guard_lattice(z2, tau, policy, "A(1|1) numerator pole z2 in Z + Z tau")
    decay = 2 * math.pi * m * tau.imag
    s = (z1 + z2).imag
    lo = gaussian_window(decay, -2 * math.pi * m * s - 2 * math.pi * tau.imag, series_tol(policy), policy.trunc_radius)
    hi = gaussian_window(decay, 2 * math.pi * m * s - 2 * math.pi * tau.imag, series_tol(policy), policy.trunc_radius)
    j = np.arange(min(lo[0], hi[0]) - 2, max(lo[-1], hi[-1]) + 3)
    # e(z1 + j tau)/(1 - e(z1 + j tau))^2 carries the extra e(z1) q^j
    quad = m * j * j * tau
    first = np.exp(TWO_PI_I * (j * m * (z1 + z2) + quad) + log_pole2(z1 + j * tau))
    second = np.exp(TWO_PI_I * (-j * m * (z1 + z2) + quad) + log_pole2(j * tau - z2))
    return complex(ex(m * pt.t) * (first - second).sum())


@dataclass(frozen=True)
class PhiNumerator:
    """Evaluator for the level-m numerator (completed when ``modified``)."""

    m: int
    modified: bool = True

    @property
    def kappa(self) -> Fraction:
        return Fraction(self.m + 1)

    def value(self, tau, pt, policy=DEFAULT_POLICY) -> complex:
        out = phi(self.m, tau, pt, policy)
        return out + phi_add(self.m, tau, pt, policy) if self.modified else out

    def d0(self, tau, pt, policy=DEFAULT_POLICY) -> complex:
        out = phi_d0(self.m, tau, pt, policy)
        return out + phi_add_d0(self.m, tau, pt, policy) if self.modified else out


@dataclass(frozen=True)
class PsiNumerator:
    """Evaluator for q^{(m+1)jk/M} e((m+1)(k z1 + j z2)/M) F(M tau, z1 + j tau + eps, z2 + k tau + eps, t/M).

    With ``canonical`` (the default) (j, k) is first moved into [0, M)^2,
    which is exact and avoids cancellation; turn it off to evaluate the
    literal representative.
    """

    M: int
    m: int
    eps: Fraction
    j: Fraction
    k: Fraction
    modified: bool = True
    canonical: bool = True

    @property
    def kappa(self) -> Fraction:
        return Fraction(self.m + 1, self.M)

    def _reduced(self) -> tuple[int, Fraction, Fraction]:
        if not self.canonical:
            return 1, self.j, self.k
        # shifting j or k by M multiplies by (-1)^{2 eps (m+1)}; evaluating in [0, M)^2
        # keeps q^{(m+1)jk/M} bounded instead of cancelling against a huge inner series
        nj, nk = math.floor(self.j / self.M), math.floor(self.k / self.M)
        flips = (nj + nk) * int(2 * self.eps) * (self.m + 1)
        return (-1 if flips % 2 else 1), self.j - nj * self.M, self.k - nk * self.M

    def _parts(self, tau, pt):
        tau = as_point(tau).tau
        pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
        sign, j, k = self._reduced()
        w, M = self.m + 1, self.M
        j, k, e = float(j), float(k), float(self.eps)
        pref = sign * ex(w * j * k * tau / M + w * (k * pt.z1 + j * pt.z2) / M)
        inner = TorusPoint(pt.z1 + j * tau + e, pt.z2 + k * tau + e, pt.t / M)
        return pref, M * tau, inner, (k - j) * w / M

    def value(self, tau, pt, policy=DEFAULT_POLICY) -> complex:
        pref, big, inner, _ = self._parts(tau, pt)
        return pref * PhiNumerator(self.m, self.modified).value(big, inner, policy)

    def d0(self, tau, pt, policy=DEFAULT_POLICY) -> complex:
        pref, big, inner, slope = self._parts(tau, pt)
        f = PhiNumerator(self.m, self.modified)
        return pref * (slope * f.value(big, inner, policy) + f.d0(big, inner, policy))


def apply_D(kind, f, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """D0 = (1/2 pi i)(d/dz1 - d/dz2); D1 = D0 - (z1 - z2)/(2 tau) (1/2 pi i) d/dt.

    ``f`` must expose ``value``, ``d0`` and ``kappa`` (its frequency in t),
    so both operators are exact.
    """
    kind = DKind(kind)
    for attr in ("value", "d0", "kappa"):
        if not hasattr(f, attr):
            raise ContractError(f"apply_D needs an evaluator with value/d0/kappa; {type(f).__name__} lacks {attr}")
    tau = as_point(tau).tau
    pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
    d0 = f.d0(tau, pt, policy)
    if kind is DKind.D0:
        return d0
    kappa = float(f.kappa)
    if kappa == 0:
        return d0
    return d0 - (pt.z1 - pt.z2) / (2 * tau) * kappa * f.value(tau, pt, policy)


def _family(M: int, j: int, k: int) -> int:
    if j + k <= M - 1:
        return 1 if k >= j else 3
    return 2 if j > k else 4


@dataclass(frozen=True)
class A11Label:
    """One modified A(1|1) (super)character.

    POSITIVE level: (j, k) in (eps' + Z)^2 inside [0, M)^2.
    NEGATIVE level: j in eps' + Z with 0 <= j < M and k in eps' + Z with -1/2 <= k < M - 1/2.
    ``family`` and ``eps_s`` describe the underlying admissible weight; the
    sign eps_s is not applied to the modified character.
    """

    M: int
    m: int
    level_sign: LevelSign
    j: Fraction
    k: Fraction
    sector: Sector

    def __post_init__(self):
        M, m = int(self.M), int(self.m)
        if M < 1 or m < 1:
            raise LabelError(f"A(1|1) labels need M >= 1 and m >= 1; got M={M}, m={m}")
        if m > 1 and math.gcd(M, 2 * m) != 1:
            raise LabelError(f"gcd(M, 2m) must be 1 when m > 1; got M={M}, m={m}")
        object.__setattr__(self, "sector", _sector(self.sector))
        object.__setattr__(self, "level_sign", LevelSign(self.level_sign))
        j = Fraction(self.j).limit_denominator(4)
        k = Fraction(self.k).limit_denominator(4)
        ep = self.sector.epsilon_prime
        if (j - ep).denominator != 1 or (k - ep).denominator != 1:
            raise LabelError(f"indices must lie in eps' + Z; got ({self.j}, {self.k}) with eps'={ep}")
        if not 0 <= j < M:
            raise LabelError(f"j={j} outside [0, M)")
        k_lo, k_hi = (0, M) if self.level_sign is LevelSign.POSITIVE else (-HALF, M - HALF)
        if not k_lo <= k < k_hi:
            raise LabelError(f"k={k} outside [{k_lo}, {k_hi})")
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    @property
    def level(self) -> Fraction:
        sign = 1 if self.level_sign is LevelSign.POSITIVE else -1
        return Fraction(sign * self.m, self.M)

    def weight_indices(self) -> tuple[int, int]:
        """Integer (j, k) of the admissible weight in the square [0, M)^2."""
        ep = self.sector.epsilon_prime
        if self.level_sign is LevelSign.NEGATIVE and ep == HALF:
            return int(self.k + HALF), int(self.j - HALF)
        return int(self.j - ep), int(self.k - ep)

    @property
    def family(self) -> int:
        return _family(self.M, *self.weight_indices())

    @property
    def eps_s(self) -> int:
        s = self.family
        return -1 if ((s - 1) * (s - 2) // 2) % 2 else 1

    def numerator_evaluator(self) -> PsiNumerator:
        eps = self.sector.epsilon
        if self.level_sign is LevelSign.POSITIVE:
            return PsiNumerator(self.M, self.m - 1, eps, self.j, self.k)
        return PsiNumerator(self.M, self.m - 1, eps, self.j, -self.k)


def labels_a11(M: int, m: int, level_sign, sector) -> list[A11Label]:
    """The full index square for one sector; family and eps_s are available on each label."""
    sector = _sector(sector)
    level_sign = LevelSign(level_sign)
    ep = sector.epsilon_prime
    out = []
    for a in range(M):
        for b in range(M):
            if level_sign is LevelSign.NEGATIVE and ep == HALF:
                out.append(A11Label(M, m, level_sign, b + HALF, a - HALF, sector))
            else:
                out.append(A11Label(M, m, level_sign, a + ep, b + ep, sector))
    return out


def char_tilde_a11(label: A11Label, tau, z1: complex, z2: complex, t: complex = 0j,
                   policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    """Modified normalized (super)character: D1 of the level-(m-1) numerator over the denominator.

    At negative level the numerator is evaluated at -t, in the coordinates
    where z2 enters with the opposite sign; the denominator is even in z2.
    """
    tau = as_point(tau).tau
    f = label.numerator_evaluator()
    if label.level_sign is LevelSign.POSITIVE:
        num = apply_D(DKind.D1, f, tau, TorusPoint(z1, z2, t), policy)
    else:
        num = apply_D(DKind.D1, f, tau, TorusPoint(z1, z2, -complex(t)), policy)
    den = denom_a11(label.sector, tau, z1, z2, policy)
    guard_nonzero(den, 1.0, policy, "A(1|1) denominator")
    return num / den


__all__ = [
    "A11Label",
    "DKind",
    "LevelSign",
    "PhiNumerator",
    "PsiNumerator",
    "apply_D",
    "char_tilde_a11",
    "denom_a11",
    "labels_a11",
    "phi_a11",
]
