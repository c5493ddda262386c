"""Denominators, numerators and modified normalized (super)characters of
admissible sl(2|1)^ modules.

A sector is the pair (eps, eps'): eps = 1/2 for characters, 0 for
supercharacters; eps' = 0 untwisted, 1/2 twisted. Two twist conventions are
supported. ``XI`` shifts by -(alpha1 + alpha2)/2 and gives the cleanest
transformation laws; ``XI_PRIME`` shifts by (alpha1 - alpha2)/2 and is the one
compatible with the twisted Hamiltonian reduction to N=2.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .mock import TorusPoint, phi, phi_tilde
from .numerics import (
    DEFAULT_POLICY,
    TWO_PI_I,
    DomainError,
    LabelError,
    SeriesPolicy,
    as_point,
    guard_nonzero,
)
from .theta import eta, jacobi_theta

HALF = Fraction(1, 2)


def _flag(x) -> Fraction:
    f = Fraction(x).limit_denominator(4)
    if f not in (0, HALF):
        raise DomainError(f"sector flags must be 0 or 1/2, got {x!r}")
    return f


@dataclass(frozen=True)
class Sector:
    """(eps, eps'); see the module docstring for the meaning of each flag."""

    epsilon: Fraction
    epsilon_prime: Fraction

    def __post_init__(self):
        object.__setattr__(self, "epsilon", _flag(self.epsilon))
        object.__setattr__(self, "epsilon_prime", _flag(self.epsilon_prime))

    @property
    def eps(self) -> float:
        return float(self.epsilon)

    @property
    def eps_p(self) -> float:
        return float(self.epsilon_prime)

    def swapped(self) -> "Sector":
        return Sector(self.epsilon_prime, self.epsilon)

    @classmethod
    def all(cls) -> list["Sector"]:
        return [cls(e, ep) for e in (0, HALF) for ep in (0, HALF)]


class Twist(enum.Enum):
    XI = "xi"
    XI_PRIME = "xi_prime"


class Family(enum.Enum):
    TYPE1 = 1
    TYPE2 = 2


def _sector(s) -> Sector:
    if isinstance(s, Sector):
        return s
    return Sector(*s)


def ex(x: complex) -> complex:
    return cmath.exp(TWO_PI_I * x)


def _theta_kind(sector: Sector) -> str:
    return f"{int(1 - 2 * sector.epsilon_prime)}{int(1 - 2 * sector.epsilon)}"


def _denom_untwisted_form(sector: Sector, tau: complex, z1: complex, z2: complex, t: complex, policy) -> complex:
    kind = _theta_kind(sector)
    d1 = jacobi_theta(kind, tau, z1, policy)
    d2 = jacobi_theta(kind, tau, z2, policy)
    guard_nonzero(d1, 1.0, policy, f"theta{kind}(tau, z1) in the sl(2|1) denominator")
    guard_nonzero(d2, 1.0, policy, f"theta{kind}(tau, z2) in the sl(2|1) denominator")
    # overall -i: the theta form must agree with the infinite product
    sign = -1 if (2 * sector.epsilon * (1 - 2 * sector.epsilon_prime)) % 2 else 1
    return -sign * 1j * ex(t) * eta(tau, policy) ** 3 * jacobi_theta("11", tau, z1 + z2, policy) / (d1 * d2)


def denom_sl21(sector, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY, twist: Twist = Twist.XI) -> complex:
    """Normalized affine (super)denominator.

    Under ``XI_PRIME`` the twisted denominators are defined as the untwisted
    ones precomposed with the translation t_{-xi'}; this is evaluated
    literally rather than through the closed form.
    """
    sector = _sector(sector)
    tau = as_point(tau).tau
    pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
    if Twist(twist) is Twist.XI_PRIME and sector.epsilon_prime == HALF:
        base = Sector(sector.epsilon, 0)
        z1, z2, t = pt.z1 + tau / 2, pt.z2 - tau / 2, pt.t + (pt.z2 - pt.z1) / 2 - tau / 4
        return _denom_untwisted_form(base, tau, z1, z2, t, policy)
    return _denom_untwisted_form(sector, tau, pt.z1, pt.z2, pt.t, policy)


def _coprime_check(M: int, m: int) -> None:
    if M < 1:
        raise LabelError(f"M must be a positive integer, got {M}")
    if m < 0:
        raise LabelError(f"m must be nonnegative, got {m}")
    if m > 0 and math.gcd(M, 2 * m + 2) != 1:
        raise LabelError(f"gcd(M, 2m+2) must be 1 when m > 0; got M={M}, m={m}")


def psi(M: int, m: int, eps, j, k, eps_prime, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY,
        modified: bool = True) -> complex:
    """q^{(m+1)jk/M} e((m+1)(k z1 + j z2)/M) F(M tau, z1 + j tau + eps, z2 + k tau + eps, t/M).

    F is the completed numerator when ``modified`` and the meromorphic one
    otherwise. (j, k) may be any representatives in eps' + Z.
    """
    _coprime_check(int(M), int(m))
    eps_prime = _flag(eps_prime)
    eps = float(_flag(eps))
    jj, kk = Fraction(j).limit_denominator(4), Fraction(k).limit_denominator(4)
    if (jj - eps_prime).denominator != 1 or (kk - eps_prime).denominator != 1:
        raise LabelError(f"indices must lie in eps' + Z; got j={j}, k={k}, eps'={eps_prime}")
    j, k = float(jj), float(kk)
    tau = as_point(tau).tau
    pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
    w = m + 1
    inner = TorusPoint(pt.z1 + j * tau + eps, pt.z2 + k * tau + eps, pt.t / M)
    f = phi_tilde if modified else phi
    return ex(w * j * k * tau / M + w * (k * pt.z1 + j * pt.z2) / M) * f(m, M * tau, inner, policy)


@dataclass(frozen=True)
class AdmissibleWeight:
    """Lambda = m0 Lambda_0 + m1 Lambda_1 + m2 Lambda_2 of level (m+1)/M - 1."""

    family: Family
    j: int
    k: int
    m0: Fraction
    m1: Fraction
    m2: Fraction


def admissible_labels(M: int, m: int, family) -> list[AdmissibleWeight]:
    """Index set of one family of principal admissible weights with their coefficients."""
    M, m = int(M), int(m)
    if M < 1:
        raise LabelError(f"M must be positive, got {M}")
    family = Family(family) if not isinstance(family, Family) else family
    r = Fraction(m + 1, M)
    out = []
    if family is Family.TYPE1:
        for j in range(M):
            for k in range(M - j):
                out.append(AdmissibleWeight(family, j, k, (j + k + 1) * r - 1, -j * r, -k * r))
    else:
        for j in range(1, M + 1):
            for k in range(1, M + 1 - j):
                out.append(AdmissibleWeight(family, j, k, -((j + k - 1) * r + 1), j * r, k * r))
    return out


@dataclass(frozen=True)
class SL21Label:
    """One modified (super)character, indexed by its numerator indices (j, k) in eps' + Z.

    ``sign`` carries the overall sign some weights pick up under the
    ``XI_PRIME`` convention.
    """

    M: int
    m: int
    j: Fraction
    k: Fraction
    sector: Sector
    twist: Twist = Twist.XI
    sign: int = 1

    def __post_init__(self):
        _coprime_check(int(self.M), int(self.m))
        object.__setattr__(self, "sector", _sector(self.sector))
        object.__setattr__(self, "twist", Twist(self.twist))
        j = Fraction(self.j).limit_denominator(4)
        k = Fraction(self.k).limit_denominator(4)
        ep = self.sector.epsilon_prime
        if (j - ep).denominator != 1 or (k - ep).denominator != 1:
            raise LabelError(f"indices must lie in eps' + Z; got ({self.j}, {self.k}) with eps'={ep}")
        if not (-1 < j < self.M and -1 < k < self.M):
            raise LabelError(f"indices ({j}, {k}) outside the window [0, M) (or -1/2 for the shifted twist)")
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    @property
    def level(self) -> Fraction:
        return Fraction(self.m + 1, self.M) - 1

    @classmethod
    def from_weight(cls, M: int, m: int, family, j: int, k: int, sector, twist=Twist.XI) -> "SL21Label":
        """Label of the character of Lambda^{(family)}_{j,k}."""
        sector = _sector(sector)
        twist = Twist(twist)
        family = Family(family) if not isinstance(family, Family) else family
        ep = sector.epsilon_prime
        if family is Family.TYPE1:
            if not (0 <= j and 0 <= k and j + k <= M - 1):
                raise LabelError(f"type-1 weight needs 0 <= j, k and j + k <= M-1; got ({j}, {k})")
            if twist is Twist.XI:
                return cls(M, m, j + ep, k + ep, sector, twist)
            return cls(M, m, j + ep, k - ep, sector, twist)
        if not (1 <= j and 1 <= k and j + k <= M):
            raise LabelError(f"type-2 weight needs 1 <= j, k and j + k <= M; got ({j}, {k})")
        if twist is Twist.XI:
            return cls(M, m, M + ep - j, M + ep - k, sector, twist)
        return cls(M, m, M + ep - j, M - ep - k, sector, twist, sign=-1)

    def numerator(self, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY, modified: bool = True) -> complex:
        return self.sign * psi(self.M, self.m, self.sector.epsilon, self.j, self.k, self.sector.epsilon_prime,
                               tau, pt, policy, modified)


def char_tilde_sl21(label: SL21Label, tau, pt, policy: SeriesPolicy = DEFAULT_POLICY, modified: bool = True) -> complex:
    """Modified normalized (super)character: numerator over the matching denominator."""
    pt = pt if isinstance(pt, TorusPoint) else TorusPoint(*pt)
    den = denom_sl21(label.sector, tau, pt, policy, label.twist)
    guard_nonzero(den, 1.0, policy, "sl(2|1) denominator")
    return label.numerator(tau, pt, policy, modified) / den
