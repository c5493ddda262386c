"""N=2 and N=4 superconformal denominators, modified characters, characteristic
numbers and S-matrices, obtained from the sl(2|1)^ and A(1|1)^ numerators by
quantum Hamiltonian reduction at the level of characters.

Sectors use the (eps, eps') pair of :class:`Sector`. Here eps' = 1/2 is the
Neveu-Schwarz sector and eps' = 0 the Ramond sector; eps = 1/2 means
character and eps = 0 supercharacter. :func:`scft_sector` builds sectors
from those names so callers never handle the flags directly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .a11_chars import DKind, PsiNumerator, _family, apply_D
from .mock import TorusPoint
from .numerics import DEFAULT_POLICY, TWO_PI_I, LabelError, SeriesPolicy, as_point, guard_nonzero
from .sl21_chars import HALF, Sector, _sector, psi
from .theta import eta, jacobi_theta

NS, R = "NS", "R"


def ex(x: complex) -> complex:
    return cmath.exp(TWO_PI_I * x)


def scft_sector(name: str, supercharacter: bool = False) -> Sector:
    name = name.upper()
    if name not in (NS, R):
        raise LabelError(f"sector name must be NS or R, got {name!r}")
    return Sector(0 if supercharacter else HALF, HALF if name == NS else 0)


def sector_name(sector) -> str:
    return NS if _sector(sector).epsilon_prime == HALF else R


def _kind(sector: Sector) -> str:
    return f"{int(1 - 2 * sector.epsilon_prime)}{int(1 - 2 * sector.epsilon)}"


def _parity(sector: Sector) -> int:
    """(1 - 2 eps)(1 - 2 eps'), which is 0 or 1."""
    return int((1 - 2 * sector.epsilon) * (1 - 2 * sector.epsilon_prime))


def _as_index(x) -> Fraction:
    return Fraction(x).limit_denominator(4)


# ---------------------------------------------------------------- N = 2


def n2_denom(sector, tau, z: complex, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    sector = _sector(sector)
    tau = as_point(tau).tau
    th = jacobi_theta(_kind(sector), tau, complex(z), policy)
    guard_nonzero(th, 1.0, policy, f"theta{_kind(sector)}(tau, z) in the N=2 denominator")
    return (-1) ** _parity(sector) * eta(tau, policy) ** 3 / th


def n2_window(M: int, sector) -> list[tuple[Fraction, Fraction]]:
    """Index pairs (j, k) in (eps' + Z>=0)^2 with j > 0 and j + k <= M - 1."""
    ep = _sector(sector).epsilon_prime
    out = []
    for a in range(M):
        for b in range(M):
            j, k = a + ep, b + ep
            if j > 0 and j + k <= M - 1:
                out.append((j, k))
    return out


@dataclass(frozen=True)
class N2Label:
    M: int
    m: int
    j: Fraction
    k: Fraction
    sector: Sector

    def __post_init__(self):
        M, m = int(self.M), int(self.m)
        if M < 2 or m < 0:
            raise LabelError(f"N=2 labels need M >= 2 and m >= 0; got M={M}, m={m}")
        if m > 0 and math.gcd(M, 2 * m + 2) != 1:
            raise LabelError(f"gcd(M, 2m+2) must be 1 when m > 0; got M={M}, m={m}")
        object.__setattr__(self, "sector", _sector(self.sector))
        j, k = _as_index(self.j), _as_index(self.k)
        if (j, k) not in n2_window(M, self.sector):
            raise LabelError(f"({j}, {k}) is not in the {sector_name(self.sector)} window for M={M}")
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    @property
    def central_charge(self) -> Fraction:
        return 3 * (1 - Fraction(2 * self.m + 2, self.M))


def n2_labels(M: int, m: int, sector) -> list[N2Label]:
    return [N2Label(M, m, j, k, sector) for j, k in n2_window(M, sector)]


def n2_char_indexed(M: int, m: int, sector, j, k, tau, z: complex, policy: SeriesPolicy = DEFAULT_POLICY,
                    modified: bool = True) -> complex:
    """Character for any (j, k) in eps' + Z; no window check."""
    sector = _sector(sector)
    z = complex(z)
    num = psi(M, m, sector.epsilon, _as_index(j), _as_index(k), sector.epsilon_prime, tau,
              TorusPoint(-z, z, 0j), policy, modified)
    return num / n2_denom(sector, tau, z, policy)


def n2_char_tilde(label: N2Label, tau, z: complex, policy: SeriesPolicy = DEFAULT_POLICY,
                  modified: bool = True) -> complex:
    return n2_char_indexed(label.M, label.m, label.sector, label.j, label.k, tau, z, policy, modified)


@dataclass(frozen=True)
class Numbers:
    c: Fraction
    h: Fraction
    s: Fraction


def n2_numbers(label: N2Label) -> Numbers:
    r = Fraction(label.m + 1, label.M)
    h = r * label.j * label.k - r / 4
    s = r * (label.k - label.j)
    if sector_name(label.sector) == R:
        h -= Fraction(1, 8)
        s += HALF
    return Numbers(label.central_charge, h, s)


def n2_smatrix(M: int, m: int, sector, jk, ab) -> complex:
    """S-matrix entry from (j, k) in the eps' window to (a, b) in the eps window."""
    sector = _sector(sector)
    j, k = map(_as_index, jk)
    a, b = map(_as_index, ab)
    if (j, k) not in n2_window(M, sector):
        raise LabelError(f"(j, k)=({j}, {k}) outside the source window")
    if (a, b) not in n2_window(M, sector.swapped()):
        raise LabelError(f"(a, b)=({a}, {b}) outside the target window")
    w = m + 1
    return ((-1j) ** _parity(sector) * 2 / M * cmath.exp(1j * math.pi * w * float((j - k) * (a - b)) / M)
            * math.sin(w * float((j + k) * (a + b)) * math.pi / M))


# ---------------------------------------------------------------- N = 4


def n4_denom(sector, tau, z: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    sector = _sector(sector)
    tau = as_point(tau).tau
    z = complex(z)
    th = jacobi_theta(_kind(sector), tau, z, policy)
    guard_nonzero(th, 1.0, policy, f"theta{_kind(sector)}(tau, z) in the N=4 denominator")
    return ex(-complex(t)) * eta(tau, policy) ** 3 * jacobi_theta("11", tau, 2 * z, policy) / (th * th)


def n4_numerator(M: int, m: int, eps, j, k, tau, z: complex, t: complex = 0j,
                 policy: SeriesPolicy = DEFAULT_POLICY, canonical: bool = True) -> complex:
    """D1 of the completed level-(m-1) numerator at z1 = z2 = z and -t."""
    f = PsiNumerator(int(M), int(m) - 1, Fraction(eps), _as_index(j), _as_index(k), canonical=canonical)
    z = complex(z)
    return apply_D(DKind.D1, f, tau, TorusPoint(z, z, -complex(t)), policy)


def n4_window(M: int, sector) -> list[tuple[Fraction, Fraction]]:
    """(jt, kt) in (eps' + Z)^2 with 0 < jt, jt + kt < M and 0 <= kt < M."""
    ep = _sector(sector).epsilon_prime
    out = []
    for a in range(M + 1):
        for b in range(M):
            jt, kt = a + ep, b + ep
            if 0 < jt and jt + kt < M and kt < M:
                out.append((jt, kt))
    return out


@dataclass(frozen=True)
class N4Label:
    M: int
    m: int
    jt: Fraction
    kt: Fraction
    sector: Sector

    def __post_init__(self):
        M, m = int(self.M), int(self.m)
        if M < 2 or m < 1:
            raise LabelError(f"N=4 labels need M >= 2 and m >= 1; got M={M}, m={m}")
        if math.gcd(M, m) != 1 or (m > 1 and math.gcd(M, 2 * m) != 1):
            raise LabelError(f"M and m must be coprime, and gcd(M, 2m) = 1 when m > 1; got M={M}, m={m}")
        object.__setattr__(self, "sector", _sector(self.sector))
        jt, kt = _as_index(self.jt), _as_index(self.kt)
        if (jt, kt) not in n4_window(M, self.sector):
            raise LabelError(f"({jt}, {kt}) is not in the {sector_name(self.sector)} window for M={M}")
        object.__setattr__(self, "jt", jt)
        object.__setattr__(self, "kt", kt)

    @property
    def central_charge(self) -> Fraction:
        return 6 * (Fraction(self.m, self.M) - 1)

    def weight_indices(self) -> tuple[int, int]:
        """(j, k) of the underlying A(1|1) weight in the square [0, M)^2."""
        if sector_name(self.sector) == NS:
            return int(self.jt - HALF), int(self.kt - HALF)
        return int(self.kt), int(self.jt) - 1

    @property
    def family(self) -> int:
        return _family(self.M, *self.weight_indices())


def n4_labels(M: int, m: int, sector) -> list[N4Label]:
    return [N4Label(M, m, jt, kt, sector) for jt, kt in n4_window(M, sector)]


def n4_char_indexed(M: int, m: int, sector, jt, kt, tau, z: complex, t: complex = 0j,
                    policy: SeriesPolicy = DEFAULT_POLICY, canonical: bool = True) -> complex:
    """Modified character for any (jt, kt) in eps' + Z; no window check."""
    sector = _sector(sector)
    num = n4_numerator(M, m, sector.epsilon, _as_index(jt), -_as_index(kt), tau, z, t, policy, canonical)
    den = n4_denom(sector, tau, z, t, policy)
    guard_nonzero(den, 1.0, policy, "N=4 denominator")
    return num / den


def n4_char_tilde(label: N4Label, tau, z: complex, t: complex = 0j, policy: SeriesPolicy = DEFAULT_POLICY) -> complex:
    return n4_char_indexed(label.M, label.m, label.sector, label.jt, label.kt, tau, z, t, policy)


def n4_tilde_indices(M: int, family: int, j: int, k: int, sector) -> tuple[Fraction, Fraction]:
    """(jt, kt) of the weight with square indices (j, k); ``family`` is not needed but checked."""
    if _family(M, j, k) != family:
        raise LabelError(f"(j, k)=({j}, {k}) belongs to family {_family(M, j, k)}, not {family}")
    if sector_name(sector) == NS:
        return j + HALF, k + HALF
    return Fraction(k + 1), Fraction(j)


def n4_numbers_closed(M: int, m: int, family: int, jt, kt, sector) -> Numbers:
    """Lowest energy and spin as closed forms in (jt, kt), one line per family."""
    K = Fraction(-m, M)
    jt, kt = _as_index(jt), _as_index(kt)
    c = 6 * (Fraction(m, M) - 1)
    ns = sector_name(sector) == NS
    shift = (K + 2) / 4 if ns else (K + 1) / 4
    if family in (1, 3):
        quad = K * jt * kt
        lin = (jt if family == 1 else kt) if ns else (kt if family == 1 else jt)
    elif family in (2, 4):
        quad = K * (M - jt) * (M - kt)
        lin = (M - jt if family == 2 else M - kt) if ns else (M - kt if family == 2 else M - jt)
    else:
        raise LabelError(f"family must be 1..4, got {family}")
    spin_shift = {(1, True): 0, (2, True): -2, (3, True): -2, (4, True): 0,
                  (1, False): -1, (2, False): 1, (3, False): 1, (4, False): -1}[(family, ns)]
    return Numbers(c, quad + lin - shift, K * (kt - jt) + spin_shift)


def n4_numbers(label: N4Label, family: int | None = None) -> Numbers:
    """Numbers of the module with this label, read through ``family`` (default: the label's own)."""
    fam = label.family if family is None else int(family)
    return n4_numbers_closed(label.M, label.m, fam, label.jt, label.kt, label.sector)


def n4_coefficient(M: int, m: int, sector, jk, ab) -> complex:
    """The tau-free S-matrix factor for any index pairs (no window check)."""
    sector = _sector(sector)
    jt, kt = map(float, map(_as_index, jk))
    at, bt = map(float, map(_as_index, ab))
    return (-(-1) ** _parity(sector) * 2j / M * cmath.exp(-1j * math.pi * m * (at - bt) * (jt - kt) / M)
            * math.sin(math.pi * m * (at + bt) * (jt + kt) / M))


def n4_smatrix(M: int, m: int, sector, jk, ab) -> complex:
    sector = _sector(sector)
    if tuple(map(_as_index, jk)) not in n4_window(M, sector):
        raise LabelError(f"(jt, kt)={tuple(jk)} outside the source window")
    if tuple(map(_as_index, ab)) not in n4_window(M, sector.swapped()):
        raise LabelError(f"(at, bt)={tuple(ab)} outside the target window")
    return n4_coefficient(M, m, sector, jk, ab)


__all__ = [
    "NS",
    "R",
    "N2Label",
    "N4Label",
    "Numbers",
    "n2_char_indexed",
    "n2_char_tilde",
    "n2_denom",
    "n2_labels",
    "n2_numbers",
    "n2_smatrix",
    "n2_window",
    "n4_char_indexed",
    "n4_char_tilde",
    "n4_coefficient",
    "n4_denom",
    "n4_labels",
    "n4_numbers",
    "n4_numbers_closed",
    "n4_numerator",
    "n4_smatrix",
    "n4_tilde_indices",
    "n4_window",
    "scft_sector",
    "sector_name",
]
