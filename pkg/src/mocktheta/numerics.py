"""Complex-arithmetic kernel shared by every evaluator.

Holds the upper-half-plane point type, the truncation/quadrature policy,
the scaled error function and a fixed-node line quadrature.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.special import erf

TWO_PI_I = 2j * math.pi
SQRT_PI = math.sqrt(math.pi)


class MockThetaError(Exception):
    """Base class for every error raised by the library."""


class DomainError(MockThetaError, ValueError):
    pass


class PoleError(MockThetaError):
    """Raised when an argument sits within ``pole_guard`` of a pole or zero locus."""

    def __init__(self, message: str, locus: str = "", distance: float = float("nan")):
        super().__init__(message)
        self.locus = locus
        self.distance = distance


class EvaluationError(MockThetaError):
    pass


class PolicyError(MockThetaError):
    pass


class LabelError(MockThetaError, ValueError):
    pass


class ContractError(MockThetaError, TypeError):
    """An operator received an object that does not provide what it needs."""


@dataclass(frozen=True)
class ModularPoint:
    tau: complex

    def __post_init__(self):
        tau = complex(self.tau)
        if not (math.isfinite(tau.real) and math.isfinite(tau.imag)):
            raise DomainError(f"tau must be finite, got {tau}")
        if tau.imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
        object.__setattr__(self, "tau", tau)

    @property
    def q(self) -> complex:
        return cmath.exp(TWO_PI_I * self.tau)

    @property
    def abs_q(self) -> float:
        return math.exp(-2 * math.pi * self.tau.imag)


def as_point(tau) -> ModularPoint:
    return tau if isinstance(tau, ModularPoint) else ModularPoint(complex(tau))


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation and quadrature knobs.

    ``trunc_radius`` is a floor on every series radius; the actual radius also
    depends on ``tol`` through :func:`choose_truncation`.
    """

    trunc_radius: int = 4
    tol: float = 1e-12
    pole_guard: float = 1e-3
    quad_halfwidth: float = 8.0
    quad_nodes: int = 512

    def __post_init__(self):
        if int(self.trunc_radius) != self.trunc_radius or self.trunc_radius < 1:
            raise PolicyError("trunc_radius must be an integer >= 1")
        if not self.tol > 0:
            raise PolicyError("tol must be positive")
        if not self.pole_guard > 0:
            raise PolicyError("pole_guard must be positive")
        if not self.quad_halfwidth > 0:
            raise PolicyError("quad_halfwidth must be positive")
        if int(self.quad_nodes) != self.quad_nodes or self.quad_nodes < 16:
            raise PolicyError("quad_nodes must be an integer >= 16")

    def with_(self, **changes) -> "SeriesPolicy":
        return replace(self, **changes)

    def refined(self) -> "SeriesPolicy":
        """Doubled radius and node count, tighter tolerance."""
        return replace(
            self,
            trunc_radius=2 * self.trunc_radius,
            quad_nodes=2 * self.quad_nodes,
            tol=self.tol * 1e-2,
        )


DEFAULT_POLICY = SeriesPolicy()


def principal_sqrt(a: complex) -> complex:
    # cmath.sqrt already takes the principal branch, arg in (-pi, pi]
    return cmath.sqrt(complex(a))


def principal_power(a: complex, exponent: float) -> complex:
    a = complex(a)
    if a == 0:
        return 0j
    return cmath.exp(exponent * cmath.log(a))


def e(x):
    """exp(2 pi i x), scalar or array."""
    if isinstance(x, np.ndarray):
        return np.exp(TWO_PI_I * x)
    return cmath.exp(TWO_PI_I * x)


def gauss_error(x):
    """E(x) = 2 * integral_0^x exp(-pi u^2) du, computed as erf(sqrt(pi) x)."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("gauss_error requires finite input")
    out = erf(SQRT_PI * arr)
    return float(out) if out.ndim == 0 else out


def choose_truncation(abs_q: float, quadratic_weight: float, tol: float) -> int:
    """Smallest N >= 1 with abs_q**(w*N*N) < tol*(1-abs_q)."""
    if not 0 < abs_q < 1:
        raise DomainError(f"abs_q must lie in (0,1), got {abs_q}")
    if not quadratic_weight > 0:
        raise DomainError("quadratic_weight must be positive")
    if not tol > 0:
        raise DomainError("tol must be positive")
    log_q = math.log(abs_q)
    target = math.log(tol) + math.log1p(-abs_q)
    n = max(1, math.isqrt(max(0, int(target / (quadratic_weight * log_q)))))
    # fix up the float estimate with exact comparisons on either side
    while n > 1 and quadratic_weight * (n - 1) ** 2 * log_q < target:
        n -= 1
    while not quadratic_weight * n * n * log_q < target:
        n += 1
    return n


def gaussian_window(decay: float, drift: float, tol: float, floor: int = 1):
    """Integer range covering the bulk of sum_n exp(-decay*n^2 + drift*n).

    Returns an int numpy array centred at the peak drift/(2*decay). The
    radius is the truncation for the nome exp(-decay) at weight 1.
    """
    if not decay > 0:
        raise PolicyError("series decay rate must be positive")
    abs_q = math.exp(-decay)
    if abs_q >= 1.0:
        raise PolicyError("series decay rate underflows")
    radius = max(floor, choose_truncation(abs_q, 1.0, tol)) + 2
    centre = int(round(drift / (2 * decay)))
    return np.arange(centre - radius, centre + radius + 1)


def series_tol(policy: SeriesPolicy) -> float:
    return min(policy.tol, 1e-13) * 1e-3


def contour_integral(
    f: Callable[[np.ndarray], np.ndarray],
    s: float,
    policy: SeriesPolicy = DEFAULT_POLICY,
    decay: tuple[float, float] | None = None,
    spacing: float | None = None,
) -> complex:
    """Trapezoid rule for the integral of f over the horizontal line R + i*s.

    ``f`` takes an array of complex nodes. ``decay=(a, b)`` declares
    |f(x + i s)| <~ exp(-a x^2 + b |x|); the half-width is then chosen so the
    bound drops below ``tol`` at the ends. ``spacing`` caps the node spacing,
    which callers derive from the width of the pole-free strip around the line.
    """
    if decay is None:
        half = policy.quad_halfwidth
    else:
        a, b = decay
        if not a > 0:
            raise PolicyError("declared Gaussian decay rate must be positive")
        budget = -math.log(policy.tol * 1e-4)
        half = (b + math.sqrt(b * b + 4 * a * budget)) / (2 * a)
    nodes = policy.quad_nodes
    if spacing is not None and spacing > 0:
        nodes = max(nodes, int(math.ceil(2 * half / spacing)) + 1)
    x = np.linspace(-half, half, nodes)
    vals = np.asarray(f(x + 1j * s), dtype=complex)
    bad = ~np.isfinite(vals)
    if bad.any():
        node = complex(x[np.argmax(bad)] + 1j * s)
        raise EvaluationError(f"integrand not finite at node {node}")
    h = x[1] - x[0]
    return complex(h * (vals.sum() - 0.5 * (vals[0] + vals[-1])))


def lattice_distance(z: complex, tau: complex) -> tuple[float, complex]:
    """Distance from z to the lattice Z + Z*tau and the nearest lattice point."""
    z = complex(z)
    tau = complex(tau)
    b0 = z.imag / tau.imag
    best = (math.inf, 0j)
    for b in (math.floor(b0), math.ceil(b0)):
        w = z - b * tau
        for a in (math.floor(w.real), math.ceil(w.real)):
            d = abs(w - a)
            if d < best[0]:
                best = (d, a + b * tau)
    return best


def guard_lattice(z: complex, tau: complex, policy: SeriesPolicy, what: str) -> None:
    d, p = lattice_distance(z, tau)
    if d < policy.pole_guard:
        raise PoleError(
            f"{what}: argument {complex(z)} is {d:.3g} from lattice point {p} "
            f"(pole_guard {policy.pole_guard})",
            locus=f"{what} at {p}",
            distance=d,
        )


def guard_nonzero(value: complex, scale: float, policy: SeriesPolicy, what: str) -> None:
    if abs(value) < policy.pole_guard * max(scale, 1e-300):
        raise PoleError(f"{what}: divisor {value} below guard", locus=what, distance=abs(value))
