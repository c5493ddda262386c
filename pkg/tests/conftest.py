import cmath
import math

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("repo", max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

taus = st.builds(complex, st.floats(-0.45, 0.45), st.floats(0.6, 1.6))
zs = st.builds(complex, st.floats(-0.5, 0.5), st.floats(-0.3, 0.3))
reals = st.floats(-3.0, 3.0, allow_nan=False)


def close(a, b, tol):
    """Scale-relative closeness, the same metric the identity harness uses."""
    a, b = complex(a), complex(b)
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def away_from_lattice(z, tau, guard=0.05):
    """True when z is at least ``guard`` from Z + Z tau."""
    n = round(z.imag / tau.imag)
    w = z - n * tau
    return min(abs(w - round(w.real)), abs(w - round(w.real) - 1), abs(w - round(w.real) + 1)) > guard


@pytest.fixture
def point():
    return 0.13 + 1.1j, 0.21 + 0.07j, -0.17 + 0.12j, 0.1 + 0.05j


__all__ = ["taus", "zs", "reals", "close", "away_from_lattice", "ACCEPTANCE_LINES", "cmath", "math"]


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
