import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from mocktheta.numerics import (
    DomainError,
    EvaluationError,
    ModularPoint,
    PolicyError,
    SeriesPolicy,
    choose_truncation,
    contour_integral,
    gauss_error,
    principal_sqrt,
)

# erf(sqrt(pi)) to 16 digits (mpmath, 30-digit working precision)
E_AT_ONE = 0.9878111178151971


def test_gauss_error_zero_and_oddness():
    assert gauss_error(0.0) == 0.0
    assert gauss_error(0.7) + gauss_error(-0.7) == pytest.approx(0.0, abs=1e-15)


def test_gauss_error_at_one_frozen():
    assert gauss_error(1.0) == pytest.approx(E_AT_ONE, abs=1e-15)


def test_gauss_error_matches_adaptive_quadrature():
    direct, _ = quad(lambda u: 2 * math.exp(-math.pi * u * u), 0.0, 1.0, epsabs=1e-14)
    assert gauss_error(1.0) == pytest.approx(direct, abs=1e-12)


@given(st.floats(-8, 8))
def test_gauss_error_odd_bounded(x):
    assert abs(gauss_error(x) + gauss_error(-x)) < 1e-14
    assert abs(gauss_error(x)) <= 1.0


@given(st.floats(-5, 5), st.floats(1e-3, 2))
def test_gauss_error_increasing(x, dx):
    assert gauss_error(x + dx) >= gauss_error(x)


def test_gauss_error_rejects_nonfinite():
    with pytest.raises(DomainError):
        gauss_error(float("nan"))


def test_choose_truncation_examples():
    assert choose_truncation(math.exp(-2 * math.pi), 1, 1e-12) <= 3
    assert choose_truncation(0.5, 1, 1e-12) == 7


@given(st.floats(0.01, 0.95), st.floats(0.1, 4), st.floats(1e-15, 1e-3))
def test_choose_truncation_is_minimal_and_monotone(abs_q, w, tol):
    n = choose_truncation(abs_q, w, tol)
    target = math.log(tol) + math.log1p(-abs_q)
    assert w * n * n * math.log(abs_q) < target
    if n > 1:
        assert not w * (n - 1) ** 2 * math.log(abs_q) < target
    assert choose_truncation(abs_q, 2 * w, tol) <= n


def test_choose_truncation_rejects_bad_nome():
    with pytest.raises(DomainError):
        choose_truncation(1.0, 1, 1e-12)


def test_contour_integral_gaussian():
    g = lambda x: np.exp(-math.pi * x * x)  # noqa: E731
    assert abs(contour_integral(g, 0.0) - 1) < 1e-10
    assert abs(contour_integral(g, 0.5) - 1) < 1e-10
    assert abs(contour_integral(lambda x: x * np.exp(-math.pi * x * x), 0.0)) < 1e-10


@given(st.floats(-0.8, 0.8))
def test_contour_shift_independence(s):
    g = lambda x: np.exp(-math.pi * x * x + 2j * x)  # noqa: E731
    assert abs(contour_integral(g, s) - contour_integral(g, 0.0)) < 1e-10


def test_contour_integral_reports_bad_node():
    with pytest.raises(EvaluationError):
        contour_integral(lambda x: np.where(x.real > 0, np.inf, 1.0), 0.0)


def test_policy_validation():
    for bad in ({"trunc_radius": 0}, {"tol": 0}, {"pole_guard": -1}, {"quad_nodes": 8}, {"quad_halfwidth": 0}):
        with pytest.raises(PolicyError):
            SeriesPolicy(**bad)
    p = SeriesPolicy()
    assert p.refined().trunc_radius == 2 * p.trunc_radius and p.refined().quad_nodes == 2 * p.quad_nodes


def test_modular_point_domain():
    with pytest.raises(DomainError):
        ModularPoint(0.3 - 0.1j)
    assert ModularPoint(1j).abs_q == pytest.approx(math.exp(-2 * math.pi))


def test_principal_sqrt_branch():
    assert principal_sqrt(-1 + 0j) == pytest.approx(1j)
    assert principal_sqrt(-4 - 1e-300j).real >= 0
