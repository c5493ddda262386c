import cmath
import math

import pytest
from conftest import close, taus, zs
from hypothesis import given

from mocktheta.numerics import DomainError, PoleError
from mocktheta.theta import (
    ThetaIndex,
    eta,
    jacobi_theta,
    jacobi_theta_product,
    mock_rank2,
    mock_rank2_s,
    theta_jm,
)

# mpmath at 30 digits: sum e^{-2 pi n^2}, pi^{1/4}/Gamma(3/4), Gamma(1/4)/(2 pi^{3/4})
THETA_01_AT_I = 1.0037348854877391
THETA00_AT_I = 1.0864348112133080
ETA_AT_I = 0.7682254223260567
# -mpmath.jtheta(1, pi z, e^{pi i tau}) at tau = 0.1+0.9i, z = 0.23+0.11i
THETA11_SAMPLE = -0.6640501258600890 - 0.3131466265100943j


def test_theta_index_reduces_j():
    assert ThetaIndex(5, 2).j == 1
    with pytest.raises(DomainError):
        ThetaIndex(0, 0)


def test_frozen_values():
    assert abs(theta_jm((0, 1), 1j) - THETA_01_AT_I) < 1e-13
    assert abs(jacobi_theta("00", 1j) - THETA00_AT_I) < 1e-13
    assert abs(eta(1j) - ETA_AT_I) < 1e-13
    assert abs(jacobi_theta("11", 0.1 + 0.9j, 0.23 + 0.11j) - THETA11_SAMPLE) < 1e-13


def test_theta_t_factor():
    tau, z = 0.2 + 0.9j, 0.1 + 0.05j
    assert close(theta_jm((1, 2), tau, z, 0.25), cmath.exp(1j * math.pi) * theta_jm((1, 2), tau, z), 1e-14)


def test_theta_reflection_at_origin():
    assert close(theta_jm((1, 2), 0.1 + 1j), theta_jm((-1, 2), 0.1 + 1j), 1e-14)


@given(taus, zs)
def test_jacobi_basic_relations(tau, z):
    assert abs(jacobi_theta("11", tau, 0j)) < 1e-14
    assert close(jacobi_theta("01", tau, z), jacobi_theta("00", tau, z + 0.5), 1e-12)
    assert close(jacobi_theta("11", tau, -z), -jacobi_theta("11", tau, z), 1e-12)


@given(taus, zs)
def test_triple_product_matches_series(tau, z):
    for kind in ("00", "01", "10", "11"):
        assert close(jacobi_theta_product(kind, tau, z), jacobi_theta(kind, tau, z), 1e-11)


def test_eta_against_pentagonal_series():
    tau = 0.17 + 0.8j
    q = cmath.exp(2j * math.pi * tau)
    series = sum((-1) ** n * q ** (n * (3 * n - 1) / 2) for n in range(-30, 31))
    assert close(eta(tau), cmath.exp(2j * math.pi * tau / 24) * series, 1e-14)


@given(taus)
def test_eta_modular(tau):
    assert close(eta(tau + 1), cmath.exp(1j * math.pi / 12) * eta(tau), 1e-12)
    assert close(eta(-1 / tau), cmath.sqrt(-1j * tau) * eta(tau), 1e-10)


def test_eta_s_at_i_over_2():
    tau = 0.5j
    assert close(eta(-1 / tau), cmath.sqrt(-1j * tau) * eta(tau), 1e-10)


def test_mock_rank2_pole_and_reindexing():
    tau = 0.1 + 1.0j
    with pytest.raises(PoleError):
        mock_rank2(1, 2, tau, -tau, 0.1j)
    # the a-sum written with a -> a + 1 absorbed into z1 -> z1 + tau
    z1, z2 = 0.21 + 0.05j, -0.13 + 0.02j
    shifted = mock_rank2(1, 2, tau, z1 + tau, z2)
    direct = mock_rank2(1, 2, tau, z1, z2)
    factor = cmath.exp(2j * math.pi * (-2 * z1 - z2 - tau))
    assert close(shifted, direct * factor, 1e-10)


def test_mock_rank2_defect_bounded_near_pole():
    tau = 0.1 + 1.0j
    vals = []
    for d in (1e-2, 1e-3, 2e-3):
        z1 = d * (1 + 1j)
        vals.append(abs(mock_rank2(1, 2, tau, z1, 0.1j) - mock_rank2_s(1, 2, tau, z1, 0.1j)))
    assert max(vals) < 100
