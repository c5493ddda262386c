import cmath
import math
from fractions import Fraction

import pytest
from conftest import away_from_lattice, close, taus, zs
from hypothesis import assume, given

from mocktheta.mock import (
    MockIndex,
    TorusPoint,
    g_direct,
    g_via_h,
    h_zw,
    mu,
    offset_set,
    phi,
    phi_add,
    phi_qexp,
    phi_tilde,
    phi_uv,
    r_zw,
    zwegers_R,
)
from mocktheta.numerics import DomainError, PoleError, SeriesPolicy
from mocktheta.theta import jacobi_theta


def test_mock_index_validation():
    with pytest.raises(DomainError):
        MockIndex(-1)


def test_torus_point_round_trip():
    pt = TorusPoint(0.375 + 0.125j, -0.25 + 0.0625j, 0.5j)
    back = TorusPoint.from_uv(pt.u, pt.v, pt.t)
    assert back == pt


def test_phi_equals_theta_times_appell_lerch():
    tau, z1, z2 = 1j, 0.31, 0.17
    lhs = phi(1, tau, TorusPoint(z1, z2))
    oracle = jacobi_theta("11", tau, z1 + z2) * mu(tau, z1, z2)
    assert close(lhs, oracle, 1e-10)


def test_mu_truncation_doubling():
    tau, z1, z2 = 1j, 0.31, 0.17
    base = mu(tau, z1, z2)
    assert close(base, mu(tau, z1, z2, SeriesPolicy().refined()), 1e-12)
    assert close(base, mu(tau, z2, z1), 1e-12)


@given(taus, zs, zs)
def test_phi_symmetries(tau, z1, z2):
    assume(away_from_lattice(z1, tau) and away_from_lattice(z2, tau))
    for m in (0, 1, 2):
        v = phi(m, tau, TorusPoint(z1, z2))
        assert close(phi(m, tau, TorusPoint(z2, z1)), v, 1e-10)
        assert close(phi(m, tau, TorusPoint(-z1, -z2)), -v, 1e-10)


@given(taus, zs, zs)
def test_phi_uv_parity(tau, u, v):
    pt = TorusPoint.from_uv(u, v)
    assume(away_from_lattice(pt.z1, tau) and away_from_lattice(pt.z2, tau))
    assert close(phi_uv(2, tau, -u, v), -phi_uv(2, tau, u, v), 1e-10)
    assert close(phi_uv(2, tau, u, -v), phi_uv(2, tau, u, v), 1e-10)


def test_phi_pole_is_reported():
    with pytest.raises(PoleError) as err:
        phi(1, 1j, TorusPoint(0.0, 0.2))
    assert err.value.locus


def test_level_zero_has_no_correction(point):
    tau, z1, z2, t = point
    pt = TorusPoint(z1, z2, t)
    assert phi_add(0, tau, pt) == 0
    assert phi_tilde(0, tau, pt) == phi(0, tau, pt)
    assert g_via_h(0, tau, pt.u, pt.v, t) == 0


def test_phi_add_level_one_closed_form(point):
    tau, z1, z2, _ = point
    pt = TorusPoint(z1, z2)
    closed = 0.5j * zwegers_R(tau, z1 - z2) * jacobi_theta("11", tau, z1 + z2)
    assert close(phi_add(1, tau, pt), closed, 1e-9)


def test_zwegers_R_real_at_origin():
    assert abs(zwegers_R(1j, 0j).imag) < 1e-12


def test_r_series_relations():
    tau, v = 0.1 + 1.0j, 0.13 + 0.07j
    for m in (1, 2):
        for j in range(-2, 3):
            assert close(r_zw(m, j, tau, v + 0.5), (-1) ** j * r_zw(m, j, tau, v), 1e-10)
            delta = 2 if j % (2 * m) == 0 else 0
            assert close(r_zw(m, j, tau, -v) + r_zw(m, -j, tau, v), delta, 1e-10)


def test_h_quadrature_refinement():
    tau, v = 0.1 + 1.0j, 0.13 + 0.07j
    pol = SeriesPolicy()
    fine = pol.with_(quad_nodes=2 * pol.quad_nodes)
    for j in (0, 1, 2):
        assert close(h_zw(2, j, tau, v, pol), h_zw(2, j, tau, v, fine), 1e-10)


def test_g_two_ways_at_random_points():
    import numpy as np

    rng = np.random.default_rng(7)
    for _ in range(20):
        tau = complex(rng.uniform(-0.45, 0.45), rng.uniform(0.6, 1.6))
        u, v = (complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3)) for _ in range(2))
        pt = TorusPoint.from_uv(u, v)
        if not (away_from_lattice(pt.z1, tau) and away_from_lattice(pt.z2, tau)):
            continue
        assert close(g_direct(1, tau, u, v), g_via_h(1, tau, u, v), 1e-6)


def test_qexp_constant_term_and_integrality():
    ex = phi_qexp(1, 3, 8)
    assert ex.coefficient(0, 0, 0) == 1
    for (p, a, b), c in ex.entries.items():
        assert isinstance(c, int)
        assert ex.coefficient(p, b, a) == c


def test_qexp_rejects_unknown_reading():
    with pytest.raises(DomainError):
        phi_qexp(1, 2, 4, reading="other")


def test_qexp_divides_reading_is_rejected_numerically():
    tau, z1, z2 = 0.05 + 1.2j, 0.31 + 0.3j, 0.17 + 0.25j
    value = phi(2, tau, TorusPoint(z1, z2))
    good = phi_qexp(2, 12, 60).evaluate(tau, z1, z2)
    bad = phi_qexp(2, 12, 60, reading="divides").evaluate(tau, z1, z2)
    assert close(good, value, 1e-8)
    assert not close(bad, value, 1e-3)


def test_offset_set():
    assert sorted(offset_set(3, 4)) == [-2, -1, 0]
    for M, p in ((3, 4), (5, 4), (5, 6), (7, 2)):
        b = offset_set(M, p)
        assert len(set(x % M for x in b)) == M
        # every integer splits as n' M + b p
        reps = {n_ * M + x * p for n_ in range(-10, 10) for x in b}
        assert set(range(-20, 20)) <= reps
    with pytest.raises(DomainError):
        offset_set(4, 2)


def test_qexp_rational_power_keys():
    ex = phi_qexp(1, Fraction(3, 2), 4)
    assert all(isinstance(k[0], Fraction) for k in ex.entries)
