"""Printed variants that the numerics reject, next to the forms the registry uses."""

import cmath
import math

import pytest
from conftest import close

from mocktheta.mock import r_zw
from mocktheta.scft_chars import n2_denom
from mocktheta.sl21_chars import HALF, Sector
from mocktheta.verify import check_identity

TAU, V = 0.13 + 1.1j, 0.21 + 0.07j


def ex(x):
    return cmath.exp(2j * math.pi * x)


@pytest.mark.parametrize("identity_id,params,consts", [
    ("SL21-DEN-S", {}, {"i_power": 1}),
    ("T7.3-S", {"M": 3, "m": 1}, {"sign": 1}),
    ("T9.2-S", {"M": 5, "m": 0}, {"gauss_div": 6}),
])
def test_printed_constant_fails_where_registered_one_passes(identity_id, params, consts):
    assert check_identity(identity_id, params, n_samples=6).passed
    bad = check_identity(identity_id, params, n_samples=6, consts=consts)
    assert bad.max_residual > 1e-2


@pytest.mark.parametrize("m", [1, 2])
def test_r_shift_constant_is_minus_two(m):
    for j in range(2 * m):
        lhs = r_zw(m, j, TAU, V) - ex(m * (2 * V - TAU)) * r_zw(m, j, TAU, V - TAU)
        gauss = ex(-(2 * m - j) ** 2 * TAU / (4 * m) + (2 * m - j) * V)
        assert close(lhs, -2 * gauss, 1e-12)
        assert abs(lhs - 2 * gauss) > abs(gauss)


def test_n2_denominator_t_phase_sits_on_ns():
    for s in Sector.all():
        target = Sector(abs(s.epsilon - s.epsilon_prime), s.epsilon_prime)
        ratio = n2_denom(s, TAU + 1, V) / n2_denom(target, TAU, V)
        expected = cmath.exp(1j * math.pi / 4) if s.epsilon_prime == HALF else 1
        assert close(ratio, expected, 1e-12)
