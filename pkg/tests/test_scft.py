import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from conftest import close

from mocktheta.a11_chars import _family
from mocktheta.numerics import LabelError
from mocktheta.scft_chars import (
    NS,
    R,
    N2Label,
    N4Label,
    n2_char_indexed,
    n2_labels,
    n2_numbers,
    n2_smatrix,
    n2_window,
    n4_char_indexed,
    n4_coefficient,
    n4_labels,
    n4_numbers,
    n4_numbers_closed,
    n4_numerator,
    n4_tilde_indices,
    n4_window,
    scft_sector,
    sector_name,
)
from mocktheta.sl21_chars import HALF, Sector

TAU, Z, T = 0.13 + 1.1j, 0.21 + 0.07j, 0.1 + 0.05j


def sample_taus(n=40, seed=3):
    rng = np.random.default_rng(seed)
    return rng.uniform(-0.5, 0.5, n) + 1j * rng.uniform(0.8, 1.6, n)


def fit_row(lhs, basis):
    """Least-squares coefficients c with lhs(tau_i) = sum_b c_b basis_b(tau_i)."""
    A = np.array(basis, dtype=complex).T
    coef, *_ = np.linalg.lstsq(A, np.array(lhs, dtype=complex), rcond=None)
    return coef


# ---------------------------------------------------------------- N = 2


def test_n2_central_charge_and_small_table():
    labs = n2_labels(3, 0, scft_sector("NS"))
    assert {l.central_charge for l in labs} == {1}
    got = sorted((n2_numbers(l).h, n2_numbers(l).s) for l in labs)
    assert got == [(0, 0), (Fraction(1, 6), Fraction(-1, 3)), (Fraction(1, 6), Fraction(1, 3))]


def test_n2_label_validation():
    with pytest.raises(LabelError):
        N2Label(4, 1, HALF, HALF, scft_sector("NS"))
    with pytest.raises(LabelError):
        N2Label(3, 0, 2, 1, scft_sector("R"))


@pytest.mark.parametrize("M,m", [(3, 0), (5, 0), (3, 1), (5, 1), (7, 2)])
def test_n2_numbers_against_sl21_reduction(M, m):
    """Reduce the admissible weight attached to each label and compare both numbers."""
    r = Fraction(m + 1, M)
    for name in (NS, R):
        for lab in n2_labels(M, m, scft_sector(name)):
            jp, kp = (lab.j - HALF, lab.k - HALF) if name == NS else (lab.j - 1, lab.k)
            m1, m2 = -r * jp, -r * kp
            base = M * m1 * m2 / (m + 1)
            got = n2_numbers(lab)
            if name == NS:
                assert got.h == base - (m1 + m2) / 2
                assert got.s == m1 - m2
            else:
                assert got.h == base - m2 - r / 4 - Fraction(1, 8)
                assert got.s - (m1 - m2 - r - HALF) == 1


@pytest.mark.parametrize("M,m", [(3, 1), (5, 0)])
def test_n2_t_law_has_finite_order(M, m):
    for s in Sector.all():
        for j, k in n2_window(M, s):
            a = n2_char_indexed(M, m, s, j, k, TAU + 8 * M, Z)
            b = n2_char_indexed(M, m, s, j, k, TAU, Z)
            assert close(a, b, 1e-9)


@pytest.mark.parametrize("M,m", [(3, 1), (5, 0)])
def test_n2_smatrix_recovered_by_fit(M, m):
    c = 3 * (1 - Fraction(2 * m + 2, M))
    taus = sample_taus()
    for s in (Sector(0, HALF), Sector(HALF, 0)):
        dual = s.swapped()
        targets = n2_window(M, dual)
        basis = [[n2_char_indexed(M, m, dual, a, b, t, Z) for t in taus] for a, b in targets]
        for jk in n2_window(M, s):
            lhs = [n2_char_indexed(M, m, s, *jk, -1 / t, Z / t) / cmath.exp(1j * math.pi * float(c) * Z * Z / (3 * t))
                   for t in taus]
            coef = fit_row(lhs, basis)
            expect = [n2_smatrix(M, m, s, jk, ab) for ab in targets]
            assert np.allclose(coef, expect, atol=1e-6)


def test_n2_smatrix_window_errors():
    s = scft_sector("NS", supercharacter=True)
    with pytest.raises(LabelError):
        n2_smatrix(3, 1, s, (HALF, HALF), (HALF, HALF))  # the target window is integral
    with pytest.raises(LabelError):
        n2_smatrix(3, 1, s, (5, 5), (HALF, HALF))


# ---------------------------------------------------------------- N = 4


def test_n4_central_charge():
    assert {l.central_charge for l in n4_labels(2, 1, scft_sector("NS"))} == {-3}
    with pytest.raises(LabelError):
        N4Label(4, 2, HALF, HALF, scft_sector("NS"))


def _weights(M, m, fam, j, k):
    K = Fraction(-m, M)
    if fam == 1:
        k1, k2 = j, k - j
        return -k1 * K, k2 * K
    if fam == 2:
        k1 = M - j
        k2 = M - k1 - k
        return k1 * K, -(k2 * K + 2)
    if fam == 3:
        k1, k2 = k, j - k
        return -(1 + (k1 + k2) * K), -(2 + k2 * K)
    k1, k2 = M - k, k - j
    return (k1 + k2) * K + 1, k2 * K


@pytest.mark.parametrize("M,m", [(2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (7, 2)])
def test_n4_numbers_against_weight_route(M, m):
    for name in (NS, R):
        sec = scft_sector(name)
        for j in range(M):
            for k in range(M):
                fam = _family(M, j, k)
                m1, m2 = _weights(M, m, fam, j, k)
                h = -Fraction(M) * m1 * (m1 - m2 - 1) / m - m1
                if name == NS:
                    h, s = h + m2 / 2, m2
                else:
                    h, s = h - Fraction(M - m, 4 * M), -m2 - Fraction(M - m, M)
                jt, kt = n4_tilde_indices(M, fam, j, k, sec)
                got = n4_numbers_closed(M, m, fam, jt, kt, sec)
                assert (got.h, got.s) == (h, s), (name, j, k, fam)


@pytest.mark.parametrize("M,m", [(2, 1), (3, 1), (5, 2)])
def test_first_and_fourth_families_coincide_after_shift(M, m):
    for name in (NS, R):
        sec = scft_sector(name)
        for k1 in range(M):
            for k2 in range(M):
                a = n4_numbers_closed(M, m, 1, *_tilde(M, 1, k1, k2, sec), sec)
                b = n4_numbers_closed(M, m, 4, *_tilde(M, 4, k1 + 1, k2, sec), sec)
                assert (a.h, a.s) == (b.h, b.s)


def _tilde(M, fam, k1, k2, sec):
    """(jt, kt) from the (k1, k2) parametrisation of the first or fourth family."""
    j, k = (k1, k1 + k2) if fam == 1 else (M - k1 - k2, M - k1)
    if sector_name(sec) == NS:
        return j + HALF, k + HALF
    return Fraction(k + 1), Fraction(j)


def test_label_family_matches_numbers():
    for lab in n4_labels(3, 1, scft_sector("R")):
        assert n4_numbers(lab) == n4_numbers_closed(3, 1, lab.family, lab.jt, lab.kt, lab.sector)


@pytest.mark.parametrize("eps", [0, HALF])
def test_level_one_numerator_vanishes_on_boundary(eps):
    for jt in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)):
        kt = 1 - jt
        assert abs(n4_numerator(1, 1, eps, jt, -kt, TAU, Z, T)) < 1e-12


@pytest.mark.parametrize("M,m", [(2, 1), (3, 2)])
def test_n4_smatrix_recovered_by_fit(M, m):
    taus = sample_taus()
    for s in (Sector(0, HALF), Sector(HALF, HALF)):
        dual = s.swapped()
        targets = n4_window(M, dual)
        basis = [[n4_char_indexed(M, m, dual, a, b, t, Z, T) for t in taus] for a, b in targets]
        for jk in n4_window(M, s):
            lhs = [n4_char_indexed(M, m, s, *jk, -1 / t, Z / t, T + Z * Z / t) / t for t in taus]
            coef = fit_row(lhs, basis)
            expect = [n4_coefficient(M, m, s, jk, ab) for ab in targets]
            assert np.allclose(coef, expect, atol=1e-6)


@pytest.mark.parametrize("M,m", [(2, 1), (3, 1), (3, 2)])
def test_reflected_coefficients_are_negatives(M, m):
    for s in Sector.all():
        for jk in n4_window(M, s):
            for a, b in n4_window(M, s.swapped()):
                x = n4_coefficient(M, m, s, jk, (a, b))
                y = n4_coefficient(M, m, s, jk, (M - b, M - a))
                assert abs(x + y) <= 1e-12 * max(1.0, abs(x))
