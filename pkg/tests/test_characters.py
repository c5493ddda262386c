import cmath
import math
from fractions import Fraction

import pytest
from conftest import close

from mocktheta.a11_chars import (
    A11Label,
    DKind,
    LevelSign,
    PhiNumerator,
    PsiNumerator,
    apply_D,
    char_tilde_a11,
    labels_a11,
    phi_a11,
)
from mocktheta.mock import TorusPoint
from mocktheta.numerics import ContractError, LabelError
from mocktheta.sl21_chars import (
    HALF,
    Family,
    Sector,
    SL21Label,
    Twist,
    admissible_labels,
    char_tilde_sl21,
    denom_sl21,
    psi,
)

TAU = 0.13 + 1.1j
Z1, Z2, T = 0.21 + 0.07j, -0.17 + 0.12j, 0.1 + 0.05j


def wirtinger_d0(f, z1, z2, h=1e-4):
    """(1/2 pi i)(d/dz1 - d/dz2) of f(z1, z2) from fourth-order central differences."""

    def d(g, z):
        def cd(step):
            return (-g(z + 2 * step) + 8 * g(z + step) - 8 * g(z - step) + g(z - 2 * step)) / (12 * abs(step))

        return (cd(h) - 1j * cd(1j * h)) / 2

    dz1 = d(lambda w: f(w, z2), z1)
    dz2 = d(lambda w: f(z1, w), z2)
    return (dz1 - dz2) / (2j * math.pi)


# ---------------------------------------------------------------- sl(2|1)


@pytest.mark.parametrize("M", [2, 3, 5])
def test_admissible_label_counts(M):
    assert len(admissible_labels(M, 1 if M % 2 else 0, Family.TYPE1)) == M * (M + 1) // 2
    assert len(admissible_labels(M, 0, Family.TYPE2)) == M * (M - 1) // 2


def test_admissible_weight_level():
    for w in admissible_labels(3, 1, Family.TYPE1) + admissible_labels(3, 1, Family.TYPE2):
        assert w.m0 + w.m1 + w.m2 == Fraction(2, 3) - 1


def test_sl21_label_validation():
    with pytest.raises(LabelError):
        SL21Label(4, 1, 0, 0, Sector(0, 0))
    with pytest.raises(LabelError):
        SL21Label(3, 1, 0, 0, Sector(0, HALF))
    with pytest.raises(LabelError):
        SL21Label.from_weight(3, 1, Family.TYPE2, 0, 1, Sector(0, 0))


def test_second_twist_type_two_sign():
    lab = SL21Label.from_weight(3, 1, Family.TYPE2, 1, 1, Sector(HALF, HALF), Twist.XI_PRIME)
    assert lab.sign == -1 and (lab.j, lab.k) == (Fraction(5, 2), Fraction(3, 2))


def test_denominator_twists_differ_by_sign_only_in_one_sector():
    pt = TorusPoint(Z1, Z2, T)
    for s in Sector.all():
        ratio = denom_sl21(s, TAU, pt, twist=Twist.XI_PRIME) / denom_sl21(s, TAU, pt)
        expected = -1 if (s.epsilon, s.epsilon_prime) == (HALF, HALF) else 1
        assert close(ratio, expected, 1e-12)


def test_level_zero_modification_is_trivial():
    pt = TorusPoint(Z1, Z2, T)
    for s in Sector.all():
        lab = SL21Label(3, 0, s.epsilon_prime, 1 + s.epsilon_prime, s)
        assert char_tilde_sl21(lab, TAU, pt) == char_tilde_sl21(lab, TAU, pt, modified=False)


def test_psi_rejects_off_lattice_indices():
    with pytest.raises(LabelError):
        psi(3, 1, 0, HALF, 0, 0, TAU, TorusPoint(Z1, Z2))


# ---------------------------------------------------------------- A(1|1)


def test_negative_level_square_for_two():
    labs = labels_a11(2, 1, LevelSign.NEGATIVE, Sector(HALF, HALF))
    assert sorted(l.weight_indices() for l in labs) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert sorted(l.family for l in labs) == [1, 1, 3, 4]
    assert {l.weight_indices(): l.eps_s for l in labs}[(1, 0)] == -1


def test_a11_label_validation():
    with pytest.raises(LabelError):
        A11Label(2, 2, LevelSign.POSITIVE, 0, 0, Sector(0, 0))
    with pytest.raises(LabelError):
        A11Label(3, 1, LevelSign.POSITIVE, 0, 3, Sector(0, 0))


@pytest.mark.parametrize("modified", [False, True])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_numerator_d0_matches_finite_differences(m, modified):
    f = PhiNumerator(m, modified)
    analytic = f.d0(TAU, TorusPoint(Z1, Z2, T))
    numeric = wirtinger_d0(lambda a, b: f.value(TAU, TorusPoint(a, b, T)), Z1, Z2)
    assert close(analytic, numeric, 1e-9)


def test_psi_numerator_d0_matches_finite_differences():
    f = PsiNumerator(3, 1, HALF, Fraction(1, 2), Fraction(3, 2))
    analytic = f.d0(TAU, TorusPoint(Z1, Z2, T))
    numeric = wirtinger_d0(lambda a, b: f.value(TAU, TorusPoint(a, b, T)), Z1, Z2)
    assert close(analytic, numeric, 1e-9)


def test_double_pole_series_is_d0_of_lower_numerator():
    pt = TorusPoint(Z1, Z2, T)
    numeric = wirtinger_d0(lambda a, b: PhiNumerator(1, False).value(TAU, TorusPoint(a, b, T)), Z1, Z2)
    assert close(phi_a11(2, TAU, pt), numeric, 1e-9)


@pytest.mark.parametrize("eps", [0, HALF])
def test_canonical_reduction_agrees_with_literal_indices(eps):
    pt = TorusPoint(Z1, Z2, T)
    for j, k in ((4, 1), (1, 5), (-2, 1), (4, 4)):
        lit = PsiNumerator(3, 1, eps, j, k, canonical=False).value(TAU, pt)
        red = PsiNumerator(3, 1, eps, j, k).value(TAU, pt)
        assert close(lit, red, 1e-10)


def test_numerator_index_periodicity_sign():
    pt = TorusPoint(Z1, Z2, T)
    base = PsiNumerator(3, 1, HALF, 1, 2, canonical=False).value(TAU, pt)
    shifted = PsiNumerator(3, 1, HALF, 4, 2, canonical=False).value(TAU, pt)
    assert close(shifted, base, 1e-11)  # (-1)^{2 eps (m+1)} = +1 at m = 1
    base0 = PsiNumerator(3, 0, HALF, 1, 2, canonical=False).value(TAU, pt)
    shifted0 = PsiNumerator(3, 0, HALF, 4, 2, canonical=False).value(TAU, pt)
    assert close(shifted0, -base0, 1e-11)


def test_apply_D_requires_evaluator_contract():
    with pytest.raises(ContractError):
        apply_D(DKind.D0, object(), TAU, TorusPoint(Z1, Z2))


def test_d1_adds_t_derivative_term():
    f = PhiNumerator(1)
    pt = TorusPoint(Z1, Z2, T)
    d1 = apply_D(DKind.D1, f, TAU, pt)
    d0 = apply_D(DKind.D0, f, TAU, pt)
    assert close(d1, d0 - (Z1 - Z2) / (2 * TAU) * 2 * f.value(TAU, pt), 1e-14)


def test_negative_level_character_finite():
    lab = labels_a11(3, 1, LevelSign.NEGATIVE, Sector(HALF, HALF))[0]
    assert cmath.isfinite(char_tilde_a11(lab, TAU, Z1, Z2, T))
