"""Theta functions, mock theta functions of rank one and two with their
real-analytic completions, and modified characters of admissible
sl(2|1)^, A(1|1)^, N=2 and N=4 modules.

``mocktheta.verify`` holds the registry of transformation laws checked as
numerical residuals; ``mocktheta.cli`` is the command-line front end.
"""

from .a11_chars import A11Label, DKind, LevelSign, PhiNumerator, PsiNumerator, apply_D, char_tilde_a11, denom_a11, labels_a11, phi_a11
from .mock import (
    MockIndex,
    QExpansion,
    TorusPoint,
    g_direct,
    g_via_h,
    h_zw,
    mu,
    phi,
    phi_add,
    phi_qexp,
    phi_tilde,
    r_zw,
    zwegers_R,
)
from .numerics import (
    DEFAULT_POLICY,
    ContractError,
    DomainError,
    EvaluationError,
    LabelError,
    MockThetaError,
    ModularPoint,
    PoleError,
    PolicyError,
    SeriesPolicy,
)
from .scft_chars import (
    NS,
    R,
    N2Label,
    N4Label,
    Numbers,
    n2_char_tilde,
    n2_denom,
    n2_labels,
    n2_numbers,
    n2_smatrix,
    n4_char_tilde,
    n4_denom,
    n4_labels,
    n4_numbers,
    n4_smatrix,
    scft_sector,
)
from .sl21_chars import Family, Sector, SL21Label, Twist, admissible_labels, char_tilde_sl21, denom_sl21, psi
from .theta import ThetaIndex, eta, jacobi_theta, theta_jm

__version__ = "0.1.0"
