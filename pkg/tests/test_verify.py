import json

import pytest
from conftest import away_from_lattice

from mocktheta.numerics import DEFAULT_POLICY
from mocktheta.verify import (
    REGISTRY,
    SchemaError,
    UnknownIdentityError,
    check_identity,
    list_identities,
    residual,
    sample_domain,
)
from mocktheta.verify.suites import MUTANTS, mutation_selftest, suite_entries


def _expand(token):
    """'L5.1a-e' -> L5.1a..L5.1e; 'SL21-DEN-S/T' -> both; 'E5.16-E5.18' -> three ids."""
    if "/" in token:
        stem, tails = token.rsplit("-", 1)
        return [f"{stem}-{t}" for t in tails.split("/")]
    if "~" in token:
        lo, hi = token.split("~")
        if len(hi) == 1:
            return [lo[:-1] + chr(c) for c in range(ord(lo[-1]), ord(hi) + 1)]
        stem = lo.rsplit(".", 1)[0]
        return [f"{stem}.{n}" for n in range(int(lo.rsplit(".", 1)[1]), int(hi.rsplit(".", 1)[1]) + 1)]
    return [token]


ENUMERATED = """A-ELL A-S A-T JAC-ELL JAC-ST JTP ETA-ST THETA-S-DEG P4.7-HOLO L5.1a~e L5.3a~e E5.5 P5.4a~b
T5.5 E5.10 E5.11 E5.13 E5.14 L5.7a~b L5.8a~d T5.9a~e C5.10a~e E5.16~E5.18 R5.6 R5.6a T6.1a~b L6.2 L6.3a~b
T6.5a~b R6.6 SL21-DEN-S/T T7.1-S/T T7.3-S/T R7.4 A11-DEN-S/T L8.1 E8.7 T8.2a~b T8.4 T8.7 R8.5 E8.21
N2-DEN-S/T T9.2-S/T R9.3b N4-DEN-S/T T10.7-S/T R10.6a~e R10.8""".split()


def test_registry_covers_enumerated_laws():
    wanted = [i for tok in ENUMERATED for i in _expand(tok)]
    assert len(wanted) == len(set(wanted))
    assert set(wanted) <= set(REGISTRY.ids())
    assert len(REGISTRY) >= 60


def test_ids_unique_and_summaries_present():
    ids = REGISTRY.ids()
    assert len(ids) == len(set(ids))
    for row in list_identities():
        assert row["summary"] and row["default_tol"] > 0


def test_every_default_resolves():
    for spec in REGISTRY:
        for params in spec.grid:
            spec.resolve(params)


def test_reports_byte_identical():
    a = check_identity("L5.1c", {"m": 2}, n_samples=8)
    b = check_identity("L5.1c", {"m": 2}, n_samples=8)
    assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)


def test_report_fields():
    d = check_identity("L5.1c", {"m": 2}, n_samples=4).to_dict()
    for key in ("id", "params", "n_samples", "max_residual", "mean_residual", "worst_point", "pass", "seed", "policy"):
        assert key in d
    assert d["pass"] == (d["max_residual"] < d["tol"])


def test_different_seeds_sample_differently():
    assert sample_domain("L5.1c", seed=1, n=3) != sample_domain("L5.1c", seed=2, n=3)


def test_draws_are_order_independent():
    assert sample_domain("L5.1c", n=5)[:3] == sample_domain("L5.1c", n=3)


def test_sample_domain_box():
    assert sample_domain("A-ELL", n=0) == []
    for pt in sample_domain("E5.16", n=30):
        tau = pt["tau"]
        assert tau.imag > 0 and -0.45 <= tau.real <= 0.45 and 0.6 <= tau.imag <= 1.6
        for key in ("z1", "z2"):
            if key in pt:
                assert abs(pt[key].imag) <= 0.3


def test_phi_identities_sample_away_from_poles():
    guard = max(DEFAULT_POLICY.pole_guard, REGISTRY.get("L5.1a").sample_guard)
    for pt in sample_domain("L5.1a", n=30, params={"m": 1}):
        assert away_from_lattice(pt["z1"], pt["tau"], guard)


def test_unknown_and_schema_errors():
    with pytest.raises(UnknownIdentityError):
        check_identity("NOPE")
    with pytest.raises(SchemaError):
        check_identity("L5.1c", {"m": 99})
    with pytest.raises(SchemaError):
        check_identity("L5.1c", {"bogus": 1})
    with pytest.raises(SchemaError):
        check_identity("T9.2-S", {"M": 4, "m": 1})


def test_residual_metric():
    assert residual(1.0, 1.0) == (0.0, 0.0)
    rel, ab = residual([1e6], [1e6 + 1])
    assert ab == 1.0 and rel == pytest.approx(1e-6, rel=1e-9)
    assert residual(0.0, 1e-3)[0] == 1e-3


def test_core_suite_covers_every_criterion_table():
    crit = {e.criterion for e in suite_entries("core")}
    assert crit == set(range(1, 12))
    with pytest.raises(KeyError):
        suite_entries("nope")


def test_refinement_does_not_raise_residuals():
    """Doubling radius and nodes may only lower residuals, down to the roundoff floor."""
    refined = DEFAULT_POLICY.refined()
    floor = 1e-10
    for spec in REGISTRY:
        a = check_identity(spec.id, n_samples=4)
        if not a.passed:
            continue
        b = check_identity(spec.id, n_samples=4, policy=refined)
        assert b.max_residual <= max(a.max_residual, floor), spec.id


def test_mutants_are_killed():
    outcomes = mutation_selftest()
    assert len(outcomes) == len(MUTANTS) == 10
    for o in outcomes:
        assert o.baseline.passed, o.mutant
        assert not o.mutated.passed, o.mutant
