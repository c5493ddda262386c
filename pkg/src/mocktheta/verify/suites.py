"""Named suites of identity checks and the constant-perturbation self-test."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..numerics import DEFAULT_POLICY, SeriesPolicy
from .core import REGISTRY, IdentityReport, check_identity


@dataclass(frozen=True)
class SuiteEntry:
    id: str
    params: dict = field(default_factory=dict)
    tol: float | None = None
    n_samples: int = 50
    criterion: int | None = None


def _grid(identity_id, tol=None, n_samples=50, criterion=None, only=None):
    spec = REGISTRY.get(identity_id)
    return [SuiteEntry(identity_id, dict(p), tol, n_samples, criterion)
            for p in spec.grid if only is None or p in only]


def _core() -> list[SuiteEntry]:
    out = []
    for i in ("A-ELL", "A-T", "JAC-ELL", "JTP"):
        out += _grid(i, 1e-10, criterion=1)
    for i in ("A-S", "JAC-ST", "ETA-ST", "THETA-S-DEG"):
        out += _grid(i, 1e-9, criterion=1)
    for i in ("L5.1a", "L5.1b", "L5.1c", "L5.1d", "L5.1e", "L5.3a", "L5.3b", "L5.3c", "L5.3d", "L5.3e"):
        out += _grid(i, 1e-8, criterion=2)
    m12 = [{"m": 1}, {"m": 2}]
    for i in ("T5.5", "E5.13"):
        out += _grid(i, 1e-6, n_samples=20, criterion=3, only=m12)
    for i in ("E5.10", "E5.11"):
        out += _grid(i, 1e-8, n_samples=20, criterion=3)
    for i in ("L5.7a", "L5.7b", "E5.14"):
        out += _grid(i, 1e-8, criterion=3)
    for i in ("T5.9a", "T5.9d", "T5.9e", "C5.10a", "C5.10d", "C5.10e"):
        out += _grid(i, 1e-7, criterion=4)
    for i in ("E5.16", "E5.17", "E5.18"):
        out += _grid(i, 1e-9, criterion=5)
    for i in ("T6.5a", "T6.5b"):
        out += _grid(i, 1e-6, criterion=6)
    out += _grid("R6.6", 1e-9, criterion=6)
    out.append(SuiteEntry("R7.4", {}, 1e-10, 100, 7))
    for i in ("T7.1-S", "T7.1-T", "T7.3-S", "T7.3-T"):
        out.append(SuiteEntry(i, {"M": 3, "m": 1}, 1e-6, 50, 8))
    out += _grid("L8.1", 1e-10, criterion=9)
    out += _grid("E8.7", 1e-8, n_samples=20, criterion=9)
    out += _grid("T8.2a", 1e-6, criterion=9) + _grid("T8.2b", 1e-6, criterion=9)
    for i in ("T8.4", "T8.7"):
        out.append(SuiteEntry(i, {"M": 3, "m": 1}, 1e-6, 50, 9))
    out.append(SuiteEntry("R8.5", {}, 1e-9, 50, 9))
    for i in ("N2-DEN-S", "N2-DEN-T"):
        out.append(SuiteEntry(i, {}, 1e-9, 50, 10))
    for i in ("T9.2-S", "T9.2-T"):
        out += _grid(i, 1e-6, criterion=10, only=[{"M": 5, "m": 0}, {"M": 3, "m": 1}])
    for i in ("N4-DEN-S", "N4-DEN-T"):
        out.append(SuiteEntry(i, {}, 1e-9, 50, 11))
    for i in ("T10.7-S", "T10.7-T"):
        out += _grid(i, 1e-6, criterion=11, only=[{"M": 2, "m": 1}, {"M": 3, "m": 1}])
    for i in ("R10.6a", "R10.6b", "R10.6c", "R10.6d", "R10.6e"):
        out += _grid(i, 1e-8, criterion=11)
    out += _grid("R10.8", 1e-7, criterion=11)
    return out


def _full() -> list[SuiteEntry]:
    return [SuiteEntry(spec.id, dict(p)) for spec in REGISTRY for p in spec.grid]


SUITES = {"core": _core, "full": _full}


def suite_entries(name: str) -> list[SuiteEntry]:
    try:
        return SUITES[name]()
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None


def run_entry(entry: SuiteEntry, seed: int = 42, policy: SeriesPolicy = DEFAULT_POLICY) -> IdentityReport:
    return check_identity(entry.id, entry.params, entry.n_samples, entry.tol, seed, policy)


def run_suite(name: str, seed: int = 42, policy: SeriesPolicy = DEFAULT_POLICY, progress=None) -> list[IdentityReport]:
    reports = []
    for entry in suite_entries(name):
        report = run_entry(entry, seed, policy)
        if progress is not None:
            progress(entry, report)
        reports.append(report)
    return reports


@dataclass(frozen=True)
class Mutant:
    """A single named constant of a registered law, bumped by one."""

    id: str
    const: str
    params: dict = field(default_factory=dict)

    def perturbation(self) -> dict:
        return {self.const: REGISTRY.get(self.id).consts[self.const] + 1}


MUTANTS = (
    Mutant("T6.5a", "w", {"M": 3, "m": 1}),
    Mutant("A-ELL", "k", {"k": 2}),
    Mutant("A-S", "k", {"k": 2}),
    Mutant("ETA-ST", "twelfth"),
    Mutant("L5.1d", "w", {"m": 1}),
    Mutant("SL21-DEN-S", "i_power"),
    Mutant("T7.1-T", "w", {"M": 3, "m": 1}),
    Mutant("T8.7", "m", {"M": 3, "m": 1}),
    Mutant("T9.2-T", "w", {"M": 5, "m": 0}),
    Mutant("T10.7-T", "m", {"M": 3, "m": 1}),
)


@dataclass(frozen=True)
class MutantOutcome:
    mutant: Mutant
    baseline: IdentityReport
    mutated: IdentityReport

    @property
    def killed(self) -> bool:
        return self.baseline.passed and not self.mutated.passed


def mutation_selftest(seed: int = 42, n_samples: int = 10, policy: SeriesPolicy = DEFAULT_POLICY) -> list[MutantOutcome]:
    """Each mutant must fail at the law's default tolerance while the unmutated law passes."""
    out = []
    for mutant in MUTANTS:
        base = check_identity(mutant.id, mutant.params, n_samples, None, seed, policy)
        bad = check_identity(mutant.id, mutant.params, n_samples, None, seed, policy, consts=mutant.perturbation())
        out.append(MutantOutcome(mutant, base, bad))
    return out
