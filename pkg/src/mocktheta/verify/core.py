"""Identity registry and residual harness."""

from __future__ import annotations

import math
import zlib
from dataclasses import asdict, dataclass, field
from types import SimpleNamespace
from typing import Callable

import numpy as np

from ..numerics import DEFAULT_POLICY, MockThetaError, PoleError, SeriesPolicy

SERIES_TOL = 1e-8
QUADRATURE_TOL = 1e-6
RETRY_BOUND = 40

TAU_RE = (-0.45, 0.45)
TAU_IM = (0.6, 1.6)
Z_RE = (-0.5, 0.5)
Z_IM = (-0.3, 0.3)


class UnknownIdentityError(MockThetaError, KeyError):
    pass


class SchemaError(MockThetaError, ValueError):
    pass


class SamplerStarvation(MockThetaError):
    pass


def draw_tau(rng: np.random.Generator) -> complex:
    return complex(rng.uniform(*TAU_RE), rng.uniform(*TAU_IM))


def draw_z(rng: np.random.Generator) -> complex:
    return complex(rng.uniform(*Z_RE), rng.uniform(*Z_IM))


def draw_real(rng: np.random.Generator) -> complex:
    return complex(rng.uniform(*Z_RE), 0.0)


DRAWERS = {"tau": draw_tau, "real": draw_real}


@dataclass(frozen=True)
class IdentitySpec:
    """One registered transformation law.

    ``evaluate(p, x, policy, c)`` returns the pair (lhs, rhs), each a complex
    number or a sequence of them; ``p`` holds parameters, ``x`` the sampled
    arguments and ``c`` the named integer offsets used by mutation tests.
    """

    id: str
    summary: str
    args: tuple
    evaluate: Callable
    params: dict = field(default_factory=dict)
    defaults: dict = field(default_factory=dict)
    grid: tuple = ()
    default_tol: float = SERIES_TOL
    quadrature: bool = False
    consts: dict = field(default_factory=dict)
    sampler: Callable | None = None
    sample_guard: float = 0.02
    tags: tuple = ()
    constraint: Callable | None = None

    def lhs(self, params, point, policy=DEFAULT_POLICY):
        return self.evaluate(_ns(self.resolve(params)), _ns(point), policy, dict(self.consts))[0]

    def rhs(self, params, point, policy=DEFAULT_POLICY):
        return self.evaluate(_ns(self.resolve(params)), _ns(point), policy, dict(self.consts))[1]

    def resolve(self, params: dict | None) -> dict:
        merged = dict(self.defaults)
        for key, value in (params or {}).items():
            if key not in self.params:
                raise SchemaError(f"{self.id}: unknown parameter {key!r}; expected one of {sorted(self.params)}")
            merged[key] = value
        for key, allowed in self.params.items():
            if key not in merged:
                raise SchemaError(f"{self.id}: missing parameter {key!r}")
            value = merged[key]
            ok = allowed(value) if callable(allowed) else value in allowed
            if not ok:
                raise SchemaError(f"{self.id}: parameter {key}={value!r} outside its range")
        if self.constraint is not None:
            problem = self.constraint(merged)
            if problem:
                raise SchemaError(f"{self.id}: {problem}")
        return merged

    def summary_dict(self) -> dict:
        return {
            "id": self.id,
            "summary": self.summary,
            "args": list(self.args),
            "params": {k: (list(v) if not callable(v) else "predicate") for k, v in self.params.items()},
            "defaults": self.defaults,
            "default_tol": self.default_tol,
            "quadrature": self.quadrature,
        }


def _ns(d: dict) -> SimpleNamespace:
    return SimpleNamespace(**d)


@dataclass
class IdentityReport:
    id: str
    params: dict
    n_samples: int
    max_residual: float
    mean_residual: float
    worst_point: dict
    passed: bool
    seed: int
    policy: dict
    tol: float
    max_abs_residual: float = 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


class Registry:
    def __init__(self):
        self._specs: dict[str, IdentitySpec] = {}

    def add(self, spec: IdentitySpec) -> IdentitySpec:
        if spec.id in self._specs:
            raise ValueError(f"duplicate identity id {spec.id}")
        self._specs[spec.id] = spec
        return spec

    def get(self, identity_id: str) -> IdentitySpec:
        try:
            return self._specs[identity_id]
        except KeyError:
            raise UnknownIdentityError(f"unknown identity {identity_id!r}") from None

    def __iter__(self):
        return iter(self._specs.values())

    def __len__(self):
        return len(self._specs)

    def ids(self) -> list[str]:
        return list(self._specs)


REGISTRY = Registry()


def identity(identity_id: str, summary: str, args=("tau", "z1", "z2", "t"), **kwargs):
    """Decorator registering ``fn(p, x, policy, c) -> (lhs, rhs)``."""

    def wrap(fn):
        grid = kwargs.pop("grid", None)
        defaults = kwargs.get("defaults", {})
        spec = IdentitySpec(
            id=identity_id,
            summary=summary,
            args=tuple(args),
            evaluate=fn,
            grid=tuple(grid) if grid is not None else (dict(defaults),),
            **kwargs,
        )
        REGISTRY.add(spec)
        return fn

    return wrap


def residual(lhs, rhs) -> tuple[float, float]:
    """Scale-relative and absolute residual, maximised over components."""
    a = np.atleast_1d(np.asarray(lhs, dtype=complex))
    b = np.atleast_1d(np.asarray(rhs, dtype=complex))
    diff = np.abs(a - b)
    scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    rel = diff / scale
    if not (np.all(np.isfinite(rel))):
        return math.inf, math.inf
    return float(rel.max()), float(diff.max())


def _rng(seed: int, identity_id: str, index: int, attempt: int) -> np.random.Generator:
    key = zlib.crc32(identity_id.encode())
    ss = np.random.SeedSequence(entropy=int(seed) & ((1 << 64) - 1), spawn_key=(key, index, attempt))
    return np.random.Generator(np.random.Philox(ss))


def _draw(spec: IdentitySpec, rng: np.random.Generator, params: dict) -> dict:
    if spec.sampler is not None:
        return spec.sampler(rng, params)
    point = {}
    for name in spec.args:
        drawer = DRAWERS.get(name, draw_z)
        point[name] = drawer(rng)
    return point


def _guarded(spec: IdentitySpec, policy: SeriesPolicy) -> SeriesPolicy:
    return policy.with_(pole_guard=max(policy.pole_guard, spec.sample_guard))


def _sample_and_evaluate(spec, params, seed, n, policy, consts=None):
    resolved = spec.resolve(params)
    p = _ns(resolved)
    c = dict(spec.consts)
    if consts:
        c.update(consts)
    guarded = _guarded(spec, policy)
    out = []
    for i in range(n):
        for attempt in range(RETRY_BOUND):
            point = _draw(spec, _rng(seed, spec.id, i, attempt), resolved)
            try:
                lhs, rhs = spec.evaluate(p, _ns(point), guarded, c)
            except PoleError:
                continue
            out.append((point, lhs, rhs))
            break
        else:
            raise SamplerStarvation(
                f"{spec.id}: no admissible point after {RETRY_BOUND} draws for sample {i}"
            )
    return out


def sample_domain(identity_id, seed: int = 42, n: int = 50, policy: SeriesPolicy = DEFAULT_POLICY, params=None):
    """Pole-guarded sample points for a registered identity."""
    spec = identity_id if isinstance(identity_id, IdentitySpec) else REGISTRY.get(identity_id)
    return [pt for pt, _, _ in _sample_and_evaluate(spec, params, seed, n, policy)]


def _fmt_point(point: dict) -> dict:
    return {k: [float(complex(v).real), float(complex(v).imag)] for k, v in point.items()}


def check_identity(
    identity_id,
    params: dict | None = None,
    n_samples: int = 50,
    tol: float | None = None,
    seed: int = 42,
    policy: SeriesPolicy | None = None,
    consts: dict | None = None,
) -> IdentityReport:
    spec = identity_id if isinstance(identity_id, IdentitySpec) else REGISTRY.get(identity_id)
    policy = policy or DEFAULT_POLICY
    tol = spec.default_tol if tol is None else tol
    resolved = spec.resolve(params)
    rows = _sample_and_evaluate(spec, resolved, seed, n_samples, policy, consts)
    rels, worst, worst_pt, abs_max = [], -1.0, {}, 0.0
    for point, lhs, rhs in rows:
        rel, ab = residual(lhs, rhs)
        rels.append(rel)
        abs_max = max(abs_max, ab)
        if rel > worst:
            worst, worst_pt = rel, point
    max_res = max(rels) if rels else 0.0
    mean_res = float(np.mean(rels)) if rels else 0.0
    return IdentityReport(
        id=spec.id,
        params={k: _jsonable(v) for k, v in resolved.items()},
        n_samples=len(rows),
        max_residual=max_res,
        mean_residual=mean_res,
        worst_point=_fmt_point(worst_pt),
        passed=bool(max_res < tol),
        seed=int(seed),
        policy=asdict(policy),
        tol=tol,
        max_abs_residual=abs_max,
    )


def _jsonable(v):
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return str(v)


def list_identities() -> list[dict]:
    return [spec.summary_dict() for spec in REGISTRY]
