"""Command-line front end.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 numeric or pole error.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
import re
import sys
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction

import click

from . import a11_chars, mock, scft_chars, sl21_chars, theta
from .mock import TorusPoint
from .numerics import DEFAULT_POLICY, DomainError, LabelError, MockThetaError, PoleError, PolicyError, SeriesPolicy
from .scft_chars import scft_sector, sector_name
from .verify import REGISTRY, SchemaError, UnknownIdentityError, check_identity, list_identities
from .verify.suites import SUITES, mutation_selftest, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
SEED_ENV = "MOCKTHETA_SEED"

_NUM = r"\d+(?:\.\d*)?|\.\d+"
COMPLEX_LITERAL = re.compile(rf"^(?P<re>[+-]?(?:{_NUM}))(?P<im>[+-](?:{_NUM}))i$")


def parse_complex(text: str) -> complex:
    """Parse ``a+bi`` / ``-a.b-c.di``; both parts are required and no spaces are allowed."""
    m = COMPLEX_LITERAL.match(text.strip())
    if not m:
        raise ValueError(f"malformed complex literal {text!r}; expected e.g. 0.31+0.2i or -1-0.5i")
    return complex(float(m["re"]), float(m["im"]))


class ComplexParam(click.ParamType):
    name = "complex"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return parse_complex(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"not a rational number: {value!r}", param, ctx)


COMPLEX = ComplexParam()
RATIONAL = RationalParam()


@dataclass
class CliConfig:
    policy: dict = field(default_factory=dict)
    output_format: str = "json"
    seed: int = 42

    def __post_init__(self):
        if self.output_format not in ("json", "csv"):
            raise click.UsageError(f"output_format must be json or csv, got {self.output_format!r}")
        known = {f.name for f in fields(SeriesPolicy)}
        unknown = set(self.policy) - known
        if unknown:
            raise click.UsageError(f"unknown policy fields {sorted(unknown)}; expected a subset of {sorted(known)}")
        try:
            self.series_policy()
        except PolicyError as exc:
            raise click.UsageError(str(exc)) from None
        self.seed = int(self.seed)

    def series_policy(self) -> SeriesPolicy:
        return DEFAULT_POLICY.with_(**self.policy)


def load_config(path, seed, fmt, overrides) -> CliConfig:
    data = {}
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise click.UsageError(f"cannot read config {path}: {exc}") from None
        if not isinstance(data, dict):
            raise click.UsageError("config file must hold a JSON object")
        unknown = set(data) - {"policy", "output_format", "seed"}
        if unknown:
            raise click.UsageError(f"unknown config keys {sorted(unknown)}")
    policy = dict(data.get("policy", {}))
    policy.update({k: v for k, v in overrides.items() if v is not None})
    if seed is None:
        seed = data.get("seed")
    if seed is None and os.environ.get(SEED_ENV):
        try:
            seed = int(os.environ[SEED_ENV])
        except ValueError:
            raise click.UsageError(f"{SEED_ENV} must be an integer") from None
    return CliConfig(policy, fmt or data.get("output_format", "json"), 42 if seed is None else seed)


def common_options(fn):
    opts = [
        click.option("--config", "config_path", type=click.Path(dir_okay=False), help="JSON file with policy, output_format, seed."),
        click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None, help=f"Sampling seed (fallback: ${SEED_ENV}, then 42)."),
        click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None),
        click.option("--trunc-radius", type=int, default=None),
        click.option("--series-tol", type=float, default=None),
        click.option("--pole-guard", type=float, default=None),
        click.option("--quad-nodes", type=int, default=None),
    ]
    for opt in reversed(opts):
        fn = opt(fn)

    @functools.wraps(fn)
    def wrapper(config_path, seed, fmt, trunc_radius, series_tol, pole_guard, quad_nodes, **kwargs):
        overrides = {"trunc_radius": trunc_radius, "tol": series_tol, "pole_guard": pole_guard, "quad_nodes": quad_nodes}
        cfg = load_config(config_path, seed, fmt, overrides)
        try:
            return fn(cfg, **kwargs)
        except PoleError as exc:
            click.echo(json.dumps({"error": "pole", "message": str(exc), "locus": exc.locus, "distance": exc.distance}), err=True)
            sys.exit(EXIT_NUMERIC)
        except (UnknownIdentityError, SchemaError, LabelError, DomainError, PolicyError, KeyError) as exc:
            click.echo(f"Error: {exc.args[0] if exc.args else exc}", err=True)
            sys.exit(EXIT_USAGE)
        except MockThetaError as exc:
            click.echo(json.dumps({"error": "numeric", "message": str(exc)}), err=True)
            sys.exit(EXIT_NUMERIC)

    return wrapper


def _fmt_index(x) -> str:
    return str(Fraction(x))


def _emit_rows(cfg: CliConfig, header: list[str], rows: list[list], meta: dict | None = None) -> None:
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
        click.echo(buf.getvalue(), nl=False)
    else:
        payload = dict(meta or {})
        payload["rows"] = [dict(zip(header, row)) for row in rows]
        click.echo(json.dumps(payload, indent=2))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact")
def main():
    """Evaluate mock theta functions and characters, and check their transformation laws."""


# ---------------------------------------------------------------- eval


def _sector(name, supercharacter):
    return scft_sector(name, supercharacter)


def _need(value, flag):
    if value is None:
        raise click.UsageError(f"{flag} is required for this function")
    return value


def _pt(a):
    return TorusPoint(a["z1"], a["z2"], a["t"])


def _sl21_label(a):
    return sl21_chars.SL21Label(_need(a["M"], "--M"), a["m"], _need(a["j"], "--j"), _need(a["k"], "--k"), _sector(a["sector"], a["super"]))


def _denom(a, pol):
    algebra, s = a["algebra"], _sector(a["sector"], a["super"])
    if algebra == "sl21":
        return sl21_chars.denom_sl21(s, a["tau"], _pt(a), pol)
    if algebra == "a11":
        return a11_chars.denom_a11(s, a["tau"], a["z1"], a["z2"], pol)
    if algebra == "n2":
        return scft_chars.n2_denom(s, a["tau"], a["z1"], pol)
    return scft_chars.n4_denom(s, a["tau"], a["z1"], a["t"], pol)


EVALUATORS = {
    "phi": lambda a, p: mock.phi(a["m"], a["tau"], _pt(a), p),
    "phi_tilde": lambda a, p: mock.phi_tilde(a["m"], a["tau"], _pt(a), p),
    "phi_add": lambda a, p: mock.phi_add(a["m"], a["tau"], _pt(a), p),
    "mu": lambda a, p: mock.mu(a["tau"], a["z1"], a["z2"], p),
    "h": lambda a, p: mock.h_zw(a["m"], int(a["j"] or 0), a["tau"], a["z1"], p),
    "r": lambda a, p: mock.r_zw(a["m"], int(a["j"] or 0), a["tau"], a["z1"], p),
    "zwegers_R": lambda a, p: mock.zwegers_R(a["tau"], a["z1"], p),
    "g_direct": lambda a, p: mock.g_direct(a["m"], a["tau"], _pt(a).u, _pt(a).v, a["t"], p),
    "g_via_h": lambda a, p: mock.g_via_h(a["m"], a["tau"], _pt(a).u, _pt(a).v, a["t"], p),
    "theta": lambda a, p: theta.theta_jm((_need(a["j"], "--j"), _need(a["k"], "--k")), a["tau"], a["z1"], a["t"], p),
    "jacobi_theta": lambda a, p: theta.jacobi_theta(a["kind"], a["tau"], a["z1"], p),
    "eta": lambda a, p: theta.eta(a["tau"], p),
    "psi": lambda a, p: sl21_chars.psi(_need(a["M"], "--M"), a["m"], _sector(a["sector"], a["super"]).epsilon,
                                       _need(a["j"], "--j"), _need(a["k"], "--k"),
                                       _sector(a["sector"], a["super"]).epsilon_prime, a["tau"], _pt(a), p),
    "denom": _denom,
    "char": lambda a, p: sl21_chars.char_tilde_sl21(_sl21_label(a), a["tau"], _pt(a), p),
    "a11char": lambda a, p: a11_chars.char_tilde_a11(
        a11_chars.A11Label(_need(a["M"], "--M"), a["m"], a["sign"], _need(a["j"], "--j"), _need(a["k"], "--k"),
                           _sector(a["sector"], a["super"])), a["tau"], a["z1"], a["z2"], a["t"], p),
    "n2char": lambda a, p: scft_chars.n2_char_tilde(
        scft_chars.N2Label(_need(a["M"], "--M"), a["m"], _need(a["j"], "--j"), _need(a["k"], "--k"),
                           _sector(a["sector"], a["super"])), a["tau"], a["z1"], p),
    "n4char": lambda a, p: scft_chars.n4_char_tilde(
        scft_chars.N4Label(_need(a["M"], "--M"), a["m"], _need(a["j"], "--j"), _need(a["k"], "--k"),
                           _sector(a["sector"], a["super"])), a["tau"], a["z1"], a["t"], p),
}


@main.command("eval")
@click.option("--fn", "fn_name", required=True, type=click.Choice(sorted(EVALUATORS)))
@click.option("--m", type=int, default=1, show_default=True)
@click.option("--M", "M", type=int, default=None)
@click.option("--j", type=RATIONAL, default=None, help="Index j (or jt); rational, e.g. 1/2.")
@click.option("--k", type=RATIONAL, default=None, help="Index k (or kt), or the theta degree for --fn theta.")
@click.option("--tau", type=COMPLEX, required=True)
@click.option("--z1", type=COMPLEX, default="0+0i", help="z1; also z for N=2/N=4 and v (or u) for h, r, zwegers_R.")
@click.option("--z2", type=COMPLEX, default="0+0i")
@click.option("--t", type=COMPLEX, default="0+0i")
@click.option("--sector", type=click.Choice(["NS", "R"], case_sensitive=False), default="NS")
@click.option("--super", "supercharacter", is_flag=True, help="Supercharacter instead of character.")
@click.option("--algebra", type=click.Choice(["sl21", "a11", "n2", "n4"]), default="sl21")
@click.option("--sign", type=click.Choice(["+", "-"]), default="+", help="Level sign for a11char.")
@click.option("--kind", default="11", help="Jacobi theta characteristic, e.g. 00, 01, 10, 11.")
@common_options
def cmd_eval(cfg, fn_name, m, M, j, k, tau, z1, z2, t, sector, supercharacter, algebra, sign, kind):
    """Evaluate one function and print {re, im}."""
    if tau.imag <= 0:
        raise click.BadParameter("tau must have positive imaginary part", param_hint="--tau")
    if fn_name == "theta" and k is not None and k.denominator != 1:
        raise click.BadParameter("theta degree must be an integer", param_hint="--k")
    if k is not None and fn_name == "theta":
        k = int(k)
    args = dict(m=m, M=M, j=j, k=k, tau=tau, z1=z1, z2=z2, t=t, sector=sector, super=supercharacter,
                algebra=algebra, sign=sign, kind=kind)
    value = complex(EVALUATORS[fn_name](args, cfg.series_policy()))
    _emit_rows(cfg, ["re", "im"], [[value.real, value.imag]], {"fn": fn_name})


# ---------------------------------------------------------------- check


REPORT_COLUMNS = ["id", "params", "n_samples", "max_residual", "mean_residual", "max_abs_residual", "tol", "pass", "seed"]


def _report_csv(reports, header: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(REPORT_COLUMNS)
    for r in reports:
        d = r.to_dict()
        d["params"] = json.dumps(d["params"], sort_keys=True)
        writer.writerow([repr(d[c]) if isinstance(d[c], float) else d[c] for c in REPORT_COLUMNS])
    return buf.getvalue()


def _params(spec, given: dict) -> dict:
    return {k: v for k, v in given.items() if v is not None}


@main.command("check")
@click.option("--identity", "identity_id", required=True)
@click.option("--m", type=int, default=None)
@click.option("--M", "M", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--K", "K", type=int, default=None)
@click.option("--s", type=int, default=None)
@click.option("--samples", type=click.IntRange(0), default=50, show_default=True)
@click.option("--tol", type=float, default=None, help="Default: the law's own tolerance.")
@common_options
def cmd_check(cfg, identity_id, m, M, k, K, s, samples, tol):
    """Check one registered law and print its report; exit 1 if it fails."""
    spec = REGISTRY.get(identity_id)
    params = _params(spec, {"m": m, "M": M, "k": k, "K": K, "s": s})
    report = check_identity(identity_id, params, samples, tol, cfg.seed, cfg.series_policy())
    if cfg.output_format == "csv":
        click.echo(_report_csv([report], header=True), nl=False)
    else:
        click.echo(json.dumps(report.to_dict(), indent=2))
    sys.exit(EXIT_OK if report.passed else EXIT_FAIL)


@main.command("check-all")
@click.option("--suite", type=click.Choice(sorted(SUITES)), default="core", show_default=True)
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None, help="Also write all reports here as JSON.")
@click.option("--quiet", is_flag=True, help="Only print the summary line.")
@common_options
def cmd_check_all(cfg, suite, report_path, quiet):
    """Run a suite; one report per line (JSON lines or CSV), exit 1 if any check fails."""
    first = [True]

    def progress(entry, report):
        if quiet:
            return
        if cfg.output_format == "csv":
            click.echo(_report_csv([report], header=first[0]), nl=False)
            first[0] = False
        else:
            click.echo(json.dumps(report.to_dict()))

    reports = run_suite(suite, cfg.seed, cfg.series_policy(), progress)
    failed = [r for r in reports if not r.passed]
    if report_path:
        with open(report_path, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
    click.echo(f"{suite}: {len(reports) - len(failed)}/{len(reports)} passed", err=True)
    sys.exit(EXIT_FAIL if failed else EXIT_OK)


@main.command("mutants")
@click.option("--samples", type=click.IntRange(1), default=10, show_default=True)
@common_options
def cmd_mutants(cfg, samples):
    """Perturb designated law constants by one and confirm each check then fails."""
    rows = []
    for o in mutation_selftest(cfg.seed, samples, cfg.series_policy()):
        rows.append([o.mutant.id, o.mutant.const, json.dumps(o.mutant.params), o.baseline.max_residual,
                     o.mutated.max_residual, o.killed])
    _emit_rows(cfg, ["id", "const", "params", "baseline_residual", "mutant_residual", "killed"], rows)
    sys.exit(EXIT_OK if all(r[-1] for r in rows) else EXIT_FAIL)


@main.command("list")
def cmd_list():
    """List registered laws with their parameter schemas."""
    click.echo(json.dumps(list_identities(), indent=2))


# ---------------------------------------------------------------- tables


def _sector_or_fail(name_in, supercharacter, name_out):
    src = scft_sector(name_in, supercharacter)
    dst = src.swapped()
    if sector_name(dst) != name_out.upper():
        kind = "supercharacters" if supercharacter else "characters"
        raise click.UsageError(f"S maps {name_in} {kind} to {sector_name(dst)}, not {name_out}")
    return src, dst


@main.command("smatrix")
@click.option("--algebra", type=click.Choice(["n2", "n4"]), required=True)
@click.option("--M", "M", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--sector-in", type=click.Choice(["NS", "R"], case_sensitive=False), required=True)
@click.option("--sector-out", type=click.Choice(["NS", "R"], case_sensitive=False), required=True)
@click.option("--super", "supercharacter", is_flag=True, help="Source labels are supercharacters.")
@common_options
def cmd_smatrix(cfg, algebra, M, m, sector_in, sector_out, supercharacter):
    """S-matrix over the full source and target windows (columns j,k,a,b,re,im)."""
    src, dst = _sector_or_fail(sector_in, supercharacter, sector_out)
    if algebra == "n2":
        rows_in, rows_out, entry = scft_chars.n2_labels(M, m, src), scft_chars.n2_labels(M, m, dst), scft_chars.n2_smatrix
        idx = lambda lab: (lab.j, lab.k)  # noqa: E731
    else:
        rows_in, rows_out, entry = scft_chars.n4_labels(M, m, src), scft_chars.n4_labels(M, m, dst), scft_chars.n4_smatrix
        idx = lambda lab: (lab.jt, lab.kt)  # noqa: E731
    rows = []
    for a in rows_in:
        for b in rows_out:
            v = complex(entry(M, m, src, idx(a), idx(b)))
            rows.append([*map(_fmt_index, idx(a)), *map(_fmt_index, idx(b)), v.real, v.imag])
    meta = {"algebra": algebra, "M": M, "m": m, "sector_in": sector_in.upper(), "sector_out": sector_out.upper(),
            "supercharacter": supercharacter, "shape": [len(rows_in), len(rows_out)]}
    _emit_rows(cfg, ["j", "k", "a", "b", "re", "im"], rows, meta)


@main.command("qexp")
@click.option("--m", type=click.IntRange(0), required=True)
@click.option("--order", type=RATIONAL, required=True, help="Largest q-power kept (rational).")
@click.option("--z-degree", type=click.IntRange(1), default=8, show_default=True, help="Bound on |a| and |b|.")
@common_options
def cmd_qexp(cfg, m, order, z_degree):
    """Integer coefficients of q^power e(a z1 + b z2) in phi at t = 0."""
    ex = mock.phi_qexp(m, order, z_degree)
    rows = [[_fmt_index(p), a, b, c] for (p, a, b), c in sorted(ex.entries.items())]
    _emit_rows(cfg, ["power", "a", "b", "coeff"], rows, {"m": m, "order": str(order), "z_degree": z_degree})


def _numbers_row(n):
    return [_fmt_index(n.c), _fmt_index(n.h), _fmt_index(n.s)]


@main.command("labels")
@click.option("--algebra", type=click.Choice(["sl21", "a11", "n2", "n4"]), required=True)
@click.option("--M", "M", type=int, required=True)
@click.option("--m", type=int, required=True)
@click.option("--sign", type=click.Choice(["+", "-"]), default="+", help="Level sign (a11).")
@click.option("--sector", type=click.Choice(["NS", "R"], case_sensitive=False), default="NS")
@click.option("--super", "supercharacter", is_flag=True)
@click.option("--family", type=click.Choice(["1", "2"]), default=None, help="sl21 weight family (default: both).")
@common_options
def cmd_labels(cfg, algebra, M, m, sign, sector, supercharacter, family):
    """Label sets, with (c, h, s) for the superconformal algebras."""
    s = scft_sector(sector, supercharacter)
    if algebra == "sl21":
        fams = [int(family)] if family else [1, 2]
        rows = [[w.family.value, w.j, w.k, _fmt_index(w.m0), _fmt_index(w.m1), _fmt_index(w.m2)]
                for f in fams for w in sl21_chars.admissible_labels(M, m, f)]
        header = ["family", "j", "k", "m0", "m1", "m2"]
    elif algebra == "a11":
        labs = a11_chars.labels_a11(M, m, sign, s)
        rows = [[_fmt_index(l.j), _fmt_index(l.k), *l.weight_indices(), l.family, l.eps_s] for l in labs]
        header = ["j", "k", "weight_j", "weight_k", "family", "eps_s"]
    elif algebra == "n2":
        rows = [[_fmt_index(l.j), _fmt_index(l.k), *_numbers_row(scft_chars.n2_numbers(l))]
                for l in scft_chars.n2_labels(M, m, s)]
        header = ["j", "k", "c", "h", "s"]
    else:
        rows = [[_fmt_index(l.jt), _fmt_index(l.kt), l.family, *_numbers_row(scft_chars.n4_numbers(l))]
                for l in scft_chars.n4_labels(M, m, s)]
        header = ["jt", "kt", "family", "c", "h", "s"]
    meta = {"algebra": algebra, "M": M, "m": m, "sector": sector.upper(), "supercharacter": supercharacter}
    if algebra == "a11":
        meta["sign"] = sign
    _emit_rows(cfg, header, rows, meta)


if __name__ == "__main__":  # pragma: no cover
    main()
