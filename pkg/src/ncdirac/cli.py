"""The ``ncdirac`` command-line front end.

Six subcommands, each a thin deterministic wrapper over the library:

=============   ============================================================
algebra-check   Clifford relations + Pauli vector identity (random pairs
                seeded by ``--seed``, plus the operator form on the interior)
nc-algebra      deformed commutator residuals over a (theta, eta) grid
landau          interior Landau levels vs the closed-form spectra
convergence     Dirac -> Pauli spectral error along a c sweep + fitted slope
nc-sweep        NC level shifts over a (theta, eta) grid
series          kinetic-factor series truncation error per order
=============   ============================================================

Configuration resolves in three layers: built-in per-command defaults,
overridden by ``--config FILE`` (flat ``section.key = value`` lines, or a
JSON document, possibly nested one level), overridden by command-line flags.
Parsing is strict — an unknown key or a malformed number is a hard error
naming the offending field, never a silent skip.

Output is CSV (RFC-4180 quoting, the table only) or JSON (a single document
carrying the command echo, resolved config, table, scalars, library version,
and wall time).  Floats are printed with 17 significant digits, so parsing
the emitted JSON reproduces the record exactly (``parse_record``).  Apart
from the JSON ``wall_time_s`` line, output is byte-identical across runs and
thread counts: the numerics run under a single BLAS thread (threadpoolctl),
and wall time additionally goes to stderr where files never see it.

Exit codes: 0 success, 1 internal error, 2 invalid input or a diverged
kinetic-factor series.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from time import perf_counter

import numpy as np
from threadpoolctl import threadpool_limits

from . import __version__
from .hamiltonians import SeriesDivergenceError, kinetic_momentum
from .limits import (
    Scenario,
    landau_table,
    nc_shift_sweep,
    nonrel_convergence,
    series_truncation_error,
)
from .phase_space import (
    BasisSpec,
    NCParams,
    bopp_shift,
    build_canonical_ops,
    interior_mask,
    nc_algebra_report,
)
from .spinor_algebra import clifford_residual, pauli_identity_residual, standard_rep

__all__ = ["RunConfig", "ResultRecord", "ConfigError", "parse_config", "run",
           "emit", "parse_record", "main", "COMMANDS"]

COMMANDS = ("algebra-check", "nc-algebra", "landau", "convergence",
            "nc-sweep", "series")

QTHETA_CHOICES = ("sigma", "upper-block")
FORMAT_CHOICES = ("csv", "json")


class ConfigError(ValueError):
    """Invalid configuration: unknown key, malformed value, failed validation."""


# --------------------------------------------------------------------------
# configuration schema
# --------------------------------------------------------------------------

_INT_KEYS = {"basis.n_max", "basis.margin", "run.order", "run.levels",
             "run.pairs", "run.seed"}
_FLOAT_KEYS = {"phys.m0", "phys.c", "phys.e", "potential.b",
               "potential.a0x", "potential.a0y", "nc.theta", "nc.eta"}
_FLOAT_LIST_KEYS = {"phys.c_list", "nc.theta_list", "nc.eta_list"}
_INT_LIST_KEYS = {"run.orders"}
_STR_KEYS = {"run.qtheta_mode", "output.path", "output.format"}

_OUTPUT_DEFAULTS = {"output.path": None, "output.format": "csv"}

_NC_GRID = (-0.3, -0.1, 0.0, 0.1, 0.3)

DEFAULTS: dict[str, dict] = {
    "algebra-check": {
        "basis.n_max": 12, "basis.margin": 2,
        "phys.m0": 1.0, "phys.c": 50.0, "phys.e": 1.0,
        "potential.b": 1.0,
        "run.pairs": 20, "run.seed": 0,
        **_OUTPUT_DEFAULTS,
    },
    "nc-algebra": {
        "basis.n_max": 12, "basis.margin": 2,
        "nc.theta_list": _NC_GRID, "nc.eta_list": _NC_GRID,
        **_OUTPUT_DEFAULTS,
    },
    "landau": {
        "basis.n_max": 16, "basis.margin": 2,
        "phys.m0": 1.0, "phys.c": 50.0, "phys.e": 1.0,
        "potential.b": 1.0,
        "run.levels": 6,
        **_OUTPUT_DEFAULTS,
    },
    "convergence": {
        "basis.n_max": 12, "basis.margin": 2,
        "phys.m0": 1.0, "phys.e": 1.0, "phys.c_list": (10.0, 20.0, 40.0, 80.0),
        "potential.b": 1.0,
        "run.levels": 4,
        **_OUTPUT_DEFAULTS,
    },
    "nc-sweep": {
        "basis.n_max": 12, "basis.margin": 2,
        "phys.m0": 1.0, "phys.c": 50.0, "phys.e": 1.0,
        "potential.b": 1.0, "potential.a0x": 0.0, "potential.a0y": 0.0,
        "nc.theta_list": (0.0, 0.001), "nc.eta_list": (0.0, 0.001),
        "run.levels": 4, "run.order": 8, "run.qtheta_mode": "sigma",
        **_OUTPUT_DEFAULTS,
    },
    "series": {
        "basis.n_max": 12,
        "phys.m0": 1.0, "phys.c": 1.0, "phys.e": 1.0,
        "potential.b": 1.0, "potential.a0x": 0.0, "potential.a0y": 0.0,
        "nc.theta": 0.25,
        "run.orders": (0, 1, 2, 3, 4, 5, 6, 7, 8),
        "run.qtheta_mode": "sigma",
        **_OUTPUT_DEFAULTS,
    },
}

# flag name -> config key; each command exposes only the keys it resolves
_FLAG_FOR_KEY = {
    "basis.n_max": ("--n-max", "basis size per mode (minimum 4)"),
    "basis.margin": ("--margin", "interior margin in shells"),
    "phys.m0": ("--m0", "rest mass"),
    "phys.c": ("--c", "speed of light"),
    "phys.e": ("--e", "signed charge"),
    "phys.c_list": ("--c-list", "comma-separated ascending c values"),
    "potential.b": ("--B", "magnetic field in reduced (c-scaled) units; "
                           "the lab-frame field is B*c, so hbar*omega_c = "
                           "hbar*e*B/m0 is c-independent"),
    "potential.a0x": ("--a0x", "scalar potential gradient dA0/dx"),
    "potential.a0y": ("--a0y", "scalar potential gradient dA0/dy"),
    "nc.theta": ("--theta", "space-space deformation parameter"),
    "nc.eta": ("--eta", "momentum-momentum deformation parameter"),
    "nc.theta_list": ("--theta-list", "comma-separated theta values"),
    "nc.eta_list": ("--eta-list", "comma-separated eta values"),
    "run.order": ("--order", "kinetic-factor series order"),
    "run.orders": ("--orders", "comma-separated series orders"),
    "run.qtheta_mode": ("--qtheta-mode", "two-component reduction of the "
                                         "position-deformation operator"),
    "run.levels": ("--levels", "number of tracked levels"),
    "run.pairs": ("--pairs", "number of random vector pairs"),
    "run.seed": ("--seed", "RNG seed for the random pairs"),
}


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved run: command plus the flat key -> value mapping."""

    command: str
    values: dict

    def __getitem__(self, key: str):
        return self.values[key]

    def get(self, key: str, default=None):
        return self.values.get(key, default)


@dataclass(frozen=True)
class ResultRecord:
    """Everything one run produced; emitted as CSV (table only) or JSON (all)."""

    command: str
    config: dict
    columns: tuple
    rows: tuple
    scalars: dict
    version: str
    wall_time_s: float


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------

def _convert(key: str, raw) -> object:
    """Convert a raw (string or JSON) value to the key's type; strict."""
    def fail(why):
        raise ConfigError(f"{key}: {why}")

    if key in _STR_KEYS:
        if not isinstance(raw, str) and raw is not None:
            fail(f"expected a string, got {raw!r}")
        if key == "output.format" and raw not in FORMAT_CHOICES:
            fail(f"must be one of {'/'.join(FORMAT_CHOICES)}, got {raw!r}")
        if key == "run.qtheta_mode" and raw not in QTHETA_CHOICES:
            fail(f"must be one of {'/'.join(QTHETA_CHOICES)}, got {raw!r}")
        return raw
    if key in _INT_KEYS:
        if isinstance(raw, bool):
            fail(f"expected an integer, got {raw!r}")
        if isinstance(raw, int):
            return raw
        try:
            return int(str(raw).strip())
        except ValueError:
            fail(f"malformed integer {raw!r}")
    if key in _FLOAT_KEYS:
        if isinstance(raw, bool):
            fail(f"expected a number, got {raw!r}")
        if isinstance(raw, (int, float)):
            v = float(raw)
        else:
            try:
                v = float(str(raw).strip())
            except ValueError:
                fail(f"malformed number {raw!r}")
        if not math.isfinite(v):
            fail(f"must be finite, got {v!r}")
        return v
    if key in _FLOAT_LIST_KEYS or key in _INT_LIST_KEYS:
        if isinstance(raw, str):
            parts = [p.strip() for p in raw.split(",") if p.strip() != ""]
        elif isinstance(raw, (list, tuple)):
            parts = list(raw)
        else:
            fail(f"expected a comma-separated list, got {raw!r}")
        if not parts:
            fail("list must be nonempty")
        out = []
        for p in parts:
            try:
                if key in _INT_LIST_KEYS:
                    out.append(p if isinstance(p, int) and not isinstance(p, bool)
                               else int(str(p).strip()))
                else:
                    v = float(p) if isinstance(p, (int, float)) else float(str(p).strip())
                    if not math.isfinite(v):
                        raise ValueError
                    out.append(v)
            except (ValueError, TypeError):
                fail(f"malformed list element {p!r}")
        return tuple(out)
    raise ConfigError(f"unknown configuration key {key!r}")   # pragma: no cover


def _flatten_json(doc: dict) -> dict:
    flat = {}
    for k, v in doc.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                flat[f"{k}.{kk}"] = vv
        else:
            flat[k] = v
    return flat


def _read_config_file(path: str) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc}") from exc
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: invalid JSON in {path}: {exc}") from exc
        if not isinstance(doc, dict):
            raise ConfigError(f"config: {path} must hold a JSON object")
        return _flatten_json(doc)
    flat = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"config: {path}:{lineno}: expected key = value, "
                              f"got {stripped!r}")
        key, _, value = stripped.partition("=")
        flat[key.strip()] = value.strip()
    return flat


def _validate(command: str, values: dict) -> None:
    def need(cond, msg):
        if not cond:
            raise ConfigError(msg)

    if "basis.n_max" in values:
        need(values["basis.n_max"] >= 4,
             f"basis.n_max must be at least 4, got {values['basis.n_max']}")
    if "basis.margin" in values:
        need(0 <= values["basis.margin"] < values.get("basis.n_max", 4),
             f"basis.margin must satisfy 0 <= margin < n_max, "
             f"got {values['basis.margin']}")
    for key in ("phys.m0", "phys.c"):
        if key in values:
            need(values[key] > 0, f"{key} must be positive, got {values[key]}")
    if "run.levels" in values:
        need(values["run.levels"] >= 1,
             f"run.levels must be at least 1, got {values['run.levels']}")
    if "run.order" in values:
        need(values["run.order"] >= 0,
             f"run.order must be nonnegative, got {values['run.order']}")
    if "run.orders" in values:
        need(all(j >= 0 for j in values["run.orders"]),
             f"run.orders must be nonnegative, got {values['run.orders']}")
    if "run.pairs" in values:
        need(values["run.pairs"] >= 1,
             f"run.pairs must be at least 1, got {values['run.pairs']}")
    if "phys.c_list" in values:
        cl = values["phys.c_list"]
        need(all(v > 0 for v in cl),
             f"phys.c_list values must be positive, got {cl}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncdirac",
        description="Deformed-plane Dirac/Pauli spectra: algebra checks, "
                    "Landau levels, and limit studies.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    briefs = {
        "algebra-check": "Clifford and Pauli-identity residuals",
        "nc-algebra": "deformed commutator residuals on a (theta, eta) grid",
        "landau": "interior Landau levels vs closed forms",
        "convergence": "Dirac-to-Pauli spectral convergence in c",
        "nc-sweep": "NC level shifts over a (theta, eta) grid",
        "series": "kinetic-factor series truncation error",
    }
    for command in COMMANDS:
        p = sub.add_parser(command, help=briefs[command],
                           description=briefs[command])
        p.add_argument("--config", metavar="FILE",
                       help="config file (key = value lines or JSON); "
                            "flags override it, it overrides defaults")
        p.add_argument("--output", metavar="PATH",
                       help="write the result here instead of stdout")
        p.add_argument("--format", choices=FORMAT_CHOICES,
                       help="output format (default csv)")
        for key in DEFAULTS[command]:
            if key.startswith("output."):
                continue
            flag, help_text = _FLAG_FOR_KEY[key]
            p.add_argument(flag, dest=key.replace(".", "__"), metavar="V",
                           help=f"{help_text} (default "
                                f"{_default_repr(DEFAULTS[command][key])})")
    return parser


def _default_repr(v) -> str:
    if isinstance(v, tuple):
        return ",".join(str(x) for x in v)
    return str(v)


def parse_config(argv=None) -> RunConfig:
    """Resolve CLI flags over an optional config file over per-command defaults."""
    args = _build_parser().parse_args(argv)
    command = args.command
    values = dict(DEFAULTS[command])
    if args.config:
        for key, raw in _read_config_file(args.config).items():
            if key not in values:
                raise ConfigError(f"config: unknown key {key!r} for command "
                                  f"{command!r}")
            values[key] = _convert(key, raw)
    for key in DEFAULTS[command]:
        if key.startswith("output."):
            continue
        raw = getattr(args, key.replace(".", "__"))
        if raw is not None:
            values[key] = _convert(key, raw)
    if args.output is not None:
        values["output.path"] = _convert("output.path", args.output)
    if args.format is not None:
        values["output.format"] = _convert("output.format", args.format)
    _validate(command, values)
    return RunConfig(command=command, values=values)


# --------------------------------------------------------------------------
# experiments
# --------------------------------------------------------------------------

def _scenario(cfg: RunConfig, **overrides) -> Scenario:
    kw = dict(
        n_max=cfg["basis.n_max"],
        margin=cfg.get("basis.margin", 2),
        m0=cfg.get("phys.m0", 1.0),
        e=cfg.get("phys.e", 1.0),
        c=cfg.get("phys.c", 50.0),
        b_reduced=cfg.get("potential.b", 0.0),
        a0_coeffs=(cfg.get("potential.a0x", 0.0), cfg.get("potential.a0y", 0.0)),
        qtheta_mode=cfg.get("run.qtheta_mode", "sigma"),
    )
    kw.update(overrides)
    return Scenario(**kw)


def _cmd_algebra_check(cfg: RunConfig):
    rep = standard_rep()
    rng = np.random.default_rng(cfg["run.seed"])
    worst = 0.0
    for _ in range(cfg["run.pairs"]):
        a = rng.standard_normal(3)
        b = rng.standard_normal(3)
        worst = max(worst, pauli_identity_residual(rep, a, b))

    scen = _scenario(cfg)
    basis, phys, pot = scen.basis(), scen.phys(), scen.potential()
    ops = build_canonical_ops(basis, hbar=phys.hbar)
    pi_x, pi_y = kinetic_momentum(ops, pot, phys)
    field_cross = (0.0, 0.0, 1j * phys.hbar * (phys.e / phys.c) * pot.b_field)
    proj = np.diag(interior_mask(basis.n_max, scen.margin).astype(float))
    op_resid = pauli_identity_residual(rep, (pi_x, pi_y, 0.0), (pi_x, pi_y, 0.0),
                                       cross=field_cross, projector=proj)
    rows = (
        ("clifford", clifford_residual(rep)),
        ("pauli_identity_scalar_max", worst),
        ("pauli_identity_operator_interior", op_resid),
    )
    scalars = {"pairs": cfg["run.pairs"], "seed": cfg["run.seed"],
               "b_lab": pot.b_field}
    return ("check", "residual"), rows, scalars


def _cmd_nc_algebra(cfg: RunConfig):
    basis = BasisSpec(cfg["basis.n_max"])
    ops = build_canonical_ops(basis)
    margin = cfg["basis.margin"]
    rows = []
    worst = 0.0
    for theta in cfg["nc.theta_list"]:
        for eta in cfg["nc.eta_list"]:
            nc = NCParams(theta=theta, eta=eta)
            report = nc_algebra_report(bopp_shift(ops, nc), nc, margin=margin)
            rows.append((theta, eta, report["xy"], report["pxpy"], report["xpx"],
                         report["ypy"], report["xpy"], report["ypx"],
                         report["hbar_eff_measured"], report["hbar_eff_residual"]))
            worst = max(worst, *(report[k] for k in
                                 ("xy", "pxpy", "xpx", "ypy", "xpy", "ypx")))
    columns = ("theta", "eta", "xy", "pxpy", "xpx", "ypy", "xpy", "ypx",
               "hbar_eff_measured", "hbar_eff_residual")
    return columns, tuple(rows), {"max_residual": worst}


def _cmd_landau(cfg: RunConfig):
    table = landau_table(_scenario(cfg), cfg["run.levels"])
    return table.columns, table.rows, dict(table.meta)


def _cmd_convergence(cfg: RunConfig):
    scen = _scenario(cfg, c=cfg["phys.c_list"][-1])
    report = nonrel_convergence(scen, cfg["phys.c_list"],
                                range(cfg["run.levels"]))
    rows = []
    for i, c in enumerate(report.c_values):
        for j, level in enumerate(report.level_indices):
            rows.append((c, level, report.dirac_minus_rest[i][j],
                         report.pauli_values[i][j], report.per_level_errors[i][j]))
    columns = ("c", "level", "e_dirac_minus_rest", "e_pauli", "abs_err")
    scalars = {"fitted_slope": report.fitted_slope,
               "max_abs_err": report.errors}
    return columns, tuple(rows), scalars


def _cmd_nc_sweep(cfg: RunConfig):
    table = nc_shift_sweep(_scenario(cfg), cfg["nc.theta_list"],
                           cfg["nc.eta_list"], cfg["run.levels"],
                           order=cfg["run.order"])
    return table.columns, table.rows, dict(table.meta)


def _cmd_series(cfg: RunConfig):
    table = series_truncation_error(_scenario(cfg), cfg["nc.theta"],
                                    cfg["run.orders"])
    return table.columns, table.rows, dict(table.meta)


_DISPATCH = {
    "algebra-check": _cmd_algebra_check,
    "nc-algebra": _cmd_nc_algebra,
    "landau": _cmd_landau,
    "convergence": _cmd_convergence,
    "nc-sweep": _cmd_nc_sweep,
    "series": _cmd_series,
}


def run(config: RunConfig) -> ResultRecord:
    """Execute the configured experiment under a single BLAS thread."""
    start = perf_counter()
    with threadpool_limits(limits=1):
        columns, rows, scalars = _DISPATCH[config.command](config)
    wall = perf_counter() - start
    echo = dict(sorted(config.values.items()))
    return ResultRecord(command=config.command, config=echo,
                        columns=tuple(columns), rows=tuple(rows),
                        scalars=scalars, version=__version__, wall_time_s=wall)


# --------------------------------------------------------------------------
# emission
# --------------------------------------------------------------------------

def _float_text(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    s = format(x, ".17g")
    # keep floats float-typed on the way back in
    if not any(ch in s for ch in ".eE"):
        s += ".0"
    return s


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _float_text(v)
    return str(v)


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _float_text(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{_json_value(x)}"
                              for k, x in v.items()) + "}"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def emit(record: ResultRecord, format: str) -> bytes:
    """Serialize a record: csv = the table alone, json = the whole record.

    JSON keeps one top-level key per line with ``wall_time_s`` last, so
    comparisons that exclude wall time can drop exactly one line.
    """
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
        writer.writerow(record.columns)
        for row in record.rows:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue().encode("utf-8")
    if format == "json":
        lines = ["{"]
        parts = [
            ("command", record.command),
            ("version", record.version),
            ("config", record.config),
            ("columns", record.columns),
            ("rows", record.rows),
            ("scalars", record.scalars),
            ("wall_time_s", record.wall_time_s),
        ]
        for i, (key, value) in enumerate(parts):
            comma = "," if i < len(parts) - 1 else ""
            lines.append(f'"{key}": {_json_value(value)}{comma}')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ConfigError(f"output.format must be one of {'/'.join(FORMAT_CHOICES)}, "
                      f"got {format!r}")


def _tuplify(v):
    if isinstance(v, list):
        return tuple(_tuplify(x) for x in v)
    if isinstance(v, dict):
        return {k: _tuplify(x) for k, x in v.items()}
    return v


def parse_record(data: bytes) -> ResultRecord:
    """Invert :func:`emit` for JSON output: parse_record(emit(r, 'json')) == r."""
    doc = json.loads(data.decode("utf-8"))
    return ResultRecord(
        command=doc["command"],
        config=_tuplify(doc["config"]),
        columns=tuple(doc["columns"]),
        rows=_tuplify(doc["rows"]),
        scalars=_tuplify(doc["scalars"]),
        version=doc["version"],
        wall_time_s=doc["wall_time_s"],
    )


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        record = run(config)
        data = emit(record, config["output.format"])
    except (ConfigError, SeriesDivergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:   # noqa: BLE001 - the CLI boundary reports, not raises
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    path = config["output.path"]
    if path:
        try:
            Path(path).write_bytes(data)
        except OSError as exc:
            print(f"error: cannot write {path}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.buffer.write(data)
    print(f"wall time: {record.wall_time_s:.3f} s", file=sys.stderr)
    return 0


if __name__ == "__main__":   # pragma: no cover
    sys.exit(main())
