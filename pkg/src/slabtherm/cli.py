"""Command-line front end.

    slabtherm point     --config run.cfg            one parameter point, JSON
    slabtherm sweep     --config run.cfg --out s.csv [--jobs 4]
    slabtherm evolve    --config run.cfg --out t.csv
    slabtherm criterion --config run.cfg            thickness criterion, JSON

Parameters come from a ``key = value`` file (see ``slabtherm.config``) and
can be overridden with ``--set key=value`` and ``--rel-tol``.

Exit codes: 0 ok, 2 configuration error, 3 quadrature failure (or a
numerical sanity check tripping), 4 some sweep rows failed.
"""
from __future__ import annotations

import argparse
import io
import itertools
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import config as cfgmod
from .config import ConfigError
from .constants import C, MU_0
from .coremath import b1_squares_hat
from .dynamics import TwoLevelState, trajectory
from .nonequilibrium import (
    SandwichViolation,
    effective_occupation,
    g_halfspace,
    thickness_criterion,
)
from .quadrature import QuadratureError

log = logging.getLogger("slabtherm")

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_PARTIAL = 0, 2, 3, 4

INPUT_COLUMNS = (
    "atom.omega0",
    "atom.dipole_sq",
    "eps.re",
    "eps.im",
    "geometry.d",
    "geometry.z_a",
    "baths.t_env",
    "baths.t_slab",
)
RESULT_COLUMNS = (
    "alpha",
    "g",
    "g_hat",
    "n_env",
    "n_slab",
    "n_eff",
    "gamma0",
    "gamma_down",
    "gamma_up",
    "t_eff",
    "lhs_exact",
    "lhs_smallloss",
    "g_error",
    "g_evaluations",
    "alpha_error",
)
SWEEP_COLUMNS = INPUT_COLUMNS + RESULT_COLUMNS + ("g_halfspace", "g_rel_dev", "status")
K2_COLUMNS = ("eps.re", "eps.im", "k2", "re2_b1", "im2_b1", "status")
EVOLVE_COLUMNS = ("t", "rho11", "rho22", "abs_rho12")


# -- evaluation -----------------------------------------------------------------

def evaluate_point(cfg):
    """Inputs and results for one point as an ordered dict (None for undefined)."""
    atom, geom = cfg.atom, cfg.geometry
    bundle = effective_occupation(atom, geom, cfg.eps, cfg.baths, cfg.quad, cfg.bare_s_weight)
    crit = thickness_criterion(cfg.eps, geom.thickness, atom.lambda0)
    row = {key: cfg.params[key] for key in INPUT_COLUMNS}
    g_unit = _g_unit(atom.omega0)
    row.update(
        alpha=bundle.alpha,
        g=bundle.g_value,
        g_hat=bundle.g_value / g_unit,
        n_env=bundle.n_env,
        n_slab=bundle.n_slab,
        n_eff=bundle.n_eff,
        gamma0=bundle.gamma0,
        gamma_down=bundle.gamma_down,
        gamma_up=bundle.gamma_up,
        t_eff=bundle.t_eff,
        lhs_exact=crit.lhs_exact,
        lhs_smallloss=crit.lhs_smallloss,
        g_error=bundle.diagnostics["g_error"],
        g_evaluations=bundle.diagnostics["g_evaluations"],
        alpha_error=bundle.diagnostics["alpha_error"],
    )
    return row, bundle


def _g_unit(omega0):
    """mu0 w^3 / c: g divided by this is the dimensionless g_hat."""
    return MU_0 * omega0**3 / C


def _sweep_row(job):
    """One sweep row; never raises, failures go to the status column."""
    cfg, assignment = job
    if "k2" in assignment:
        return _k2_row(cfg, assignment)
    row = {key: assignment.get(key, cfg.params.get(key)) for key in INPUT_COLUMNS}
    try:
        point = cfgmod.point_params(cfg, assignment)
        result, _ = evaluate_point(point)
        row.update(result)
        geom = point.geometry
        g_hs = g_halfspace(geom.atom_height, point.atom.omega0, point.eps, point.quad,
                           point.bare_s_weight)
        row["g_halfspace"] = g_hs
        row["g_rel_dev"] = abs(result["g"] - g_hs) / g_hs if g_hs != 0 else None
        row["status"] = "ok"
    except (ConfigError, ValueError, QuadratureError, SandwichViolation) as exc:
        log.warning("sweep point %s failed: %s", assignment, exc)
        row["status"] = f"error:{type(exc).__name__}"
    return row


def _k2_row(cfg, assignment):
    """Fig. 2 mode: (c/w)^2 Re^2 b1 and Im^2 b1 against (c/w)^2 k^2."""
    re = assignment.get("eps.re", cfg.params["eps.re"])
    im = assignment.get("eps.im", cfg.params["eps.im"])
    k2 = assignment["k2"]
    row = {"eps.re": re, "eps.im": im, "k2": k2}
    try:
        if not (k2 >= 0 and math.isfinite(k2)):
            raise ValueError(f"k2 must be finite and >= 0, got {k2!r}")
        cfgmod.point_params(cfg, {"eps.re": re, "eps.im": im})
        re2, im2 = b1_squares_hat(math.sqrt(k2), re, im)
        row.update(re2_b1=float(re2), im2_b1=float(im2), status="ok")
    except (ConfigError, ValueError) as exc:
        row["status"] = f"error:{type(exc).__name__}"
    return row


def sweep_jobs(cfg):
    """(cfg, assignment) pairs in row order: first axis slowest."""
    if not cfg.axes:
        raise ConfigError("sweep needs sweep.axis (and optionally sweep2.axis)")
    names = [axis.name for axis in cfg.axes]
    return [(cfg, dict(zip(names, combo)))
            for combo in itertools.product(*(axis.values for axis in cfg.axes))]


def run_sweep(cfg, jobs=1):
    work = sweep_jobs(cfg)
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_row, work, chunksize=1))
    else:
        rows = [_sweep_row(job) for job in work]
    k2_mode = any(axis.name == cfgmod.WAVEVECTOR_AXIS for axis in cfg.axes)
    return rows, (K2_COLUMNS if k2_mode else SWEEP_COLUMNS)


# -- formatting -----------------------------------------------------------------

def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % value


def format_csv(rows, columns):
    out = io.StringIO()
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_csv_cell(row.get(c)) for c in columns) + "\n")
    return out.getvalue()


def _json_value(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, np.generic):
        return _json_value(value.item())
    return value


def format_json(record):
    return json.dumps({k: _json_value(v) for k, v in record.items()}, indent=2) + "\n"


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _run_settings(cfg):
    return {
        "quad.rel_tol": cfg.quad.rel_tol,
        "quad.abs_tol": cfg.quad.abs_tol,
        "quad.max_subdivisions": cfg.quad.max_subdivisions,
        "model.s_weight": cfg.s_weight,
    }


# -- subcommands ----------------------------------------------------------------

def cmd_point(cfg, args):
    row, _ = evaluate_point(cfg)
    record = {k: row[k] for k in INPUT_COLUMNS}
    record.update(_run_settings(cfg))
    record.update((k, row[k]) for k in RESULT_COLUMNS)
    record["status"] = "ok"
    _emit(format_json(record), args.out)
    return EXIT_OK


def cmd_sweep(cfg, args):
    rows, columns = run_sweep(cfg, args.jobs)
    _emit(format_csv(rows, columns), args.out)
    failed = sum(row["status"] != "ok" for row in rows)
    if failed:
        print(f"slabtherm: {failed} of {len(rows)} sweep rows failed", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_evolve(cfg, args):
    bundle = effective_occupation(cfg.atom, cfg.geometry, cfg.eps, cfg.baths, cfg.quad,
                                  cfg.bare_s_weight)
    if bundle.gamma_down is None:
        raise ConfigError("decay rates undefined for a lossless slab of finite thickness; "
                          "use Im eps > 0 or geometry.d = halfspace")
    total = bundle.gamma_down + bundle.gamma_up
    ev = cfg.evolve
    t_max = ev.get("t_max", 30.0 / total)
    samples = ev.get("samples", 101)
    if not (t_max > 0 and math.isfinite(t_max)):
        raise ConfigError(f"evolve.t_max must be finite and > 0, got {t_max!r}")
    if samples < 2:
        raise ConfigError(f"evolve.samples must be >= 2, got {samples!r}")
    rho22 = ev.get("rho22", 1.0)
    rho12 = complex(ev.get("rho12_re", 0.0), ev.get("rho12_im", 0.0))
    try:
        state0 = TwoLevelState(1.0 - rho22, rho22, rho12)
    except ValueError as exc:
        raise ConfigError(f"initial state: {exc}") from None
    times = np.linspace(0.0, t_max, samples)
    rho11, rho22s, rho12s = trajectory(state0, bundle, times)
    rows = [
        {"t": float(t), "rho11": float(a), "rho22": float(b), "abs_rho12": float(abs(c))}
        for t, a, b, c in zip(times, rho11, rho22s, rho12s)
    ]
    _emit(format_csv(rows, EVOLVE_COLUMNS), args.out)
    return EXIT_OK


def cmd_criterion(cfg, args):
    lambda0 = cfg.atom.lambda0
    crit = thickness_criterion(cfg.eps, cfg.params["geometry.d"], lambda0)
    record = {
        "eps.re": cfg.params["eps.re"],
        "eps.im": cfg.params["eps.im"],
        "geometry.d": cfg.params["geometry.d"],
        "lambda0": lambda0,
        "lhs_exact": crit.lhs_exact,
        "lhs_smallloss": crit.lhs_smallloss,
        "satisfied_exact": crit.satisfied_exact,
        "satisfied_smallloss": crit.satisfied_smallloss,
        "d_min_exact": crit.d_min_exact,
        "d_min_smallloss": crit.d_min_smallloss,
    }
    _emit(format_json(record), args.out)
    return EXIT_OK


COMMANDS = {
    "point": cmd_point,
    "sweep": cmd_sweep,
    "evolve": cmd_evolve,
    "criterion": cmd_criterion,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slabtherm",
        description="Effective temperature and relaxation of a two-level atom "
                    "near a slab out of thermal equilibrium.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", metavar="PATH",
                        help="key = value file, or JSON object with dotted keys")
    parser.add_argument("--out", metavar="PATH", help="write here instead of stdout")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for sweep (default 1)")
    parser.add_argument("--rel-tol", type=float, metavar="X",
                        help="override quad.rel_tol")
    parser.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                        dest="overrides", help="override one config key (repeatable)")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def _overrides(args):
    out = {}
    for item in args.overrides:
        if "=" not in item:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        key, value = (s.strip() for s in item.split("=", 1))
        out[key] = value
    if args.rel_tol is not None:
        out["quad.rel_tol"] = args.rel_tol
    return out


def _fail(kind, exc, code):
    print(f"slabtherm: {kind}: {exc}", file=sys.stderr)
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="slabtherm: %(levelname)s: %(message)s")
    try:
        if args.jobs < 1:
            raise ConfigError("--jobs must be >= 1")
        overrides = _overrides(args)
        if args.config:
            cfg = cfgmod.load(args.config, overrides)
        else:
            cfg = cfgmod.build({}, overrides)
        return COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        return _fail("config error", exc, EXIT_CONFIG)
    except (QuadratureError, SandwichViolation) as exc:
        return _fail("numerical failure", exc, EXIT_NUMERIC)
    except ValueError as exc:
        return _fail("invalid input", exc, EXIT_CONFIG)


if __name__ == "__main__":
    sys.exit(main())
