"""Run configuration: flat ``key = value`` text with dotted section names.

Example::

    # 1 um transition, 2 mm fused-silica-like slab
    atom.lambda0   = 1e-6
    atom.gamma0    = 1e7
    eps.re         = 2.1
    eps.im         = 0.001
    geometry.d     = 2e-3          # or: halfspace
    geometry.z_a   = 1e-6
    baths.t_env    = 300
    baths.t_slab   = 600
    sweep.axis     = geometry.d    # optional outer axis
    sweep.min      = 1e-6
    sweep.max      = 1e-4
    sweep.count    = 20
    sweep.scale    = log
    sweep2.axis    = eps.im        # optional inner axis
    sweep2.values  = 1, 5, 10

A JSON object with the same dotted keys is accepted too, so the output of
``slabtherm point`` can be fed straight back in; keys without a dot (the
result fields) are ignored.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .coremath import Permittivity, ThermalPair
from .layered import SlabGeometry
from .nonequilibrium import AtomSpec
from .quadrature import QuadratureSpec


class ConfigError(ValueError):
    pass


# parameters that a sweep axis may name
NUMERIC_KEYS = (
    "atom.omega0",
    "atom.lambda0",
    "atom.dipole_sq",
    "atom.gamma0",
    "eps.re",
    "eps.im",
    "geometry.d",
    "geometry.z_a",
    "baths.t_env",
    "baths.t_slab",
)
WAVEVECTOR_AXIS = "k2"
OTHER_KEYS = (
    "quad.rel_tol",
    "quad.abs_tol",
    "quad.max_subdivisions",
    "model.s_weight",
    "evolve.t_max",
    "evolve.samples",
    "evolve.rho22",
    "evolve.rho12_re",
    "evolve.rho12_im",
)
AXIS_FIELDS = ("axis", "min", "max", "count", "scale", "values")
KNOWN_KEYS = set(NUMERIC_KEYS) | set(OTHER_KEYS) | {
    f"{s}.{f}" for s in ("sweep", "sweep2") for f in AXIS_FIELDS
}


@dataclass(frozen=True)
class SweepAxis:
    name: str
    values: tuple

    @classmethod
    def from_fields(cls, section, fields):
        name = fields.get("axis")
        if name is None:
            raise ConfigError(f"{section}.axis missing")
        if "values" in fields:
            try:
                values = tuple(float(v) for v in str(fields["values"]).split(","))
            except ValueError as exc:
                raise ConfigError(f"{section}.values: {exc}") from None
            return cls(name, values)
        try:
            lo, hi = float(fields["min"]), float(fields["max"])
            count = int(fields.get("count", 1))
        except KeyError as exc:
            raise ConfigError(f"{section}.{exc.args[0]} missing") from None
        except ValueError as exc:
            raise ConfigError(f"{section}: {exc}") from None
        if count < 1:
            raise ConfigError(f"{section}.count must be >= 1")
        scale = fields.get("scale", "linear")
        if count == 1:
            values = np.array([lo])
        elif scale == "linear":
            values = np.linspace(lo, hi, count)
        elif scale == "log":
            if lo <= 0 or hi <= 0:
                raise ConfigError(f"{section}: log scale needs positive min and max")
            values = np.geomspace(lo, hi, count)
        else:
            raise ConfigError(f"{section}.scale must be 'linear' or 'log', got {scale!r}")
        return cls(name, tuple(float(v) for v in values))


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters; ``params`` holds the canonical numeric inputs."""

    params: dict
    quad: QuadratureSpec = QuadratureSpec()
    s_weight: str = "impedance"
    axes: tuple = ()
    evolve: dict = field(default_factory=dict)

    # canonical inputs: omega0 and dipole_sq always present, d may be inf
    @property
    def atom(self):
        return AtomSpec(self.params["atom.omega0"], self.params["atom.dipole_sq"])

    @property
    def eps(self):
        return Permittivity(self.params["eps.re"], self.params["eps.im"])

    @property
    def geometry(self):
        return SlabGeometry(self.params["geometry.d"], self.params["geometry.z_a"])

    @property
    def baths(self):
        return ThermalPair(self.params["baths.t_env"], self.params["baths.t_slab"])

    @property
    def bare_s_weight(self):
        return self.s_weight == "bare"

    def with_params(self, **updates):
        p = dict(self.params)
        p.update(updates)
        return replace(self, params=p)


def parse_text(text):
    """``key = value`` lines to a dict of strings. ``#`` starts a comment."""
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    return raw


def parse_source(text):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON config: {exc}") from None
        # result fields of a previous run carry no dot
        return {k: v for k, v in data.items() if "." in k and v is not None}
    return parse_text(text)


def _number(raw, key):
    try:
        v = float(raw[key])
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: not a number: {raw[key]!r}") from None
    if math.isnan(v):
        raise ConfigError(f"{key}: NaN not allowed")
    return v


def build(raw, overrides=None):
    """Validate a raw key/value mapping into a RunConfig."""
    raw = dict(raw)
    if overrides:
        raw.update(overrides)
    unknown = sorted(k for k in raw if k not in KNOWN_KEYS)
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(unknown)}")

    def exactly_one(a, b):
        given = [k for k in (a, b) if k in raw]
        if len(given) != 1:
            raise ConfigError(f"give exactly one of {a} / {b}")
        return given[0]

    params = {}
    which = exactly_one("atom.omega0", "atom.lambda0")
    strength = exactly_one("atom.dipole_sq", "atom.gamma0")
    for key in NUMERIC_KEYS:
        if key == "geometry.d" and str(raw.get(key, "")).strip().lower() == "halfspace":
            params[key] = math.inf
        elif key in raw:
            params[key] = _number(raw, key)
    for key in ("eps.re", "geometry.d", "geometry.z_a", "baths.t_env", "baths.t_slab"):
        if key not in params:
            raise ConfigError(f"{key} missing")
    params.setdefault("eps.im", 0.0)
    params["_given"] = (which, strength)

    quad = QuadratureSpec()
    try:
        quad = QuadratureSpec(
            rel_tol=_number(raw, "quad.rel_tol") if "quad.rel_tol" in raw else quad.rel_tol,
            abs_tol=_number(raw, "quad.abs_tol") if "quad.abs_tol" in raw else quad.abs_tol,
            max_subdivisions=int(raw.get("quad.max_subdivisions", quad.max_subdivisions)),
        )
    except ValueError as exc:
        raise ConfigError(f"quad: {exc}") from None
    s_weight = str(raw.get("model.s_weight", "impedance"))
    if s_weight not in ("impedance", "bare"):
        raise ConfigError("model.s_weight must be 'impedance' or 'bare'")

    axes = []
    for section in ("sweep", "sweep2"):
        fields = {f: raw[f"{section}.{f}"] for f in AXIS_FIELDS if f"{section}.{f}" in raw}
        if fields:
            axis = SweepAxis.from_fields(section, fields)
            if axis.name != WAVEVECTOR_AXIS and axis.name not in params:
                raise ConfigError(f"{section}.axis {axis.name!r} is not a parameter of this config")
            axes.append(axis)
    if len(axes) == 2 and axes[0].name == axes[1].name:
        raise ConfigError("the two sweep axes must differ")

    evolve = {}
    for key in ("evolve.t_max", "evolve.rho22", "evolve.rho12_re", "evolve.rho12_im"):
        if key in raw:
            evolve[key.split(".", 1)[1]] = _number(raw, key)
    if "evolve.samples" in raw:
        evolve["samples"] = int(_number(raw, "evolve.samples"))

    cfg = RunConfig(params, quad, s_weight, tuple(axes), evolve)
    return canonical(cfg)


def canonical(cfg):
    """Resolve lambda0/gamma0 into omega0/dipole_sq and validate the physics types."""
    p = dict(cfg.params)
    which, strength = p.pop("_given", ("atom.omega0", "atom.dipole_sq"))
    try:
        if which == "atom.lambda0":
            omega0 = AtomSpec.from_lambda0(p["atom.lambda0"], 1.0).omega0
        else:
            omega0 = p["atom.omega0"]
        if strength == "atom.gamma0":
            atom = AtomSpec.from_gamma0(omega0, p["atom.gamma0"])
        else:
            atom = AtomSpec(omega0, p["atom.dipole_sq"])
        p["atom.omega0"], p["atom.dipole_sq"] = atom.omega0, atom.dipole_sq
        p["_given"] = (which, strength)
        out = replace(cfg, params=p)
        out.eps, out.geometry, out.baths  # validation
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(str(exc)) from None
    return out


def point_params(cfg, assignments):
    """Config for one sweep point: ``assignments`` maps axis names to values."""
    p = dict(cfg.params)
    p.update(assignments)
    return canonical(replace(cfg, params=p))


def load(path, overrides=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return build(parse_source(text), overrides)
