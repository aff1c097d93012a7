"""Thermalization of a two-level atom near a slab held at its own temperature.

The atom sees two baths: the environment at T0 and the slab at T1.  Its
steady state is thermal at an effective temperature fixed by

    N_eff = N(w0, T0) + 2 pi^2 c g / (mu0 w0^3 alpha) [N(w0, T1) - N(w0, T0)]

where g is the slab-absorption weighted Green's-function integral at the
atom and alpha the decay-rate enhancement factor.  g is stored in SI units
(mu0 w^2 / m); the dimensionless ``g_hat = g c / (mu0 w^3)`` is what the
quadrature actually computes.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .constants import C, EPSILON_0, HBAR, K_B, MU_0
from .coremath import (
    Permittivity,
    ThermalPair,
    _check_omega,
    as_permittivity,
    b1_squares_hat,
    bose_occupation,
)
from .layered import SlabGeometry, alpha_hat, halfspace_brace_hat, slab_brace_hat
from .quadrature import QuadratureError, QuadratureResult, QuadratureSpec, integrate_evanescent

log = logging.getLogger(__name__)

__all__ = [
    "AtomSpec",
    "Permittivity",
    "SlabGeometry",
    "ThermalPair",
    "g_slab_hat",
    "mixed_occupation",
    "CriterionResult",
    "RateBundle",
    "SandwichViolation",
    "effective_occupation",
    "effective_temperature",
    "g_coincident",
    "g_halfspace",
    "thickness_criterion",
    "transition_rates",
]


class SandwichViolation(RuntimeError):
    """N_eff fell outside [min(N0, N1), max(N0, N1)]: a numerical bug, not physics."""


@dataclass(frozen=True)
class AtomSpec:
    """Transition angular frequency ``omega0`` (rad/s) and |d21|^2 (C^2 m^2)."""

    omega0: float
    dipole_sq: float

    def __post_init__(self):
        if not (math.isfinite(self.omega0) and self.omega0 > 0):
            raise ValueError(f"omega0 must be finite and > 0, got {self.omega0!r}")
        if not (math.isfinite(self.dipole_sq) and self.dipole_sq > 0):
            raise ValueError(f"dipole_sq must be finite and > 0, got {self.dipole_sq!r}")

    @classmethod
    def from_lambda0(cls, lambda0, dipole_sq):
        return cls(C / lambda0, dipole_sq)

    @classmethod
    def from_gamma0(cls, omega0, gamma0):
        return cls(omega0, gamma0 * 3 * math.pi * EPSILON_0 * HBAR * C**3 / omega0**3)

    @property
    def lambda0(self):
        """Reduced transition wavelength c / omega0."""
        return C / self.omega0

    @property
    def gamma0(self):
        """Free-space spontaneous emission rate w0^3 |d|^2 / (3 pi eps0 hbar c^3)."""
        return self.omega0**3 * self.dipole_sq / (3 * math.pi * EPSILON_0 * HBAR * C**3)


@dataclass(frozen=True)
class RateBundle:
    """Everything computed for one parameter point.

    ``alpha`` and the rates are ``None`` for a lossless slab of finite
    thickness, where alpha is not defined on the real k axis; N_eff and
    T_eff are still exact there because g vanishes.
    """

    omega0: float
    alpha: float | None
    g_value: float
    n_env: float
    n_slab: float
    n_eff: float
    gamma0: float
    gamma_down: float | None
    gamma_up: float | None
    t_eff: float
    diagnostics: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class CriterionResult:
    lhs_exact: float
    lhs_smallloss: float | None
    satisfied_exact: bool
    satisfied_smallloss: bool | None
    d_min_exact: float
    d_min_smallloss: float | None


# -- g integrals ----------------------------------------------------------------

def _g_scale(omega):
    return MU_0 * omega**3 / (8 * math.pi**2 * C)


def _breakpoints(eps):
    return [math.sqrt(eps.re - 1.0)] if eps.re > 1 else []


def g_slab_hat(zeta, eps, delta, spec=QuadratureSpec(), bare_s_weight=False):
    """int_0^inf du (1/u) e^{-2 u zeta} {slab brace}: a QuadratureResult.

    Multiply by mu0 w^3 / (8 pi^2 c) for g in SI units.
    """
    eps = as_permittivity(eps)
    if not math.isinf(delta) and (delta == 0 or eps.im == 0):
        return _exact_zero()
    if eps.re == 1 and eps.im == 0:
        return _exact_zero()
    e = eps.value
    if math.isinf(delta):
        def f(u):
            return halfspace_brace_hat(u, e, bare_s_weight) / u
        panels = 4
    else:
        def f(u):
            return slab_brace_hat(u, e, delta, bare_s_weight) / u
        panels = int(min(500, 4 + math.ceil(delta * math.sqrt(eps.re) / 2)))
    return integrate_evanescent(f, zeta, spec, breakpoints=_breakpoints(eps),
                                initial_panels=panels)


def _exact_zero():
    return QuadratureResult(0.0, 0.0, 0, True)


def _check_point(z, omega):
    omega = float(_check_omega(omega))
    if not (math.isfinite(z) and z > 0):
        raise ValueError(f"atom height must be finite and > 0, got {z!r}")
    return omega, omega / C


def g_coincident(geom, omega, eps, spec=QuadratureSpec(), bare_s_weight=False):
    """g(z_A, z_A, omega) for a slab of finite thickness (or inf), SI units.

    Exactly 0 for a lossless slab of finite thickness, for d = 0 and for eps = 1.
    Raises QuadratureError if the integral does not converge.
    """
    omega, k0 = _check_point(geom.atom_height, omega)
    res = g_slab_hat(geom.atom_height * k0, eps, geom.thickness * k0, spec, bare_s_weight)
    return _g_scale(omega) * res.require("g integral")


def g_halfspace(z, omega, eps, spec=QuadratureSpec(), bare_s_weight=False):
    """g(z, z, omega) for a half-space substrate, SI units."""
    omega, k0 = _check_point(z, omega)
    res = g_slab_hat(z * k0, eps, math.inf, spec, bare_s_weight)
    return _g_scale(omega) * res.require("half-space g integral")


# -- rates and temperatures -----------------------------------------------------

def transition_rates(atom, n_eff, alpha):
    """(Gamma(w0), Gamma(-w0)) = alpha Gamma0 (1 + N_eff, N_eff): emission and absorption."""
    if not n_eff >= 0:
        raise ValueError(f"n_eff must be >= 0, got {n_eff!r}")
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha!r}")
    g0 = alpha * atom.gamma0
    return g0 * (1.0 + n_eff), g0 * n_eff


def effective_temperature(atom, n_eff):
    """T_eff = (hbar w0 / k) / ln(1 + 1/N_eff); 0 for N_eff = 0."""
    if not n_eff >= 0:
        raise ValueError(f"n_eff must be >= 0, got {n_eff!r}")
    if n_eff == 0:
        return 0.0
    if math.isinf(n_eff):
        return math.inf
    return HBAR * atom.omega0 / (K_B * math.log1p(1.0 / n_eff))


def mixed_occupation(omega0, alpha, g, n_env, n_slab):
    """N_eff from its ingredients; g in SI units."""
    if g == 0 or n_slab == n_env:
        return n_env
    if not alpha > 0:
        raise ValueError(f"alpha must be > 0, got {alpha!r}")
    weight = 2 * math.pi**2 * C * g / (MU_0 * omega0**3 * alpha)
    return n_env + weight * (n_slab - n_env)


def effective_occupation(atom, geom, eps, baths, spec=QuadratureSpec(), bare_s_weight=False):
    """Run the full pipeline for one parameter point and return a RateBundle."""
    eps = as_permittivity(eps)
    omega, k0 = _check_point(geom.atom_height, atom.omega0)
    zeta = geom.atom_height * k0
    delta = geom.thickness * k0

    g_res = g_slab_hat(zeta, eps, delta, spec, bare_s_weight)
    g_res.require("g integral")
    g = _g_scale(omega) * g_res.value

    try:
        alpha, alpha_err = alpha_hat(zeta, eps.value, delta, spec)
    except ValueError:
        # lossless finite slab: g == 0 and alpha undefined
        alpha, alpha_err = None, None
    if alpha is not None and not alpha > 0:
        raise QuadratureError(f"non-positive alpha {alpha!r}")

    n0 = float(bose_occupation(omega, baths.t_env))
    n1 = float(bose_occupation(omega, baths.t_slab))
    n_eff = mixed_occupation(omega, alpha, g, n0, n1)
    lo, hi = min(n0, n1), max(n0, n1)
    slack = 1e-12 * hi
    if not (lo - slack <= n_eff <= hi + slack):
        raise SandwichViolation(
            f"N_eff={n_eff!r} outside [{lo!r}, {hi!r}] (alpha={alpha!r}, g={g!r})"
        )

    t_eff = baths.t_env if n_eff == n0 else effective_temperature(atom, n_eff)
    if alpha is None:
        down = up = None
    else:
        down, up = transition_rates(atom, n_eff, alpha)
    diagnostics = {
        "g_error": _g_scale(omega) * g_res.error_estimate,
        "g_evaluations": g_res.evaluations,
        "alpha_error": alpha_err,
    }
    return RateBundle(omega, alpha, g, n0, n1, n_eff, atom.gamma0, down, up, t_eff, diagnostics)


# -- thickness criterion --------------------------------------------------------

def thickness_criterion(eps, d, lambda0):
    """How thick must the slab be to act as a half-space?

    ``lhs_exact = 2 min(Im b1) d`` written with lambda0 = c/omega0, and its
    small-loss form ``Im eps / sqrt(Re eps - 1) * d / lambda0``.  Both
    satisfied only when strictly greater than 1.  The small-loss fields are
    ``None`` when Re eps <= 1.
    """
    eps = as_permittivity(eps)
    if math.isnan(d) or d < 0:
        raise ValueError(f"d must be >= 0, got {d!r}")
    if not (math.isfinite(lambda0) and lambda0 > 0):
        raise ValueError(f"lambda0 must be finite and > 0, got {lambda0!r}")
    ratio = d / lambda0
    _, im2 = b1_squares_hat(1.0, eps.re, eps.im)
    # sqrt(2) [-(Re eps - 1) + sqrt(Im^2 eps + (Re eps - 1)^2)]^(1/2) = 2 sqrt(im2)
    factor = 2.0 * math.sqrt(float(im2))
    lhs_exact = math.inf if math.isinf(d) else factor * ratio
    d_min_exact = math.inf if factor == 0 else lambda0 / factor
    if eps.re > 1:
        small = eps.im / math.sqrt(eps.re - 1.0)
        lhs_small = math.inf if math.isinf(d) else small * ratio
        d_min_small = math.inf if eps.im == 0 else lambda0 * (math.sqrt(eps.re - 1.0) / eps.im)
        sat_small = lhs_small > 1
    else:
        lhs_small = d_min_small = sat_small = None
    return CriterionResult(lhs_exact, lhs_small, lhs_exact > 1, sat_small, d_min_exact, d_min_small)

