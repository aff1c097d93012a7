"""Planar slab electromagnetics: Fresnel coefficients, multiple-reflection
denominators, the slab/half-space absorption integrands and the
coincidence-point decay-rate factor alpha.

Geometry: vacuum for z > 0 (the atom sits at z = z_A), a slab of thickness
d and permittivity eps occupying -d < z < 0, vacuum again below.

Sign conventions
----------------
``r_s``, ``r_p`` (and ``FresnelSet``) are the *dielectric-side* single
interface coefficients

    r_s = (b1 - b0)/(b1 + b0),    r_p = (b1 - eps b0)/(b1 + eps b0).

The coefficient seen from the vacuum side is their negative; the Airy
slab reflection ``slab_reflection`` is built from that vacuum-side value.

The ``*_hat`` helpers work with x = c k/omega, b = c b/omega, delta = omega
d/c and zeta = omega z/c.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C, MU_0
from .coremath import _check_k, _check_omega, as_permittivity, b0_hat, b1_hat
from .quadrature import QuadratureSpec, integrate_evanescent, integrate_finite


@dataclass(frozen=True)
class SlabGeometry:
    """Slab thickness and atom height above the slab surface, metres.

    ``thickness = math.inf`` denotes a half-space substrate.
    """

    thickness: float
    atom_height: float

    def __post_init__(self):
        if math.isnan(self.thickness) or self.thickness < 0:
            raise ValueError(f"thickness must be >= 0, got {self.thickness!r}")
        if not (math.isfinite(self.atom_height) and self.atom_height > 0):
            raise ValueError(f"atom_height must be finite and > 0, got {self.atom_height!r}")

    @property
    def halfspace(self) -> bool:
        return math.isinf(self.thickness)


@dataclass(frozen=True)
class FresnelSet:
    r_s: complex
    r_p: complex
    t_s: complex
    t_p: complex
    d_s: complex
    d_p: complex


@dataclass(frozen=True)
class IntegrandWeights:
    a_plus: float
    a_minus: float
    a_s: float


# -- dimensionless kernel ------------------------------------------------------

def _round_trip(b1, delta):
    """exp(2 i b1 delta) and exp(-2 Im b1 delta), safe for huge delta."""
    bpp = b1.imag
    with np.errstate(over="ignore", invalid="ignore"):
        att = np.exp(-2.0 * bpp * delta)
        phase = np.where(att > 0, 2.0 * b1.real * delta, 0.0)
        e2 = att * (np.cos(phase) + 1j * np.sin(phase))
    return e2, att, phase


def _interface(eps, b0, b1):
    """Dielectric-side r_s, r_p and the numerators 1 - r_s, 1 - r_p."""
    if eps == 1:
        # no interface; also avoids 0/0 at the common branch point b0 = b1 = 0
        zero = np.zeros(np.broadcast(b0, b1).shape, dtype=complex)
        one = zero + 1.0
        return zero, zero.copy(), one, one.copy()
    ds = b1 + b0
    dp = b1 + eps * b0
    one_minus_rs = 2.0 * b0 / ds
    one_minus_rp = 2.0 * eps * b0 / dp
    return (b1 - b0) / ds, (b1 - eps * b0) / dp, one_minus_rs, one_minus_rp


def _weights(x2, eps, b0, b1, delta, bare_s_weight=False):
    """A_+, A_-, A and the reflection coefficients at given x^2.

    ``delta = inf`` gives the half-space weights (D = 1).  The s-wave weight
    is |(1 - r_s)/D_s|^2; ``bare_s_weight`` divides it by |eps|, i.e.
    uses |t_s|^2 with t_s = sqrt(1/eps)(1 - r_s), without the
    impedance factor |eps|.
    """
    rs, rp, oms, omp = _interface(eps, b0, b1)
    aeps = abs(eps)
    if math.isinf(delta):
        ratio_s, ratio_p = oms, omp
    elif delta == 0:
        # e = 1: (1 - r)/(1 - r^2) = 1/(1 + r), finite also where r = 1
        ratio_s, ratio_p = 1.0 / (1.0 + rs), 1.0 / (1.0 + rp)
    else:
        e2, _, _ = _round_trip(b1, delta)
        ratio_s = oms / (1.0 - rs * rs * e2)
        ratio_p = omp / (1.0 - rp * rp * e2)
    tp2 = np.abs(ratio_p) ** 2 / aeps
    mod_b1 = np.abs(b1) ** 2
    common = tp2 * (x2 + np.abs(b0) ** 2) / aeps
    a_plus = common * (x2 + mod_b1)
    a_minus = common * (x2 - mod_b1)
    a_s = np.abs(ratio_s) ** 2
    if bare_s_weight:
        a_s = a_s / aeps
    return a_plus, a_minus, a_s, rs, rp


def halfspace_brace_hat(u, eps, bare_s_weight=False):
    """Re b1 (A+ + A) for a half-space, at Im b0 = u (units of k0)."""
    u = np.asarray(u, dtype=float)
    x2 = 1.0 + u * u
    b0 = 1j * u
    b1 = b1_hat(np.sqrt(x2), eps.real, eps.imag)
    a_plus, _, a_s, _, _ = _weights(x2, eps, b0, b1, math.inf, bare_s_weight)
    return b1.real * (a_plus + a_s)


def slab_brace_hat(u, eps, delta, bare_s_weight=False):
    """Curly-brace integrand of the finite-slab g integral at Im b0 = u.

    Zero identically for a lossless slab of finite thickness and for
    delta = 0; delta = inf falls back to the half-space form.
    """
    u = np.asarray(u, dtype=float)
    if math.isinf(delta):
        return halfspace_brace_hat(u, eps, bare_s_weight)
    if delta == 0 or eps.imag == 0:
        return np.zeros_like(u)
    x2 = 1.0 + u * u
    b0 = 1j * u
    b1 = b1_hat(np.sqrt(x2), eps.real, eps.imag)
    a_plus, a_minus, a_s, rs, rp = _weights(x2, eps, b0, b1, delta, bare_s_weight)
    bp, bpp = b1.real, b1.imag
    _, att, phase = _round_trip(b1, delta)
    one_minus_att = -np.expm1(-2.0 * bpp * delta)
    direct = bp * (a_plus + a_s) * one_minus_att
    with np.errstate(invalid="ignore"):
        echo = bp * (a_plus * np.abs(rp) ** 2 + a_s * np.abs(rs) ** 2) * one_minus_att
        sin_term = 2.0 * bpp * (a_minus * rp.real + a_s * rs.real) * np.sin(phase)
        # cos(2 Re b1 d) - 1 = -2 sin^2(Re b1 d)
        cos_term = -4.0 * bpp * (a_minus * rp.imag + a_s * rs.imag) * np.sin(0.5 * phase) ** 2
    return direct + np.where(att > 0, att * (echo + sin_term + cos_term), 0.0)


def slab_reflection_hat(x2, b0, b1, eps, delta):
    """Vacuum-side Airy reflection of the slab, (R_s, R_p)."""
    rs, rp, _, _ = _interface(eps, b0, b1)
    rs, rp = -rs, -rp
    if math.isinf(delta):
        return rs, rp
    if delta == 0:
        zero = np.zeros(np.shape(b1), dtype=complex)
        return zero, zero.copy()
    e2, _, _ = _round_trip(b1, delta)
    with np.errstate(divide="ignore", invalid="ignore"):
        return rs * (1.0 - e2) / (1.0 - rs * rs * e2), rp * (1.0 - e2) / (1.0 - rp * rp * e2)


def _oscillation_panels(*scales):
    return int(min(500, 4 + math.ceil(sum(scales) / 2.0)))


def alpha_parts(zeta, eps, delta, spec=QuadratureSpec()):
    """Propagating and evanescent pieces of alpha - 1, each a QuadratureResult.

    alpha = 1 + (1/2)[Re prop + evan] with
        prop = int_0^1 dv  F e^{2 i v zeta}            (v = b0 real)
        evan = int_0^inf du Im F e^{-2 u zeta}         (u = Im b0)
    and F = R_s + (2 x^2 - 1) R_p.
    """
    re, im = eps.real, eps.imag

    def prop_integrand(v):
        x2 = 1.0 - v * v
        b1 = b1_hat(np.sqrt(x2), re, im)
        r_s, r_p = slab_reflection_hat(x2, v + 0j, b1, eps, delta)
        return (r_s + (2.0 * x2 - 1.0) * r_p) * np.exp(2j * zeta * v)

    def evan_integrand(u):
        x2 = 1.0 + u * u
        b1 = b1_hat(np.sqrt(x2), re, im)
        r_s, r_p = slab_reflection_hat(x2, 1j * u, b1, eps, delta)
        return (r_s + (2.0 * x2 - 1.0) * r_p).imag

    d_scale = 0.0 if math.isinf(delta) else delta * math.sqrt(re)
    prop = integrate_finite(prop_integrand, 0.0, 1.0, spec,
                            initial_panels=_oscillation_panels(zeta, d_scale))
    bps = [math.sqrt(re - 1.0)] if re > 1 else []
    evan = integrate_evanescent(evan_integrand, zeta, spec, breakpoints=bps,
                                initial_panels=_oscillation_panels(d_scale))
    return prop, evan


def alpha_hat(zeta, eps, delta, spec=QuadratureSpec()):
    """alpha and its error estimate; raises QuadratureError when not converged."""
    eps = complex(eps)
    if eps == 1 or delta == 0:
        return 1.0, 0.0
    if eps.imag == 0 and not math.isinf(delta):
        raise ValueError(
            "scattering_alpha needs Im eps > 0 for a finite slab: guided-mode poles of a "
            "lossless slab lie on the real k axis"
        )
    prop, evan = alpha_parts(zeta, eps, delta, spec)
    prop.require("alpha propagating-range integral")
    evan.require("alpha evanescent-range integral")
    value = 1.0 + 0.5 * (prop.value.real + evan.value)
    return value, 0.5 * (prop.error_estimate + evan.error_estimate)


# -- SI interface --------------------------------------------------------------

def _scaled(k, omega, eps):
    eps = as_permittivity(eps)
    omega = float(_check_omega(omega))
    k0 = omega / C
    x = _check_k(k) / k0
    return eps, omega, k0, x


def _squeeze(a):
    return a[()] if np.ndim(a) == 0 else a


def fresnel(k, omega, eps, d=math.inf):
    """Single-interface coefficients r, t and slab denominators D at wavenumber ``k``.

    t^sigma = sqrt(1/eps)(1 - r^sigma); D^sigma = 1 - (r^sigma)^2 exp(2 i b1 d)
    (D = 1 for ``d = inf``).
    """
    eps, omega, k0, x = _scaled(k, omega, eps)
    if d < 0:
        raise ValueError("d must be >= 0")
    e = eps.value
    b0 = k0 * b0_hat(x)
    b1 = k0 * b1_hat(x, eps.re, eps.im)
    if np.any(b1 + b0 == 0) or np.any(b1 + e * b0 == 0):
        raise ZeroDivisionError("degenerate Fresnel denominator (b1 + b0 = 0 or b1 + eps b0 = 0)")
    rs, rp, oms, omp = _interface(e, b0, b1)
    root = np.sqrt(1.0 / e)
    if math.isinf(d):
        ds = dp = np.ones_like(rs)
    else:
        e2, _, _ = _round_trip(b1 / k0, d * k0)
        ds, dp = 1.0 - rs * rs * e2, 1.0 - rp * rp * e2
    return FresnelSet(*(_squeeze(np.asarray(v)) for v in (rs, rp, root * oms, root * omp, ds, dp)))


def slab_reflection(k, omega, eps, d):
    """Vacuum-side reflection (R_s, R_p) of a slab of thickness ``d`` (``inf`` for a half-space).

    An exact guided-mode pole of a lossless slab shows up as a non-finite value.
    """
    eps, omega, k0, x = _scaled(k, omega, eps)
    if d < 0:
        raise ValueError("d must be >= 0")
    b0 = b0_hat(x)
    b1 = b1_hat(x, eps.re, eps.im)
    r_s, r_p = slab_reflection_hat(x * x, b0, b1, eps.value, d * k0)
    return _squeeze(r_s), _squeeze(r_p)


def integrand_weights(k, omega, eps, d=math.inf, bare_s_weight=False):
    """A_+(k), A_-(k), A(k); ``d = inf`` gives the half-space weights."""
    eps, omega, k0, x = _scaled(k, omega, eps)
    b0 = b0_hat(x)
    b1 = b1_hat(x, eps.re, eps.im)
    a_plus, a_minus, a_s, _, _ = _weights(x * x, eps.value, b0, b1, d * k0, bare_s_weight)
    return IntegrandWeights(_squeeze(a_plus), _squeeze(a_minus), _squeeze(a_s))


def _evanescent(k, omega, eps, z):
    eps, omega, k0, x = _scaled(k, omega, eps)
    if np.any(x <= 1.0):
        raise ValueError("only the evanescent range k > omega/c contributes; got k <= omega/c")
    if not (math.isfinite(z) and z > 0):
        raise ValueError("z must be finite and > 0")
    u = np.sqrt((x - 1.0) * (x + 1.0))
    pref = MU_0 * omega**2 / (8.0 * math.pi**2) * x / (u * u) * np.exp(-2.0 * u * z * k0)
    return eps, k0, u, pref


def g_slab_integrand(k, omega, eps, d, z, bare_s_weight=False):
    """Integrand (per unit k) of the finite-slab g(z, z, omega), evanescent range only."""
    eps, k0, u, pref = _evanescent(k, omega, eps, z)
    if d < 0:
        raise ValueError("d must be >= 0")
    return _squeeze(pref * slab_brace_hat(u, eps.value, d * k0, bare_s_weight))


def g_halfspace_integrand(k, omega, eps, z, bare_s_weight=False):
    """Integrand (per unit k) of the half-space g(z, z, omega), evanescent range only."""
    eps, k0, u, pref = _evanescent(k, omega, eps, z)
    return _squeeze(pref * halfspace_brace_hat(u, eps.value, bare_s_weight))


def scattering_alpha(z, omega, eps, d, spec=QuadratureSpec()):
    """Decay-rate factor alpha = (isotropic Im G at the atom)/(free-space value).

    ``d = inf`` selects the half-space.  Requires Im eps > 0 for a finite
    lossless-contrast slab (eps != 1, d > 0).
    """
    eps = as_permittivity(eps)
    omega = float(_check_omega(omega))
    if not (math.isfinite(z) and z > 0):
        raise ValueError("z must be finite and > 0")
    if d < 0:
        raise ValueError("d must be >= 0")
    k0 = omega / C
    value, _ = alpha_hat(z * k0, eps.value, d * k0, spec)
    return value
