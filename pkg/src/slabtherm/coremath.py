"""Scalar building blocks: Bose-Einstein occupation and the axial
wavevectors of the vacuum and the slab medium.

Internally everything is dimensionless: transverse wavenumbers are measured
in units of the vacuum wavenumber k0 = omega/c (``x = c k / omega``), so
``b0 = sqrt(1 - x**2)`` and ``b1 = sqrt(eps - x**2)``.  The public SI
functions are thin wrappers around the ``*_hat`` versions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C, HBAR, K_B


@dataclass(frozen=True)
class Permittivity:
    """Relative permittivity ``re + 1j*im`` of the slab at the frequency of interest."""

    re: float
    im: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"permittivity must be finite, got {self.re!r} + {self.im!r}j")
        if self.re < 1.0:
            raise ValueError(f"Re eps must be >= 1, got {self.re!r}")
        if self.im < 0.0:
            raise ValueError(f"Im eps must be >= 0 (passive medium), got {self.im!r}")

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def lossless(self) -> bool:
        return self.im == 0.0


def as_permittivity(eps) -> Permittivity:
    if isinstance(eps, Permittivity):
        return eps
    eps = complex(eps)
    return Permittivity(eps.real, eps.imag)


@dataclass(frozen=True)
class ThermalPair:
    """Environment temperature ``t_env`` (T0) and slab temperature ``t_slab`` (T1), kelvin."""

    t_env: float
    t_slab: float

    def __post_init__(self):
        for name in ("t_env", "t_slab"):
            t = getattr(self, name)
            if not math.isfinite(t) or t < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {t!r}")

    def beta(self, which: int) -> float:
        """Inverse-length thermal parameter hbar c / (k T_i); ``inf`` at T = 0."""
        t = (self.t_env, self.t_slab)[which]
        return math.inf if t == 0 else HBAR * C / (K_B * t)


def _check_omega(omega):
    omega = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(omega)) or np.any(omega <= 0):
        raise ValueError("omega must be finite and > 0")
    return omega


def bose_occupation(omega, temperature):
    """Mean thermal photon number 1/(exp(hbar omega / k T) - 1).

    Exactly zero at T = 0. Works elementwise on arrays.
    """
    omega = _check_omega(omega)
    temperature = np.asarray(temperature, dtype=float)
    if not np.all(np.isfinite(temperature)) or np.any(temperature < 0):
        raise ValueError("temperature must be finite and >= 0")
    with np.errstate(divide="ignore", over="ignore"):
        a = HBAR * omega / (K_B * temperature)
        n = 1.0 / np.expm1(a)
    n = np.where(temperature == 0, 0.0, n)
    return n[()] if n.ndim == 0 else n


def occupation_from_ratio(a):
    """1/(e^a - 1) for a = hbar omega / k T (a = inf gives 0)."""
    with np.errstate(over="ignore"):
        n = 1.0 / np.expm1(np.asarray(a, dtype=float))
    return n[()] if n.ndim == 0 else n


# -- dimensionless axial wavevectors -------------------------------------------

def b0_hat(x):
    """sqrt(1 - x^2): real for x <= 1, +i sqrt(x^2 - 1) beyond the branch point."""
    x = np.asarray(x, dtype=float)
    s = (1.0 - x) * (1.0 + x)
    root = np.sqrt(np.abs(s))
    out = np.where(s >= 0, root + 0j, 1j * root)
    return out[()] if out.ndim == 0 else out


def b1_squares_hat(x, re, im):
    """(Re b1)^2 and (Im b1)^2 in units of k0^2, from the closed forms.

    Written so that the small one of the two is computed from the product
    Re b1 Im b1 = Im eps / 2 and never by cancellation. Exactly zero
    where Im eps = 0.
    """
    x = np.asarray(x, dtype=float)
    a = re - x * x
    s = np.hypot(im, a)
    big = 0.5 * (s + np.abs(a))
    with np.errstate(invalid="ignore", divide="ignore"):
        small = np.where(big > 0, 0.25 * im * im / big, 0.0)
    re2 = np.where(a >= 0, big, small)
    im2 = np.where(a >= 0, small, big)
    if im == 0:
        re2 = np.where(a >= 0, a, 0.0)
        im2 = np.where(a >= 0, 0.0, -a)
    return re2, im2


def b1_hat(x, re, im):
    """Axial wavenumber in the slab, Re b1 >= 0 and Im b1 >= 0."""
    re2, im2 = b1_squares_hat(x, re, im)
    out = np.sqrt(re2) + 1j * np.sqrt(im2)
    return out[()] if np.ndim(out) == 0 else out


def min_im_b1_hat(re, im):
    """Smallest Im b1 over the evanescent range (attained at x = 1), units of k0."""
    _, im2 = b1_squares_hat(1.0, re, im)
    return float(np.sqrt(im2))


# -- SI wrappers ---------------------------------------------------------------

def _check_k(k):
    k = np.asarray(k, dtype=float)
    if not np.all(np.isfinite(k)) or np.any(k < 0):
        raise ValueError("k must be finite and >= 0")
    return k


def axial_vacuum(k, omega):
    """Vacuum axial wavenumber b0(k) = sqrt(omega^2/c^2 - k^2) in 1/m."""
    omega = _check_omega(omega)
    k0 = omega / C
    out = k0 * b0_hat(_check_k(k) / k0)
    return out[()] if np.ndim(out) == 0 else out


def axial_medium(k, omega, eps):
    """Medium axial wavenumber b1(k) = sqrt(eps omega^2/c^2 - k^2) in 1/m."""
    eps = as_permittivity(eps)
    omega = _check_omega(omega)
    k0 = omega / C
    out = k0 * b1_hat(_check_k(k) / k0, eps.re, eps.im)
    return out[()] if np.ndim(out) == 0 else out


def min_im_b1(omega, eps):
    """Minimum of Im b1(k) over k >= omega/c, in 1/m.

    (omega / (sqrt(2) c)) [-(Re eps - 1) + sqrt(Im^2 eps + (Re eps - 1)^2)]^(1/2)
    """
    eps = as_permittivity(eps)
    omega = float(_check_omega(omega))
    return omega / C * min_im_b1_hat(eps.re, eps.im)
