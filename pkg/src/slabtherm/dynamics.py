"""Exact relaxation of the two-level atom under emission/absorption rates.

With Gamma_down = Gamma(w0) and Gamma_up = Gamma(-w0) the master equation
closes on

    d rho22/dt = -Gamma_down rho22 + Gamma_up rho11
    d rho12/dt = (i w0 - (Gamma_down + Gamma_up)/2) rho12

(level shifts omitted), which is solved in closed form below.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR, K_B


@dataclass(frozen=True)
class TwoLevelState:
    rho11: float
    rho22: float
    rho12: complex = 0j

    def __post_init__(self):
        if abs(self.rho11 + self.rho22 - 1.0) > 1e-12:
            raise ValueError(f"populations must sum to 1, got {self.rho11!r} + {self.rho22!r}")
        if not (0 <= self.rho11 <= 1 and 0 <= self.rho22 <= 1):
            raise ValueError("populations must lie in [0, 1]")
        if abs(self.rho12) ** 2 > self.rho11 * self.rho22 * (1 + 1e-12) + 1e-300:
            raise ValueError("|rho12|^2 <= rho11 rho22 violated: not a density matrix")

    @classmethod
    def excited(cls):
        return cls(0.0, 1.0)

    @classmethod
    def ground(cls):
        return cls(1.0, 0.0)

    def matrix(self):
        return np.array([[self.rho11, self.rho12], [np.conj(self.rho12), self.rho22]])


def _rates(rates):
    down, up = rates.gamma_down, rates.gamma_up
    if down is None or up is None:
        raise ValueError("rate bundle carries no transition rates (alpha undefined)")
    if not (down >= up >= 0):
        raise ValueError(f"need gamma_down >= gamma_up >= 0, got {down!r}, {up!r}")
    total = down + up
    if not total > 0:
        raise ValueError("total rate Gamma_down + Gamma_up must be > 0")
    return down, up, total


def steady_state(rates):
    """Fixed point: rho22 = N/(1 + 2N) with N = Gamma_up/(Gamma_down - Gamma_up)."""
    down, up, total = _rates(rates)
    rho22 = up / total
    return TwoLevelState(1.0 - rho22, rho22, 0j)


def trajectory(state0, rates, times):
    """Populations and coherence at each time in ``times`` (arrays)."""
    down, up, total = _rates(rates)
    t = np.asarray(times, dtype=float)
    if np.any(t < 0):
        raise ValueError("times must be >= 0")
    p_inf = up / total
    decay = np.exp(-total * t)
    rho22 = p_inf + (state0.rho22 - p_inf) * decay
    rho11 = 1.0 - rho22
    rho12 = state0.rho12 * np.exp((1j * rates.omega0 - 0.5 * total) * t)
    return rho11, rho22, rho12


def evolve(state0, rates, t):
    """State after time ``t`` (seconds)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if t == 0:
        return state0
    rho11, rho22, rho12 = trajectory(state0, rates, t)
    rho22 = float(np.clip(rho22, 0.0, 1.0))
    return TwoLevelState(1.0 - rho22, rho22, complex(rho12))


def boltzmann_temperature(state, omega0):
    """Temperature for which rho22/rho11 = exp(-hbar w0 / k T)."""
    if state.rho22 == 0:
        return 0.0
    ratio = state.rho22 / state.rho11
    if ratio >= 1:
        return math.inf
    return HBAR * omega0 / (K_B * -math.log(ratio))
