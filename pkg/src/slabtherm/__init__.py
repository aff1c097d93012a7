"""Thermalization of a two-level atom near a dielectric slab out of thermal equilibrium."""
from .coremath import Permittivity, ThermalPair, bose_occupation, b1_squares_hat
from .dynamics import TwoLevelState, boltzmann_temperature, evolve, steady_state, trajectory
from .layered import SlabGeometry, fresnel, scattering_alpha, slab_reflection
from .nonequilibrium import (
    AtomSpec,
    CriterionResult,
    RateBundle,
    SandwichViolation,
    effective_occupation,
    effective_temperature,
    g_coincident,
    g_halfspace,
    thickness_criterion,
    transition_rates,
)
from .quadrature import QuadratureError, QuadratureSpec

__version__ = "0.1.0"

__all__ = [
    "AtomSpec",
    "CriterionResult",
    "Permittivity",
    "QuadratureError",
    "QuadratureSpec",
    "RateBundle",
    "SandwichViolation",
    "SlabGeometry",
    "ThermalPair",
    "TwoLevelState",
    "b1_squares_hat",
    "boltzmann_temperature",
    "bose_occupation",
    "effective_occupation",
    "effective_temperature",
    "evolve",
    "fresnel",
    "g_coincident",
    "g_halfspace",
    "scattering_alpha",
    "slab_reflection",
    "steady_state",
    "thickness_criterion",
    "trajectory",
    "transition_rates",
]
