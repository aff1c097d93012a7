"""
An atom relaxing between two baths
==================================

Start the atom in its excited state near a 1 um thick absorbing slab at
900 K, in a 300 K room, and watch it settle at the effective temperature.
"""
import numpy as np

from slabtherm import (
    AtomSpec,
    Permittivity,
    SlabGeometry,
    ThermalPair,
    TwoLevelState,
    boltzmann_temperature,
    effective_occupation,
    steady_state,
    trajectory,
)

atom = AtomSpec.from_gamma0(3e14, 1e7)  # 1 um transition, 1e7 /s free-space rate
rates = effective_occupation(atom, SlabGeometry(1e-6, 0.2e-6), Permittivity(4.0, 0.5),
                             ThermalPair(300.0, 900.0))
print(f"alpha = {rates.alpha:.4f}, N_eff = {rates.n_eff:.4e}, T_eff = {rates.t_eff:.2f} K")
print(f"Gamma_down = {rates.gamma_down:.4e} /s, Gamma_up = {rates.gamma_up:.4e} /s")

total = rates.gamma_down + rates.gamma_up
times = np.linspace(0, 8 / total, 9)
rho11, rho22, rho12 = trajectory(TwoLevelState(0.4, 0.6, 0.3 + 0.2j), rates, times)
print(f"\n{'t (ns)':>8} {'rho22':>12} {'|rho12|':>12}")
for t, p, c in zip(times, rho22, rho12):
    print(f"{t * 1e9:8.2f} {p:12.6e} {abs(c):12.6e}")

# the fixed point is thermal, at T_eff
final = steady_state(rates)
print(f"\nsteady state rho22 = {final.rho22:.6e}; Boltzmann temperature "
      f"{boltzmann_temperature(final, atom.omega0):.6f} K")
