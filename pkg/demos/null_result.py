"""
No out-of-equilibrium effect from a lossless slab
=================================================

Hold a slab at 600 K in a 300 K environment.  If the slab does not absorb
(Im eps = 0) and has finite thickness, it cannot emit either, so the atom
ends up at the environment temperature, exactly.  A lossless half-space is
the exception: its evanescent tail still couples to the atom.
"""
import math

from slabtherm import AtomSpec, Permittivity, SlabGeometry, ThermalPair, effective_occupation

atom = AtomSpec.from_lambda0(1e-6, 1e-58)  # 1 um reduced wavelength
baths = ThermalPair(t_env=300.0, t_slab=600.0)
height = 1e-6

for name, eps, d in [
    ("2 mm lossless slab", Permittivity(2.1, 0.0), 2e-3),
    ("2 mm slab, Im eps = 1e-3", Permittivity(2.1, 1e-3), 2e-3),
    ("lossless half-space", Permittivity(2.1, 0.0), math.inf),
]:
    b = effective_occupation(atom, SlabGeometry(d, height), eps, baths)
    print(f"{name:28s} g = {b.g_value:10.4e}   T_eff = {b.t_eff:.6f} K")

# the lossless slab gives g == 0.0 and T_eff == 300.0 exactly, not to rounding
