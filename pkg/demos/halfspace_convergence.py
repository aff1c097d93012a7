"""
When does a slab act like a half-space?
=======================================

The slab-absorption integral g approaches its half-space value once
2 min(Im b1) d > 1, i.e. once a round trip through the slab is damped.
Below that, thin-film interference makes the approach ripple, so the
deviation is not monotone in d even though its envelope decays.
"""
import numpy as np

from slabtherm import AtomSpec, Permittivity, SlabGeometry, g_coincident, g_halfspace, thickness_criterion

lambda0 = 1e-6
atom = AtomSpec.from_lambda0(lambda0, 1e-58)
eps = Permittivity(2.0, 0.1)

crit = thickness_criterion(eps, lambda0, lambda0)
print(f"lhs grows by {crit.lhs_exact:.5f} per lambda0; d_min = {crit.d_min_exact / lambda0:.4f} lambda0 "
      f"(small-loss estimate {crit.d_min_smallloss / lambda0:g} lambda0)")

g_half = g_halfspace(lambda0, atom.omega0, eps)
print(f"\nhalf-space g = {g_half:.6e}\n")
print(f"{'lhs':>6} {'d/lambda0':>10} {'|g - g_half|/g_half':>20}")
for lhs in np.geomspace(0.25, 16, 19):
    d = lhs * lambda0 / crit.lhs_exact
    g = g_coincident(SlabGeometry(d, lambda0), atom.omega0, eps)
    print(f"{lhs:6.2f} {d / lambda0:10.3f} {abs(g - g_half) / g_half:20.3e}")

# note the bumps around lhs ~ 1: Fabry-Perot resonances of the slab
