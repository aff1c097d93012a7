"""Physical constants (CODATA, SI) used throughout the package."""
from scipy import constants as _c

HBAR = _c.hbar
C = _c.c
K_B = _c.k
MU_0 = _c.mu_0
EPSILON_0 = _c.epsilon_0
