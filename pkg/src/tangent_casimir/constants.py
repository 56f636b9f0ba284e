"""Numerical tolerance constants, kept in one place so tests and library agree.

hbar = 1 throughout the package.
"""

# Magnitude below which a denominator / determinant counts as singular.
SINGULARITY_GUARD = 1e-14

# Tolerance for closed-form identities (spike vs one-site barrier, unitarity, ...).
IDENTITY_TOL = 1e-12

# Tolerance for matrix-power vs closed-form amplitude agreement.
MATRIX_CLOSED_FORM_TOL = 1e-10

# Exponent above which barrier powers are replaced by their infinite-length limit.
OVERFLOW_EXPONENT = 300.0

# Default broadening for the density of states, in units of v_F / a.
DEFAULT_DOS_ETA = 1e-3

# |z| threshold below which ln(1 - z) is evaluated through log1p.
LOG1P_THRESHOLD = 0.5
