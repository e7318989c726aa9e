from __future__ import annotations

"""
Global Domain Constants.

Holds versioning, numerical tolerances, capacity limits and the published
reference values the reproduction targets are checked against.
"""

import math
from typing import Dict, Final, Tuple

# -----------------------------------------------------------------------------
# VERSIONING
# -----------------------------------------------------------------------------
__version__: Final[str] = "1.0.0"
APP_NAME: Final[str] = "holomera"

# -----------------------------------------------------------------------------
# NUMERICAL TOLERANCES
# -----------------------------------------------------------------------------
EXACT_TOL: Final[float] = 1e-12
HERMITIAN_TOL: Final[float] = 1e-10
IMAG_RESIDUE_TOL: Final[float] = 1e-10
BIORTHONORMAL_TOL: Final[float] = 1e-8
DELTA_GROUP_TOL: Final[float] = 0.1
EIGEN_CLUSTER_TOL: Final[float] = 1e-8
NULL_EIGENVALUE_CUTOFF: Final[float] = 1e-10
# Split Jordan blocks of the null space: tiny and nearly defective.
SPLIT_NULL_MAGNITUDE: Final[float] = 1e-4
SPLIT_NULL_CONDITION: Final[float] = 1e6
CONDITION_LIMIT: Final[float] = 1e10

# -----------------------------------------------------------------------------
# CAPACITY LIMITS
# -----------------------------------------------------------------------------
CORE_SITES: Final[int] = 4
MIN_DEPTH: Final[int] = 3
MAX_DEPTH: Final[int] = 12
MAX_DENSE_SITES: Final[int] = 16
MAX_ITERATIVE_SITES: Final[int] = 20
MIN_SUPEROPERATOR_K: Final[int] = 3
MAX_SUPEROPERATOR_K: Final[int] = 6
MIN_STRESS_K: Final[int] = 5
MAX_BOUNDARY_OPERATOR_SITES: Final[int] = 6

# -----------------------------------------------------------------------------
# PHYSICAL CONVENTIONS
# -----------------------------------------------------------------------------
VELOCITY: Final[float] = 1.0
LOG2: Final[float] = math.log(2.0)
DEFAULT_ELL_ADS: Final[float] = 1.0 / LOG2

# First window site of the hologron conjugator in the coefficient protocol
CONJUGATOR_OFFSET: Final[int] = 0

# Overlap density |<MERA|ED>|^{e/N}: no exponent reproduces both reference sizes; 1 is closest
PINNED_OVERLAP_EXPONENT: Final[int] = 1
OVERLAP_DENSITY_TOL: Final[float] = 0.005

# -----------------------------------------------------------------------------
# FIT WINDOWS
# -----------------------------------------------------------------------------
SINGLE_PARTICLE_RHO_MIN: Final[int] = 2
MIN_SINGLE_PARTICLE_POINTS: Final[int] = 4
# Outer layers excluded from the single-particle fit (rho <= D - 1 - margin)
BOUNDARY_LAYER_MARGIN: Final[int] = 4
TAIL_MIN_SEPARATION: Final[int] = 7

# (name, multiplicity, exponent Delta - 1) of each term of the four-parameter W fit model
W_MODEL_TERMS: Final[Tuple[Tuple[str, float, float], ...]] = (
    ("A", 1.0, 0.0),
    ("B", 4.0, 1.0),
    ("C", 2.0, 1.5),
    ("D", 6.0, 2.0),
)

# -----------------------------------------------------------------------------
# PUBLISHED REFERENCE VALUES
# -----------------------------------------------------------------------------
REFERENCE_ED_ENERGY_DENSITY: Final[float] = -4.0 / math.pi
REFERENCE_MERA_ENERGY_DENSITY: Final[float] = -1.24222
REFERENCE_OVERLAP_DENSITY: Final[Dict[int, float]] = {8: 0.998, 16: 0.952}
REFERENCE_INV_ELL_ADS: Final[float] = 0.69
REFERENCE_MASS_ENERGY: Final[float] = 2.5
REFERENCE_TAIL: Final[Dict[str, float]] = {"C1": 0.080, "C2": 13.6}
REFERENCE_W: Final[Dict[str, float]] = {"A": 0.08, "B": -3.4, "C": 25.0, "D": -7.9}
REFERENCE_COEFFICIENTS: Final[Dict[str, float]] = {
    "C_T": -1.151,
    "C_deps": -0.0375,
    "C_2": -2.377,
    "mass_energy_half": 0.92,
}
REFERENCE_CONTROL_FIDELITY: Final[Dict[float, float]] = {
    7e-3: 0.9924,
    6e-3: 0.9944,
    5e-3: 0.9961,
}
REFERENCE_DEPHASING_FIDELITY: Final[Dict[float, float]] = {
    0.005: 0.9920,
    0.0037: 0.9940,
    0.0025: 0.9960,
}

# -----------------------------------------------------------------------------
# ARTIFACTS
# -----------------------------------------------------------------------------
DEFAULT_OUTPUT_PREFIX: Final[str] = "holomera"
CACHE_ENV_VAR: Final[str] = "HOLOMERA_CACHE"
CSV_FLOAT_FORMAT: Final[str] = "%.17g"
