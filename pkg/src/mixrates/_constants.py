"""Constants for the mixrates package."""

__docformat__ = "restructuredtext"
__all__ = [
    "CUTOFF_HALF_WIDTH",
    "CYCLE_ERROR_MSG",
    "DEFAULT_GRID_OVERSAMPLE",
    "DEFAULT_H_MAX",
    "DEFAULT_KERNEL_HALF_RANGE",
    "DEFAULT_KERNEL_NODES",
    "DEFAULT_MIN_RADIUS",
    "DEFAULT_MOLLIFIER_WIDTH",
    "DEFAULT_QUADRATURE_TOL",
    "DEFAULT_RADIUS_CAP",
    "GUARD_FACTOR",
    "LOG_CHECK",
    "LOG_CLEAR",
    "LOG_COEFF",
    "LOG_INIT",
    "LOG_RECONSTRUCT",
    "LOG_RESIDUAL",
    "LOG_SAMPLE",
    "LOG_SMOOTH",
    "LOG_SWEEP",
    "LOG_TRUNCATE",
    "MIN_COMPLEMENT_TRIALS",
    "SCHEMA_VERSION",
    "SEPARATOR_LINE",
    "SPECTRAL_SUPPORT",
    "UNDERFLOW_RADIUS",
]

# ---------------------------------------------------------------------------
# Error messages
# ---------------------------------------------------------------------------

CYCLE_ERROR_MSG = "Pipeline has a cycle, cannot perform topological sort"

# ---------------------------------------------------------------------------
# Log prefixes for verbose stage output
# ---------------------------------------------------------------------------

LOG_INIT = "[INIT]"
LOG_SMOOTH = "[SMOOTH]"
LOG_COEFF = "[COEFF]"
LOG_TRUNCATE = "[TRUNCATE]"
LOG_RECONSTRUCT = "[RECONSTRUCT]"
LOG_RESIDUAL = "[RESIDUAL]"
LOG_SAMPLE = "[SAMPLE]"
LOG_CHECK = "[CHECK]"
LOG_CLEAR = "[CLEAR]"
LOG_SWEEP = "[SWEEP]"

# ---------------------------------------------------------------------------
# Spectral cutoff and kernel tables
# ---------------------------------------------------------------------------

CUTOFF_HALF_WIDTH = 1.5
"""Half width of the indicator that is mollified into the cutoff spectrum."""
SPECTRAL_SUPPORT = 2.0
DEFAULT_MOLLIFIER_WIDTH = 0.5
DEFAULT_KERNEL_HALF_RANGE = 512.0
DEFAULT_KERNEL_NODES = 65537
DEFAULT_QUADRATURE_TOL = 1e-10

# ---------------------------------------------------------------------------
# Approximation schemes
# ---------------------------------------------------------------------------

UNDERFLOW_RADIUS = 38.0
"""Beyond this many scales a Gaussian bump is below double-precision underflow."""
DEFAULT_H_MAX = 1.0
DEFAULT_GRID_OVERSAMPLE = 8
"""Number of grid nodes per lattice step; keeps the grid spacing at most sigma / 8."""
DEFAULT_RADIUS_CAP = 512.0
DEFAULT_MIN_RADIUS = 8.0
"""Smallest half width of a scheme grid, whatever the coefficient window."""
GUARD_FACTOR = 6.0

# ---------------------------------------------------------------------------
# Sieves
# ---------------------------------------------------------------------------

MIN_COMPLEMENT_TRIALS = 10_000
"""Fewest prior draws behind a Monte Carlo estimate of the sieve complement mass."""

# ---------------------------------------------------------------------------
# Display formatting and artifacts
# ---------------------------------------------------------------------------

SEPARATOR_LINE = "=" * 60
SCHEMA_VERSION = "1.0"
