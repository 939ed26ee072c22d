"""
Gaussian kernel pair for lattice expansions.

The smooth cutoff ``chi`` has a spectrum equal to one on ``[-1, 1]`` and zero outside
``[-2, 2]``; the dual kernel ``eta`` has spectrum ``chi_hat / phi_hat``. Together with the
Gaussian bump ``phi`` they make lattice translates of ``phi`` reproduce band-limited
functions. Space-domain tables come from numerical Fourier inversion; the schemes apply
the same spectra as exact multipliers on periodic grids.
"""

__docformat__ = "restructuredtext"

from mixrates.kernels._cutoff import (
    SpectralCutoff,
    build_cutoff,
    bump_cdf,
    cutoff_profile,
    phi,
    phi_hat,
    spectral_moments,
)
from mixrates.kernels._spectral import (
    GridFunction,
    SpectralGrid,
    apply_multiplier,
    coefficient_multiplier,
    smoothing_multiplier,
)
from mixrates.kernels._table import (
    DualKernelTable,
    decay_bounds,
    default_x_grid,
    eta_norm,
    eta_row_sum,
    invert_to_space,
    row_sum_constant,
    tabulated_moments,
)

__all__ = [
    "DualKernelTable",
    "GridFunction",
    "SpectralCutoff",
    "SpectralGrid",
    "apply_multiplier",
    "build_cutoff",
    "bump_cdf",
    "coefficient_multiplier",
    "cutoff_profile",
    "decay_bounds",
    "default_x_grid",
    "eta_norm",
    "eta_row_sum",
    "invert_to_space",
    "phi",
    "phi_hat",
    "row_sum_constant",
    "smoothing_multiplier",
    "spectral_moments",
    "tabulated_moments",
]
