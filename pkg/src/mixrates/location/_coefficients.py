"""Smoothing, lattice coefficients, reconstruction and truncation at one scale."""

__docformat__ = "restructuredtext"
__all__ = [
    "LatticeCoefficients",
    "coefficients",
    "covariate_index_set",
    "reconstruct",
    "smooth",
    "truncate_location",
]

import math
from dataclasses import dataclass, field

import numpy as np

from mixrates._constants import DEFAULT_MIN_RADIUS, DEFAULT_QUADRATURE_TOL
from mixrates._errors import QuadratureError, WindowError
from mixrates.custom_types import Evaluable, FloatArray, IntArray
from mixrates.kernels import (
    DualKernelTable,
    GridFunction,
    SpectralCutoff,
    SpectralGrid,
    apply_multiplier,
    coefficient_multiplier,
    smoothing_multiplier,
)
from mixrates.location._plan import LocationPlan
from mixrates.mixture import FiniteGaussMixture


def _cutoff_of(kernel: DualKernelTable | SpectralCutoff) -> SpectralCutoff:
    return kernel.cutoff if isinstance(kernel, DualKernelTable) else kernel


@dataclass(frozen=True, slots=True, eq=False)
class LatticeCoefficients:
    """
    Coefficients ``u_k`` of the atoms ``phi((x - h sigma k) / sigma)``.

    :ivar h: Lattice bandwidth.
    :ivar sigma: Scale.
    :ivar k: Lattice indices, increasing.
    :ivar values: Coefficients, one per index.
    """

    h: float
    sigma: float
    k: IntArray = field(repr=False)
    values: FloatArray = field(repr=False)

    def __post_init__(self):
        """Coerce and validate."""
        object.__setattr__(self, "k", np.asarray(self.k, dtype=np.int64).ravel())
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float).ravel())
        if self.k.size != self.values.size:
            raise ValueError(
                f"Got {self.k.size} lattice indices for {self.values.size} coefficients"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("Lattice coefficients must be finite")

    @property
    def locations(self) -> FloatArray:
        """
        Get the lattice sites ``mu_k = h sigma k``.

        :return: Sites, one per index.
        """
        return self.h * self.sigma * self.k

    @property
    def l1(self) -> float:
        """
        Get ``sum_k |u_k|``.

        :return: Total absolute coefficient mass.
        """
        return float(np.sum(np.abs(self.values)))

    @property
    def max_abs(self) -> float:
        """
        Get ``max_k |u_k|``.

        :return: Largest magnitude, 0 when empty.
        """
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def __len__(self) -> int:
        """Return the number of coefficients."""
        return int(self.k.size)

    def select(self, mask: FloatArray) -> "LatticeCoefficients":
        """
        Keep the coefficients where ``mask`` holds.

        :param mask: Boolean mask over the indices.

        :return: The restricted coefficients.
        """
        return LatticeCoefficients(self.h, self.sigma, self.k[mask], self.values[mask])


def smooth(
    f0: Evaluable | GridFunction,
    sigma: float,
    kernel: DualKernelTable | SpectralCutoff,
    grid: SpectralGrid | None = None,
    tol: float = DEFAULT_QUADRATURE_TOL,
) -> GridFunction:
    """
    Convolve ``f0`` with ``chi_sigma``, the cutoff rescaled to spectrum ``chi_hat(2 sigma xi)``.

    The convolution is an exact Fourier multiplier on a periodic grid, so the only
    numerical error is the grid resolution of ``f0`` itself.

    :param f0: Target, either callable or already tabulated.

    :param sigma: Scale in ``(0, 1]``.

    :param kernel: Kernel table or bare cutoff.

    :param grid: Grid for a callable target; defaults to radius
        ``DEFAULT_MIN_RADIUS`` with spacing ``sigma / 16``.

    :param tol: Largest admissible cutoff value at the grid Nyquist frequency.

    :return: The smoothed function on the grid.
    :raises ValueError: If ``sigma`` is outside ``(0, 1]``.
    :raises QuadratureError: If the grid is too coarse to carry the smoothed spectrum.

    """
    if not 0.0 < sigma <= 1.0:
        raise ValueError(f"sigma must lie in (0, 1], got {sigma}")
    cutoff = _cutoff_of(kernel)
    if isinstance(f0, GridFunction):
        sampled = f0
    else:
        if grid is None:
            grid = SpectralGrid.covering(DEFAULT_MIN_RADIUS, sigma / 16.0)
        sampled = GridFunction.sample(f0, grid)
    nyquist = math.pi / sampled.grid.spacing
    achieved = float(cutoff(2.0 * sigma * nyquist))
    if achieved > tol:
        raise QuadratureError(achieved, tol)
    return apply_multiplier(sampled, smoothing_multiplier(cutoff, sigma))


def coefficients(
    f_sigma: GridFunction,
    h: float,
    sigma: float,
    kernel: DualKernelTable | SpectralCutoff,
    k_range: range | None = None,
    boundary_threshold: float | None = None,
) -> LatticeCoefficients:
    """
    Lattice coefficients ``u_k = (h / sigma) int eta((y - h sigma k) / sigma) f_sigma(y) dy``.

    The coefficient field is computed once with the multiplier ``h eta_hat(sigma xi)``
    and read off at the lattice sites, which are grid nodes.

    :param f_sigma: Smoothed target on a grid whose spacing divides ``h sigma``.

    :param h: Lattice bandwidth.

    :param sigma: Scale.

    :param kernel: Kernel table or bare cutoff.

    :param k_range: Indices to tabulate; defaults to every site inside the grid.

    :param boundary_threshold: When given, the coefficients at both ends of the window
        must not exceed it.

    :return: The coefficients.
    :raises ValueError: If ``h`` or ``sigma`` is not positive, the lattice does not sit
        on the grid, or the window leaves the grid.
    :raises WindowError: If a boundary coefficient exceeds ``boundary_threshold``.

    """
    if h <= 0.0 or sigma <= 0.0:
        raise ValueError(f"h and sigma must be positive, got {h} and {sigma}")
    grid = f_sigma.grid
    stride = grid.stride(h * sigma)
    reach = (grid.center - 1) // stride
    if k_range is None:
        k_range = range(-reach, reach + 1)
    k = np.arange(k_range.start, k_range.stop, k_range.step, dtype=np.int64)
    if k.size and (k.min() < -reach or k.max() > reach):
        raise ValueError(f"Lattice window {k_range} leaves the grid, which reaches |k| <= {reach}")
    field_values = apply_multiplier(f_sigma, coefficient_multiplier(_cutoff_of(kernel), h, sigma))
    values = field_values.values[grid.center + stride * k]
    if boundary_threshold is not None and k.size:
        for index in (0, -1):
            if abs(values[index]) > boundary_threshold:
                raise WindowError(int(k[index]), float(values[index]), boundary_threshold)
    return LatticeCoefficients(h, sigma, k, values)


def reconstruct(coeffs: LatticeCoefficients) -> FiniteGaussMixture:
    """
    Mixture ``sum_k u_k phi((x - h sigma k) / sigma)``, one atom per coefficient.

    :param coeffs: Coefficients.

    :return: The mixture; empty coefficients give the zero function.
    """
    return FiniteGaussMixture(
        coeffs.values.copy(), coeffs.locations, np.full(len(coeffs), coeffs.sigma)
    )


def truncate_location(
    coeffs: LatticeCoefficients, plan: LocationPlan
) -> tuple[IntArray, FiniteGaussMixture]:
    """
    Keep ``k`` with ``|u_k| > sigma^beta`` and ``|mu_k| <= mu_threshold``.

    :param coeffs: Coefficients on a window covering the location threshold.

    :param plan: Plan of the cell.

    :return: The index set and the mixture of its atoms.
    :raises ValueError: If the coefficients were computed at another lattice.

    """
    if not math.isclose(coeffs.sigma, plan.sigma) or not math.isclose(coeffs.h, plan.h):
        raise ValueError(
            f"Coefficients at (h={coeffs.h}, sigma={coeffs.sigma}) do not match the plan "
            f"(h={plan.h}, sigma={plan.sigma})"
        )
    mask = (np.abs(coeffs.values) > plan.threshold) & (
        np.abs(coeffs.locations) <= plan.mu_threshold
    )
    kept = coeffs.select(mask)
    return kept.k, reconstruct(kept)


def covariate_index_set(
    coeffs: LatticeCoefficients, plan: LocationPlan, covariates: FloatArray
) -> IntArray:
    """
    Keep ``k`` with ``|u_k| > sigma^beta`` and ``mu_k`` within ``tail_margin`` of a covariate.

    This is the index set of the covariate-dependent base measure, whose sites
    concentrate near the observed design points.

    :param coeffs: Coefficients.

    :param plan: Plan of the cell.

    :param covariates: Observed design points.

    :return: Retained lattice indices.
    :raises ValueError: If there are no covariates.

    """
    xs = np.sort(np.asarray(covariates, dtype=float).ravel())
    if xs.size == 0:
        raise ValueError("covariate_index_set needs at least one covariate")
    mu = coeffs.locations
    right = np.clip(np.searchsorted(xs, mu), 0, xs.size - 1)
    left = np.clip(right - 1, 0, xs.size - 1)
    nearest = np.minimum(np.abs(mu - xs[left]), np.abs(mu - xs[right]))
    mask = (np.abs(coeffs.values) > plan.threshold) & (nearest <= plan.tail_margin)
    return coeffs.k[mask]
