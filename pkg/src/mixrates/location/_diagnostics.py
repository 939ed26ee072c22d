"""Scaling laws, prior-mass geometry and constants of the location scheme."""

__docformat__ = "restructuredtext"
__all__ = [
    "LocationCells",
    "alias_error",
    "alias_slope",
    "coefficient_constants",
    "diagnostic_radius",
    "lambda_bound",
    "location_cells",
    "reconstruction_error",
    "truncation_scale",
]

import math
from dataclasses import dataclass, field

import numpy as np

from mixrates._constants import DEFAULT_GRID_OVERSAMPLE
from mixrates.custom_types import Evaluable, FloatArray, IntArray
from mixrates.kernels import DualKernelTable, GridFunction, SpectralCutoff, SpectralGrid
from mixrates.location._coefficients import coefficients, reconstruct, smooth
from mixrates.location._plan import LocationPlan
from mixrates.mixture import ApproxReport, mixture_on_grid


def alias_slope(sigma: float, width: float) -> float:
    """
    Predicted slope of ``log sup|K f_sigma - f_sigma|`` against ``1 / h^2``.

    The first alias of a Gaussian target of width ``width`` peaks at
    ``-2 pi^2 (1 - sigma^2 / width^2) / h^2``.

    :param sigma: Scale.

    :param width: Standard deviation of the Gaussian target, larger than ``sigma``.

    :return: The slope.
    :raises ValueError: If ``width <= sigma``.

    """
    if width <= sigma:
        raise ValueError(f"width must exceed sigma, got {width} <= {sigma}")
    return -2.0 * math.pi**2 * (1.0 - (sigma / width) ** 2)


def reconstruction_error(
    f_sigma: GridFunction,
    h: float,
    sigma: float,
    kernel: DualKernelTable | SpectralCutoff,
    interior: float = 0.5,
) -> float:
    """
    Sup of ``|K_{h,sigma} f_sigma - f_sigma|`` over the inner part of the grid.

    Every lattice site of the grid is kept, so only the aliasing term remains.

    :param f_sigma: Band-limited input on a grid whose spacing divides ``h sigma``.

    :param h: Lattice bandwidth.

    :param sigma: Scale.

    :param kernel: Kernel table or bare cutoff.

    :param interior: Fraction of the grid radius where the error is measured.

    :return: The grid sup.
    """
    full = reconstruct(coefficients(f_sigma, h, sigma, kernel))
    values = mixture_on_grid(full, f_sigma.grid)
    inside = np.abs(f_sigma.grid.points) <= interior * f_sigma.grid.radius
    return float(np.max(np.abs(values - f_sigma.values)[inside]))


def alias_error(
    f0: Evaluable,
    h: float,
    sigma: float,
    kernel: DualKernelTable | SpectralCutoff,
    radius: float = 64.0,
    oversample: int = DEFAULT_GRID_OVERSAMPLE,
) -> float:
    """
    Smooth ``f0`` at scale ``sigma`` and return its full-window reconstruction error.

    :param f0: Target, negligible beyond ``radius``.

    :param h: Lattice bandwidth.

    :param sigma: Scale.

    :param kernel: Kernel table or bare cutoff.

    :param radius: Grid half width.

    :param oversample: Grid nodes per lattice step.

    :return: The grid sup of the aliasing error.
    """
    grid = SpectralGrid.for_lattice(h * sigma, radius, max(oversample, math.ceil(oversample * h)))
    return reconstruction_error(smooth(f0, sigma, kernel, grid), h, sigma, kernel)


def lambda_bound(plan: LocationPlan) -> float:
    """
    Shape of the index-set size bound, ``min(sigma^-(beta+1), sigma^-(2 beta/p + 1) / h)``.

    :param plan: Cell parameters.

    :return: The bound without its constant.
    """
    sigma, beta = plan.sigma, plan.beta
    return min(sigma ** -(beta + 1.0), sigma ** -(2.0 * beta / plan.p + 1.0) / plan.h)


def truncation_scale(plan: LocationPlan) -> float:
    """
    Scale ``log(1 / sigma) sigma^beta / h`` of the core truncation discrepancy.

    :param plan: Cell parameters.

    :return: The scale.
    """
    return -math.log(plan.sigma) * plan.threshold / plan.h


def diagnostic_radius(lambda_size: int, sigma: float, beta: float, hybrid: bool = False) -> float:
    """
    Radius beyond which atoms are negligible in the error decomposition.

    Location: ``sqrt(2 log|Lambda| + 2 (beta + 1) log(1 / sigma))``.
    Hybrid: ``sqrt(2 log|Lambda| + 2 beta log(1 / sigma_J))``.

    :param lambda_size: Size of the computed index set; 0 counts as 1.

    :param sigma: Scale (``sigma_J`` for the hybrid scheme).

    :param beta: Hölder order.

    :param hybrid: Use the multi-scale variant.

    :return: The radius, in units of the scale.
    """
    shift = beta if hybrid else beta + 1.0
    return math.sqrt(2.0 * math.log(max(lambda_size, 1)) - 2.0 * shift * math.log(sigma))


@dataclass(frozen=True, slots=True, eq=False)
class LocationCells:
    """
    Neighbourhoods of the retained atoms.

    :ivar scale_window: ``(sigma, sigma (1 + sigma^beta))``.
    :ivar site_radius: Half width ``sigma^(beta + 1)`` of every site cell.
    :ivar sites: Retained lattice sites, increasing.
    """

    scale_window: tuple[float, float]
    site_radius: float
    sites: FloatArray = field(repr=False)

    @property
    def intervals(self) -> FloatArray:
        """
        Get the site cells ``[mu_k - r, mu_k + r]``.

        :return: Array of shape ``(n, 2)``.
        """
        return np.column_stack([self.sites - self.site_radius, self.sites + self.site_radius])

    @property
    def disjoint(self) -> bool:
        """
        Check that no two site cells overlap.

        :return: True when consecutive cells are separated.
        """
        cells = self.intervals
        return bool(np.all(cells[1:, 0] > cells[:-1, 1]))


def location_cells(plan: LocationPlan, retained: IntArray) -> LocationCells:
    """
    Scale window and site cells around the retained atoms.

    :param plan: Cell parameters.

    :param retained: Index set.

    :return: The cells.
    """
    sigma = plan.sigma
    sites = np.sort(plan.lattice_step * np.asarray(retained, dtype=float))
    return LocationCells(
        scale_window=(sigma, sigma * (1.0 + plan.threshold)),
        site_radius=sigma * plan.threshold,
        sites=sites,
    )


def coefficient_constants(
    report: ApproxReport, sigma: float, f_l1: float, f_sup: float
) -> tuple[float, float]:
    """
    Empirical constants of the coefficient bounds.

    :param report: Report of one cell.

    :param sigma: Scale of the cell.

    :param f_l1: ``||f0||_1``.

    :param f_sup: ``||f0||_inf``.

    :return: ``(sigma sum|u_k| / ||f0||_1, max|u_k| / ||f0||_inf)``.
    :raises ValueError: If a norm is not positive.

    """
    if f_l1 <= 0.0 or f_sup <= 0.0:
        raise ValueError(f"Norms must be positive, got {f_l1} and {f_sup}")
    return report.coeff_l1 * sigma / f_l1, report.coeff_max / f_sup
