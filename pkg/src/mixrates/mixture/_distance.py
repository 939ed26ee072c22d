"""Evaluation grids and the distances measured on them."""

__docformat__ = "restructuredtext"
__all__ = [
    "EvalGrid",
    "bump_sup_difference",
    "empirical_l2",
    "gaussian_perturbation_bound",
    "grid_sup",
]

import math
from dataclasses import dataclass, field

import numpy as np

from mixrates.custom_types import Evaluable, FloatArray

_RATIO_SLACK = 1e-12


@dataclass(frozen=True, slots=True, eq=False)
class EvalGrid:
    """
    Sorted evaluation points with optional quadrature weights.

    Grid sups are lower bounds of the true sup; the grid is recorded next to every value.

    :ivar points: Strictly increasing points.
    :ivar weights: Optional quadrature weights, one per point.
    """

    points: FloatArray = field(repr=False)
    weights: FloatArray | None = field(default=None, repr=False)

    def __post_init__(self):
        """Validate ordering and weight length."""
        points = np.asarray(self.points, dtype=float).ravel()
        if points.size == 0:
            raise ValueError("Evaluation grid must contain at least one point")
        if points.size > 1 and not np.all(np.diff(points) > 0.0):
            raise ValueError("Evaluation grid points must be strictly increasing")
        object.__setattr__(self, "points", points)
        if self.weights is not None:
            weights = np.asarray(self.weights, dtype=float).ravel()
            if weights.size != points.size:
                raise ValueError(
                    f"Expected {points.size} quadrature weights, got {weights.size}"
                )
            object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, lower: float, upper: float, spacing: float) -> "EvalGrid":
        """
        Uniform grid on ``[lower, upper]`` with trapezoid weights.

        :param lower: Left end.

        :param upper: Right end.

        :param spacing: Largest admissible spacing.

        :return: The grid.
        :raises ValueError: If ``upper <= lower`` or ``spacing <= 0``.

        """
        if upper <= lower or spacing <= 0.0:
            raise ValueError(
                f"Need lower < upper and spacing > 0, got [{lower}, {upper}] and {spacing}"
            )
        count = math.ceil((upper - lower) / spacing) + 1
        points = np.linspace(lower, upper, count)
        weights = np.full(count, (upper - lower) / (count - 1))
        weights[[0, -1]] *= 0.5
        return cls(points, weights)

    @property
    def spacing(self) -> float:
        """
        Get the largest gap between neighbouring points.

        :return: Maximum spacing, 0 for a single point.
        """
        return float(np.max(np.diff(self.points))) if self.points.size > 1 else 0.0

    def __len__(self) -> int:
        """Return the number of points."""
        return int(self.points.size)


def empirical_l2(f: Evaluable, g: Evaluable, xs: FloatArray) -> float:
    """
    Empirical distance ``d_n(f, g) = (n^-1 sum_i |f(x_i) - g(x_i)|^2)^(1/2)``.

    :param f: First function.

    :param g: Second function.

    :param xs: Covariates.

    :return: The distance.
    :raises ValueError: If ``xs`` is empty.

    """
    xs = np.asarray(xs, dtype=float).ravel()
    if xs.size == 0:
        raise ValueError("Empirical distance needs at least one covariate")
    diff = np.asarray(f(xs), dtype=float) - np.asarray(g(xs), dtype=float)
    return float(np.sqrt(np.mean(np.broadcast_to(diff, xs.shape) ** 2)))


def gaussian_perturbation_bound(mu1: float, mu2: float, sigma1: float, sigma2: float) -> float:
    """
    Bound ``sup_x |phi((x - mu1) / sigma1) - phi((x - mu2) / sigma2)|``.

    The bound is ``(4 |sigma1 - sigma2| + |mu1 - mu2|) / max(sigma1, sigma2)``.

    :param mu1: First centre.

    :param mu2: Second centre.

    :param sigma1: First scale.

    :param sigma2: Second scale.

    :return: The bound.
    :raises ValueError: If a scale is not positive or the scale ratio leaves ``[1/2, 2]``.

    """
    if sigma1 <= 0.0 or sigma2 <= 0.0:
        raise ValueError(f"Scales must be positive, got {sigma1} and {sigma2}")
    ratio = sigma1 / sigma2
    if not 0.5 - _RATIO_SLACK <= ratio <= 2.0 + _RATIO_SLACK:
        raise ValueError(f"Scale ratio must lie in [1/2, 2], got {ratio}")
    top = max(sigma1, sigma2)
    return (4.0 * abs(sigma1 - sigma2) + abs(mu1 - mu2)) / top


def bump_sup_difference(
    mu1: float, mu2: float, sigma1: float, sigma2: float, points_per_scale: int = 64
) -> float:
    """
    Grid-measured ``sup_x |phi((x - mu1) / sigma1) - phi((x - mu2) / sigma2)|``.

    The grid spans both bumps with a margin of 40 scales and spacing
    ``min(sigma1, sigma2) / points_per_scale``.

    :param mu1: First centre.

    :param mu2: Second centre.

    :param sigma1: First scale.

    :param sigma2: Second scale.

    :param points_per_scale: Resolution.

    :return: The grid sup.
    """
    reach = 40.0 * max(sigma1, sigma2)
    grid = EvalGrid.uniform(
        min(mu1, mu2) - reach, max(mu1, mu2) + reach, min(sigma1, sigma2) / points_per_scale
    )
    t1 = (grid.points - mu1) / sigma1
    t2 = (grid.points - mu2) / sigma2
    return float(np.max(np.abs(np.exp(-0.5 * t1 * t1) - np.exp(-0.5 * t2 * t2))))


def grid_sup(
    f: Evaluable, g: Evaluable, grid: EvalGrid, radius: float | None = None
) -> float:
    """
    Grid sup of ``|f - g|``, optionally restricted to ``|x| <= radius``.

    :param f: First function.

    :param g: Second function.

    :param grid: Evaluation grid.

    :param radius: Optional restriction.

    :return: The grid sup, 0 when no point qualifies.
    """
    points = grid.points if radius is None else grid.points[np.abs(grid.points) <= radius]
    if points.size == 0:
        return 0.0
    return float(np.max(np.abs(np.asarray(f(points)) - np.asarray(g(points)))))
