"""Multi-scale plan: dyadic scales, shared bandwidth and annular windows."""

__docformat__ = "restructuredtext"
__all__ = ["HybridPlan"]

import math
from dataclasses import dataclass

from mixrates._constants import (
    DEFAULT_GRID_OVERSAMPLE,
    DEFAULT_H_MAX,
    DEFAULT_MIN_RADIUS,
    DEFAULT_RADIUS_CAP,
    GUARD_FACTOR,
)
from mixrates.kernels import SpectralGrid


@dataclass(frozen=True, slots=True)
class HybridPlan:
    """
    Parameters of one hybrid cell.

    Level ``j`` uses the scale ``sigma_j = 2^-j`` and the lattice ``h sigma_j Z``; its atoms
    are kept inside ``|mu| <= zeta_j + tail_margin`` with ``zeta_j = 2^((J - j) 2 beta / p)``.

    :ivar J: Finest level.
    :ivar beta: Hölder order.
    :ivar p: Design moment index; ``math.inf`` allowed.
    :ivar h: Bandwidth shared by all levels.
    :ivar radius_cap: Largest grid half width.
    :ivar oversample: Smallest number of grid nodes per finest lattice step.
    """

    J: int
    beta: float
    p: float
    h: float
    radius_cap: float = DEFAULT_RADIUS_CAP
    oversample: int = DEFAULT_GRID_OVERSAMPLE

    def __post_init__(self):
        """Validate the plan."""
        if self.J < 1:
            raise ValueError(f"J must be at least 1, got {self.J}")
        if self.beta <= 0.0:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if self.p <= 0.0:
            raise ValueError(f"p must be positive, got {self.p}")
        if not 0.0 < self.h < math.inf:
            raise ValueError(f"h must be positive and finite, got {self.h}")
        if self.radius_cap <= 0.0:
            raise ValueError(f"radius_cap must be positive, got {self.radius_cap}")
        if self.oversample < 1:
            raise ValueError(f"oversample must be at least 1, got {self.oversample}")

    @staticmethod
    def h_formula(J: int, beta: float) -> float:
        """
        Asymptotic bandwidth ``2 pi / (sqrt(beta log 2) sqrt(J))``.

        :param J: Finest level.

        :param beta: Hölder order.

        :return: The bandwidth.
        """
        return 2.0 * math.pi / (math.sqrt(beta * math.log(2.0)) * math.sqrt(J))

    @classmethod
    def from_levels(
        cls,
        J: int,
        beta: float,
        p: float,
        h: float | None = None,
        h_max: float = DEFAULT_H_MAX,
        radius_cap: float = DEFAULT_RADIUS_CAP,
        oversample: int = DEFAULT_GRID_OVERSAMPLE,
    ) -> "HybridPlan":
        """
        Build a plan, defaulting the bandwidth to ``min(h_formula, h_max)``.

        :param J: Finest level.

        :param beta: Hölder order.

        :param p: Design moment index.

        :param h: Explicit bandwidth; overrides the formula.

        :param h_max: Cap on the formula bandwidth.

        :param radius_cap: Largest grid half width.

        :param oversample: Grid nodes per finest lattice step.

        :return: The plan.
        """
        if h is None:
            h = min(cls.h_formula(J, beta), h_max)
        return cls(J, beta, p, h, radius_cap, oversample)

    @property
    def levels(self) -> range:
        """
        Get the level indices.

        :return: ``range(J + 1)``.
        """
        return range(self.J + 1)

    def sigma(self, j: int) -> float:
        """
        Scale of level ``j``.

        :param j: Level.

        :return: ``2^-j``.
        """
        return 2.0**-j

    def zeta(self, j: int) -> float:
        """
        Window radius of level ``j``.

        :param j: Level.

        :return: ``2^((J - j) 2 beta / p)``; 1 for every level when ``p`` is infinite.
        """
        return 2.0 ** ((self.J - j) * 2.0 * self.beta / self.p)

    @property
    def sigmas(self) -> tuple[float, ...]:
        """
        Get all scales.

        :return: ``(sigma_0, ..., sigma_J)``.
        """
        return tuple(self.sigma(j) for j in self.levels)

    @property
    def zetas(self) -> tuple[float, ...]:
        """
        Get all window radii.

        :return: ``(zeta_0, ..., zeta_J)``, nonincreasing with ``zeta_J = 1``.
        """
        return tuple(self.zeta(j) for j in self.levels)

    @property
    def threshold(self) -> float:
        """
        Get the magnitude threshold ``sigma_J^beta``.

        :return: Coefficients must exceed this to be retained.
        """
        return self.sigma(self.J) ** self.beta

    @property
    def tail_margin(self) -> float:
        """
        Get ``sqrt(2 (beta + 1) log(1 / sigma_J))``.

        :return: The margin added to every window radius.
        """
        return math.sqrt(2.0 * (self.beta + 1.0) * self.J * math.log(2.0))

    def mu_threshold(self, j: int) -> float:
        """
        Location threshold of level ``j``.

        :param j: Level.

        :return: ``zeta_j + tail_margin``.
        """
        return self.zeta(j) + self.tail_margin

    @property
    def guard(self) -> float:
        """
        Get the guard band beyond the widest location threshold.

        :return: ``GUARD_FACTOR * tail_margin``.
        """
        return GUARD_FACTOR * self.tail_margin

    @property
    def capped(self) -> bool:
        """
        Check whether the radius cap cuts the level-0 window short.

        :return: True when ``mu_threshold(0) + guard > radius_cap``.
        """
        return self.mu_threshold(0) + self.guard > self.radius_cap

    @property
    def grid_radius(self) -> float:
        """
        Get the half width of the shared grid.

        :return: ``mu_threshold(0) + guard`` raised to the minimum radius and clipped to the cap.
        """
        return min(max(self.mu_threshold(0) + self.guard, DEFAULT_MIN_RADIUS), self.radius_cap)

    def lattice_step(self, j: int) -> float:
        """
        Lattice step of level ``j``.

        :param j: Level.

        :return: ``h sigma_j``.
        """
        return self.h * self.sigma(j)

    def k_range(self, j: int) -> range:
        """
        Lattice indices tabulated at level ``j``.

        :param j: Level.

        :return: ``range(-K, K + 1)`` with ``K = floor(grid_radius / (h sigma_j))``.
        """
        reach = math.floor(self.grid_radius / self.lattice_step(j))
        return range(-reach, reach + 1)

    def spectral_grid(self, bandwidth: float | None = None) -> SpectralGrid:
        """
        Grid carrying every lattice site of every level as a node.

        :param bandwidth: Largest angular frequency of the target, when known.

        :return: The grid; its spacing is at most ``sigma_J / oversample``.
        """
        step = self.lattice_step(self.J)
        nodes = max(self.oversample, math.ceil(self.oversample * self.h))
        if bandwidth is not None:
            nodes = max(nodes, math.ceil(step * bandwidth / math.pi) + 1)
        return SpectralGrid.for_lattice(step, self.grid_radius, nodes)
