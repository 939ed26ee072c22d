"""Single-scale location plan: bandwidth, thresholds and coefficient window."""

__docformat__ = "restructuredtext"
__all__ = ["LocationPlan"]

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
class LocationPlan:
    """
    Parameters of one location-scheme cell.

    The lattice is ``mu_k = h * sigma * k``. Coefficients are tabulated on the window
    ``|mu| <= mu_threshold + guard``, clipped to ``radius_cap``.

    :ivar sigma: Scale in ``(0, 1]``.
    :ivar beta: Hölder order.
    :ivar p: Design moment index; ``math.inf`` allowed.
    :ivar h: Lattice bandwidth.
    :ivar radius_cap: Largest grid half width.
    :ivar oversample: Smallest number of grid nodes per lattice step.
    """

    sigma: float
    beta: float
    p: float
    h: float
    radius_cap: float = DEFAULT_RADIUS_CAP
    oversample: int = DEFAULT_GRID_OVERSAMPLE

    def __post_init__(self):
        """Validate the plan."""
        if not 0.0 < self.sigma <= 1.0:
            raise ValueError(f"sigma must lie in (0, 1], got {self.sigma}")
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
    def h_formula(sigma: float, beta: float) -> float:
        """
        Asymptotic bandwidth ``2 pi sqrt(beta + 1) / sqrt(log(1 / sigma))``.

        :param sigma: Scale in ``(0, 1]``.

        :param beta: Hölder order.

        :return: The bandwidth, ``inf`` at ``sigma = 1``.
        """
        log_inv = -math.log(sigma)
        if log_inv <= 0.0:
            return math.inf
        return 2.0 * math.pi * math.sqrt(beta + 1.0) / math.sqrt(log_inv)

    @classmethod
    def from_sigma(
        cls,
        sigma: float,
        beta: float,
        p: float,
        h: float | None = None,
        h_max: float = DEFAULT_H_MAX,
        radius_cap: float = DEFAULT_RADIUS_CAP,
        oversample: int = DEFAULT_GRID_OVERSAMPLE,
    ) -> "LocationPlan":
        """
        Build a plan, defaulting the bandwidth to ``min(h_formula, h_max)``.

        :param sigma: Scale.

        :param beta: Hölder order.

        :param p: Design moment index.

        :param h: Explicit bandwidth; overrides the formula.

        :param h_max: Cap on the formula bandwidth.

        :param radius_cap: Largest grid half width.

        :param oversample: Grid nodes per lattice step.

        :return: The plan.
        """
        if h is None:
            h = min(cls.h_formula(sigma, beta), h_max)
        return cls(sigma, beta, p, h, radius_cap, oversample)

    @property
    def threshold(self) -> float:
        """
        Get the magnitude threshold ``sigma^beta``.

        :return: Coefficients must exceed this to be retained.
        """
        return self.sigma**self.beta

    @property
    def core_radius(self) -> float:
        """
        Get the core radius ``sigma^(-2 beta / p)``.

        :return: The radius, 1 when ``p`` is infinite.
        """
        return self.sigma ** (-2.0 * self.beta / self.p)

    @property
    def tail_margin(self) -> float:
        """
        Get ``sigma sqrt(2 (beta + 1) log(1 / sigma))``.

        :return: The margin added to the core radius.
        """
        return self.sigma * math.sqrt(2.0 * (self.beta + 1.0) * -math.log(self.sigma))

    @property
    def mu_threshold(self) -> float:
        """
        Get the location threshold of the index set.

        :return: ``core_radius + tail_margin``.
        """
        return self.core_radius + self.tail_margin

    @property
    def guard(self) -> float:
        """
        Get the guard band beyond the location threshold.

        :return: ``GUARD_FACTOR * tail_margin``.
        """
        return GUARD_FACTOR * self.tail_margin

    @property
    def capped(self) -> bool:
        """
        Check whether the radius cap cuts the coefficient window short.

        :return: True when ``mu_threshold + guard > radius_cap``.
        """
        return self.mu_threshold + self.guard > self.radius_cap

    @property
    def grid_radius(self) -> float:
        """
        Get the half width of the scheme grid.

        :return: ``mu_threshold + guard`` raised to the minimum radius and clipped to the cap.
        """
        return min(max(self.mu_threshold + self.guard, DEFAULT_MIN_RADIUS), self.radius_cap)

    @property
    def lattice_step(self) -> float:
        """
        Get the lattice step ``h sigma``.

        :return: Distance between neighbouring atoms.
        """
        return self.h * self.sigma

    def spectral_grid(self, bandwidth: float | None = None) -> SpectralGrid:
        """
        Grid carrying every lattice site as a node and resolving ``bandwidth``.

        :param bandwidth: Largest angular frequency of the target, when known.

        :return: The grid; its spacing is at most ``sigma / oversample``.
        """
        nodes = max(self.oversample, math.ceil(self.oversample * self.h))
        if bandwidth is not None:
            nodes = max(nodes, math.ceil(self.lattice_step * bandwidth / math.pi) + 1)
        return SpectralGrid.for_lattice(self.lattice_step, self.grid_radius, nodes)

    @property
    def k_range(self) -> range:
        """
        Get the lattice indices of the coefficient window.

        :return: ``range(-K, K + 1)`` with ``K = floor(grid_radius / (h sigma))``.
        """
        reach = math.floor(self.grid_radius / self.lattice_step)
        return range(-reach, reach + 1)
