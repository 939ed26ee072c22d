"""Base measures of the mixture locations: fixed heavy-tailed, or built from covariates."""

__docformat__ = "restructuredtext"
__all__ = ["ContinuousLaw", "LocationBaseSpec", "covariate_base"]

import math
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable

import numpy as np

from mixrates._enums import LocationBaseKind
from mixrates.custom_types import FloatArray

_CERTIFICATE_RADII = np.geomspace(1e-3, 1.0, 16)


@runtime_checkable
class ContinuousLaw(Protocol):
    """Frozen continuous distribution with the scipy.stats interface."""

    def pdf(self, x): ...

    def cdf(self, x): ...

    def rvs(self, size=None, random_state=None): ...


@dataclass(frozen=True, slots=True, eq=False)
class LocationBaseSpec:
    """
    Probability measure ``G_mu`` of the mixture locations.

    The fixed kind has density ``(nu / 2) (1 + |mu|)^-(1 + nu)`` with ``nu = b6 - 1``,
    whose small balls satisfy ``G(|mu - x| <= t) >= nu 2^-b6 t (1 + |x|)^-b6``.
    The covariate kind has density ``z -> n^-1 sum_i g(z - x_i)``.

    :ivar kind: Fixed or covariate.
    :ivar b6: Polynomial small-ball exponent of the fixed kind, above 1.
    :ivar kernel: Density ``g`` of the covariate kind.
    :ivar covariates: Covariates ``x_1, ..., x_n`` of the covariate kind.
    """

    kind: LocationBaseKind = LocationBaseKind.FIXED
    b6: float = 2.0
    kernel: ContinuousLaw | None = field(default=None, repr=False)
    covariates: FloatArray | None = field(default=None, repr=False)

    def __post_init__(self):
        """Validate the spec."""
        if self.kind is LocationBaseKind.FIXED:
            if not self.b6 > 1.0:
                raise ValueError(f"b6 must exceed 1 for a proper density, got {self.b6}")
            return
        if self.kernel is None or self.covariates is None:
            raise ValueError("The covariate kind needs a kernel density and covariates")
        xs = np.asarray(self.covariates, dtype=float).ravel()
        if xs.size == 0 or not np.all(np.isfinite(xs)):
            raise ValueError("Covariates must be a nonempty array of finite values")
        object.__setattr__(self, "covariates", xs)

    @classmethod
    def pareto(cls, b6: float = 2.0) -> "LocationBaseSpec":
        """Fixed symmetric Pareto-tailed base measure."""
        return cls(LocationBaseKind.FIXED, b6)

    @property
    def tail_index(self) -> float:
        """
        Get ``nu = b6 - 1``; moments of order below ``nu`` are finite.

        :return: The tail index of the fixed kind.
        """
        return self.b6 - 1.0

    @property
    def b5(self) -> float:
        """Small-ball power of the radius."""
        return 1.0

    @property
    def size(self) -> int:
        """Number of covariates, 0 for the fixed kind."""
        return 0 if self.covariates is None else int(self.covariates.size)

    def pdf(self, z: FloatArray | float) -> FloatArray:
        """Density of ``G_mu``."""
        z = np.asarray(z, dtype=float)
        if self.kind is LocationBaseKind.FIXED:
            nu = self.tail_index
            return 0.5 * nu * (1.0 + np.abs(z)) ** (-(1.0 + nu))
        shifted = z[..., None] - self.covariates
        return np.mean(self.kernel.pdf(shifted), axis=-1)

    def cdf(self, z: FloatArray | float) -> FloatArray:
        """Distribution function of ``G_mu``."""
        z = np.asarray(z, dtype=float)
        if self.kind is LocationBaseKind.FIXED:
            half_tail = 0.5 * (1.0 + np.abs(z)) ** (-self.tail_index)
            return np.where(z < 0.0, half_tail, 1.0 - half_tail)
        shifted = z[..., None] - self.covariates
        return np.mean(self.kernel.cdf(shifted), axis=-1)

    def sample(self, rng: np.random.Generator, size: int) -> FloatArray:
        """
        Draw locations.

        :param rng: Random stream.

        :param size: Number of draws.

        :return: Draws of shape ``(size,)``.
        """
        if self.kind is LocationBaseKind.FIXED:
            magnitude = rng.pareto(self.tail_index, size)
            return np.where(rng.random(size) < 0.5, -magnitude, magnitude)
        picks = self.covariates[rng.integers(self.covariates.size, size=size)]
        noise = np.asarray(self.kernel.rvs(size=size, random_state=rng), dtype=float)
        return picks + noise

    def ball_mass(self, x: FloatArray | float, t: FloatArray | float) -> FloatArray:
        """Exact ``G(|mu - x| <= t)``."""
        x = np.asarray(x, dtype=float)
        return self.cdf(x + t) - self.cdf(x - t)

    def small_ball_bound(self, x: FloatArray | float, t: FloatArray | float) -> FloatArray:
        """
        Certified lower bound on ``G(|mu - x| <= t)`` for ``t`` in ``(0, 1]``.

        Fixed kind: ``nu 2^-b6 t (1 + |x|)^-b6``. Covariate kind: the largest single
        component mass ``n^-1 g([x - x_i - t, x - x_i + t])``.

        :param x: Ball centres.

        :param t: Radii.

        :return: The bound.
        """
        x = np.asarray(x, dtype=float)
        t = np.asarray(t, dtype=float)
        if self.kind is LocationBaseKind.FIXED:
            c = self.tail_index * 2.0**-self.b6
            return c * t * (1.0 + np.abs(x)) ** (-self.b6)
        offset = x[..., None] - self.covariates
        grow = t[..., None]
        component = self.kernel.cdf(offset + grow) - self.kernel.cdf(offset - grow)
        return np.max(component, axis=-1) / self.covariates.size

    def certificate(self) -> tuple[float, float]:
        """
        Constants ``(a, c)`` with ``G(|mu - x_i| <= t) >= a n^-1 t^c`` at every covariate.

        :return: ``a = min_t g([-t, t]) / t`` over radii in ``[1e-3, 1]`` and ``c = 1``.
        :raises ValueError: For the fixed kind.

        """
        if self.kind is not LocationBaseKind.COVARIATE:
            raise ValueError("Certificates apply to covariate base measures")
        masses = self.kernel.cdf(_CERTIFICATE_RADII) - self.kernel.cdf(-_CERTIFICATE_RADII)
        return float(np.min(masses / _CERTIFICATE_RADII)), 1.0


def covariate_base(g: ContinuousLaw, xs: FloatArray) -> LocationBaseSpec:
    """
    Location base measure with density ``z -> n^-1 sum_i g(z - x_i)``.

    :param g: Frozen scipy density, e.g. ``scipy.stats.norm()``.

    :param xs: Covariates.

    :return: The covariate-kind spec.
    """
    if not isinstance(g, ContinuousLaw):
        raise ValueError("g must expose pdf, cdf and rvs like a frozen scipy distribution")
    return LocationBaseSpec(LocationBaseKind.COVARIATE, math.nan, g, np.asarray(xs, dtype=float))
