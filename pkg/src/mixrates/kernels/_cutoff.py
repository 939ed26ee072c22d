"""Smooth spectral cutoff equal to one on [-1, 1] and zero outside [-2, 2]."""

__docformat__ = "restructuredtext"
__all__ = [
    "SpectralCutoff",
    "build_cutoff",
    "bump_cdf",
    "cutoff_profile",
    "phi",
    "phi_hat",
    "spectral_moments",
]

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import legendre, polynomial

from mixrates._constants import CUTOFF_HALF_WIDTH, DEFAULT_MOLLIFIER_WIDTH, SPECTRAL_SUPPORT
from mixrates.custom_types import FloatArray

_BUMP_ORDER = 128
_BUMP_NODES, _BUMP_WEIGHTS = legendre.leggauss(_BUMP_ORDER)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _bump(u: FloatArray) -> FloatArray:
    """Unnormalized C-infinity bump ``exp(-1 / (1 - u^2))`` supported on ``(-1, 1)``."""
    out = np.zeros_like(u)
    inside = np.abs(u) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return out


_BUMP_MASS = float(_bump(_BUMP_NODES) @ _BUMP_WEIGHTS)


def bump_cdf(u: FloatArray | float) -> FloatArray:
    """
    Normalized distribution function of the bump on ``[-1, 1]``.

    Values are exactly 0 for ``u <= -1`` and exactly 1 for ``u >= 1``; in between the
    integral is computed by Gauss-Legendre quadrature on ``[-1, u]``.

    :param u: Evaluation points.

    :return: Values in ``[0, 1]``.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    out = np.where(u >= 1.0, 1.0, 0.0)
    inner = (u > -1.0) & (u < 1.0)
    if np.any(inner):
        half = (u[inner] + 1.0) / 2.0
        t = -1.0 + (_BUMP_NODES[None, :] + 1.0) * half[:, None]
        values = (_bump(t) @ _BUMP_WEIGHTS) * half / _BUMP_MASS
        out[inner] = np.clip(values, 0.0, 1.0)
    return out


def cutoff_profile(xi: FloatArray | float, mollifier_width: float) -> FloatArray:
    """
    Evaluate the cutoff spectrum at arbitrary frequencies.

    The spectrum is the indicator of ``[-3/2, 3/2]`` convolved with the normalized bump
    of half width ``mollifier_width``. It is evaluated at ``|xi|``, so it is exactly even,
    and it is exactly 1 on ``|xi| <= 3/2 - w`` and exactly 0 on ``|xi| >= 3/2 + w``.

    :param xi: Frequencies (radians).

    :param mollifier_width: Half width ``w`` of the bump.

    :return: Cutoff values.
    """
    a = np.abs(np.asarray(xi, dtype=float))
    # The left edge term is identically 1 for |xi| >= 0 when w <= 3/2.
    return 1.0 - bump_cdf((a - CUTOFF_HALF_WIDTH) / mollifier_width).reshape(a.shape)


def phi(x: FloatArray | float) -> FloatArray:
    """Gaussian bump ``exp(-x^2 / 2)``, with ``phi(0) = 1``."""
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * x * x)


def phi_hat(xi: FloatArray | float) -> FloatArray:
    """Fourier transform of :func:`phi`: ``sqrt(2 pi) exp(-xi^2 / 2)``."""
    xi = np.asarray(xi, dtype=float)
    return _SQRT_2PI * np.exp(-0.5 * xi * xi)


@dataclass(frozen=True, slots=True, eq=False)
class SpectralCutoff:
    """
    Sampled smooth cutoff spectrum.

    :ivar mollifier_width: Half width ``w`` of the mollifying bump.
    :ivar grid_spacing: Frequency step of the samples (radians).
    :ivar frequencies: Symmetric sample frequencies covering ``[-2, 2]``.
    :ivar values: Cutoff values at ``frequencies``.
    """

    mollifier_width: float
    grid_spacing: float
    frequencies: FloatArray = field(repr=False)
    values: FloatArray = field(repr=False)

    @property
    def plateau(self) -> tuple[float, float]:
        """
        Get the interval on which the spectrum is identically one.

        :return: ``(-(3/2 - w), 3/2 - w)``, which contains ``[-1, 1]``.
        """
        edge = CUTOFF_HALF_WIDTH - self.mollifier_width
        return -edge, edge

    @property
    def support(self) -> tuple[float, float]:
        """
        Get the interval outside which the spectrum is identically zero.

        :return: ``(-(3/2 + w), 3/2 + w)``, contained in ``[-2, 2]``.
        """
        edge = CUTOFF_HALF_WIDTH + self.mollifier_width
        return -edge, edge

    def __call__(self, xi: FloatArray | float) -> FloatArray:
        """Evaluate the cutoff spectrum in closed form at ``xi``."""
        return cutoff_profile(xi, self.mollifier_width)

    def eta_hat(self, xi: FloatArray | float) -> FloatArray:
        """
        Evaluate the dual-kernel spectrum ``chi_hat / phi_hat``.

        :param xi: Frequencies.

        :return: Spectrum values; zero outside the cutoff support.
        """
        xi = np.asarray(xi, dtype=float)
        out = np.zeros_like(xi)
        inside = np.abs(xi) < SPECTRAL_SUPPORT
        out[inside] = cutoff_profile(xi[inside], self.mollifier_width) / phi_hat(xi[inside])
        return out


def build_cutoff(
    mollifier_width: float = DEFAULT_MOLLIFIER_WIDTH, grid_spacing: float = 1.0 / 256.0
) -> SpectralCutoff:
    """
    Build and sample the smooth spectral cutoff.

    :param mollifier_width: Half width of the mollifying bump, in ``(0, 1/2]``.

    :param grid_spacing: Requested frequency step; adjusted so that ``[-2, 2]`` holds a
        whole number of steps.

    :return: The sampled cutoff.
    :raises ValueError: If the width is outside ``(0, 1/2]`` or the spacing is not positive.

    """
    if not 0.0 < mollifier_width <= 0.5:
        raise ValueError(
            f"mollifier_width must lie in (0, 1/2] to keep the plateau on [-1, 1], "
            f"got {mollifier_width}"
        )
    if grid_spacing <= 0.0:
        raise ValueError(f"grid_spacing must be positive, got {grid_spacing}")
    steps = max(2, round(2.0 * SPECTRAL_SUPPORT / grid_spacing))
    steps += steps % 2  # keep 0 on the grid
    frequencies = np.linspace(-SPECTRAL_SUPPORT, SPECTRAL_SUPPORT, steps + 1)
    values = cutoff_profile(frequencies, mollifier_width)
    return SpectralCutoff(
        mollifier_width=float(mollifier_width),
        grid_spacing=float(2.0 * SPECTRAL_SUPPORT / steps),
        frequencies=frequencies,
        values=values,
    )


def spectral_moments(cutoff: SpectralCutoff, max_order: int = 4) -> FloatArray:
    """
    Moments ``|int x^q chi(x) dx|`` for ``q = 0..max_order`` from the sampled spectrum.

    The q-th moment equals ``|chi_hat^(q)(0)|``; derivatives are read off a local
    polynomial fit through the ``2 max_order + 1`` samples centred at 0.

    :param cutoff: Sampled cutoff.

    :param max_order: Highest moment order.

    :return: Array of ``max_order + 1`` moment magnitudes.
    :raises ValueError: If the order is negative or the stencil leaves the plateau.

    """
    if max_order < 0:
        raise ValueError(f"max_order must be nonnegative, got {max_order}")
    center = cutoff.frequencies.size // 2
    lo, hi = center - max_order, center + max_order + 1
    stencil = cutoff.frequencies[lo:hi]
    if stencil.size and np.max(np.abs(stencil)) > cutoff.plateau[1]:
        raise ValueError("Moment stencil leaves the plateau; use a finer cutoff grid_spacing")
    coefs = polynomial.polyfit(stencil, cutoff.values[lo:hi], max_order)
    factorials = np.array([math.factorial(q) for q in range(max_order + 1)], dtype=float)
    return np.abs(coefs * factorials)
