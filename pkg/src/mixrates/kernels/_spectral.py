"""Uniform periodic grids and exact Fourier multipliers for smoothing and lattice expansion."""

__docformat__ = "restructuredtext"
__all__ = [
    "GridFunction",
    "SpectralGrid",
    "apply_multiplier",
    "coefficient_multiplier",
    "smoothing_multiplier",
]

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from scipy import fft
from scipy.interpolate import CubicSpline

from mixrates._constants import DEFAULT_GRID_OVERSAMPLE
from mixrates.custom_types import Evaluable, FloatArray
from mixrates.kernels._cutoff import SpectralCutoff

Multiplier = Callable[[FloatArray], FloatArray]


@dataclass(frozen=True, slots=True)
class SpectralGrid:
    """
    Uniform periodic grid ``x_j = (j - size // 2) * spacing``.

    :ivar spacing: Node spacing.
    :ivar size: Number of nodes; even, so that 0 is the node ``size // 2``.
    """

    spacing: float
    size: int

    def __post_init__(self):
        """Validate the grid."""
        if self.spacing <= 0.0:
            raise ValueError(f"Grid spacing must be positive, got {self.spacing}")
        if self.size < 2 or self.size % 2:
            raise ValueError(f"Grid size must be even and at least 2, got {self.size}")

    @classmethod
    def covering(cls, radius: float, spacing: float) -> "SpectralGrid":
        """
        Smallest FFT-friendly grid with the given spacing reaching ``radius``.

        :param radius: Half width to cover.

        :param spacing: Node spacing.

        :return: The grid.
        """
        half = fft.next_fast_len(max(1, math.ceil(radius / spacing)))
        return cls(spacing=float(spacing), size=2 * half)

    @classmethod
    def for_lattice(
        cls, lattice_step: float, radius: float, oversample: int = DEFAULT_GRID_OVERSAMPLE
    ) -> "SpectralGrid":
        """
        Grid on which every site of the lattice ``lattice_step * k`` is a node.

        :param lattice_step: Lattice step ``h * sigma``.

        :param radius: Half width to cover.

        :param oversample: Nodes per lattice step.

        :return: The grid; its size is a multiple of ``2 * oversample``.
        :raises ValueError: If the step or radius is not positive or ``oversample < 1``.

        """
        if lattice_step <= 0.0 or radius <= 0.0:
            raise ValueError(
                f"lattice_step and radius must be positive, got {lattice_step} and {radius}"
            )
        if oversample < 1:
            raise ValueError(f"oversample must be at least 1, got {oversample}")
        units = fft.next_fast_len(math.floor(radius / lattice_step) + 2)
        return cls(spacing=lattice_step / oversample, size=2 * oversample * units)

    @property
    def center(self) -> int:
        """
        Get the index of the node at 0.

        :return: ``size // 2``.
        """
        return self.size // 2

    @property
    def radius(self) -> float:
        """
        Get the half width covered by the grid.

        :return: ``center * spacing``.
        """
        return self.center * self.spacing

    @property
    def points(self) -> FloatArray:
        """
        Get the grid nodes.

        :return: Node positions.
        """
        return (np.arange(self.size) - self.center) * self.spacing

    @property
    def frequencies(self) -> FloatArray:
        """
        Get the angular frequencies of the real FFT of a grid sample.

        :return: ``2 pi rfftfreq(size, spacing)``.
        """
        return 2.0 * math.pi * fft.rfftfreq(self.size, self.spacing)

    def stride(self, step: float) -> int:
        """
        Number of nodes per ``step``.

        :param step: Distance that should be a whole number of nodes.

        :return: The integer stride.
        :raises ValueError: If ``step`` is not a whole multiple of the spacing.

        """
        ratio = step / self.spacing
        stride = round(ratio)
        if stride < 1 or abs(ratio - stride) > 1e-9 * max(1.0, ratio):
            raise ValueError(
                f"Step {step} is not a whole multiple of the grid spacing {self.spacing}"
            )
        return stride


@dataclass(slots=True, eq=False)
class GridFunction:
    """
    A function tabulated on a :class:`SpectralGrid`.

    Calling it interpolates with a cubic spline built on first use; nodes are reproduced
    exactly and points off the grid evaluate to 0.

    :ivar grid: Sampling grid.
    :ivar values: Samples at ``grid.points``.
    """

    grid: SpectralGrid
    values: FloatArray = field(repr=False)
    _spline: CubicSpline | None = field(default=None, init=False, repr=False)

    @classmethod
    def sample(cls, f: Evaluable, grid: SpectralGrid) -> "GridFunction":
        """
        Sample ``f`` on the grid.

        :param f: Vectorized function.

        :param grid: Sampling grid.

        :return: The tabulated function.
        """
        values = np.asarray(f(grid.points), dtype=float)
        return cls(grid=grid, values=np.broadcast_to(values, (grid.size,)).copy())

    def __call__(self, x: FloatArray | float) -> FloatArray:
        """Interpolate at ``x``."""
        if self._spline is None:
            self._spline = CubicSpline(self.grid.points, self.values)
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        inside = np.abs(x) <= self.grid.radius - self.grid.spacing
        out[inside] = self._spline(x[inside])
        return out

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        """Pointwise difference on a shared grid."""
        if other.grid != self.grid:
            raise ValueError("Grid functions live on different grids")
        return GridFunction(self.grid, self.values - other.values)

    def sup(self) -> float:
        """
        Largest absolute sample.

        :return: ``max |values|``.
        """
        return float(np.max(np.abs(self.values)))

    def l1(self) -> float:
        """
        Riemann-sum L1 norm over the grid.

        :return: ``spacing * sum |values|``.
        """
        return float(self.grid.spacing * np.sum(np.abs(self.values)))


def apply_multiplier(f: GridFunction, multiplier: Multiplier) -> GridFunction:
    """
    Apply a real even Fourier multiplier to a periodic grid sample.

    The result at node ``j`` depends on the samples only through their differences in
    position, so the grid origin plays no role.

    :param f: Tabulated function.

    :param multiplier: Function of angular frequency.

    :return: Tabulated result on the same grid.
    """
    spectrum = fft.rfft(f.values)
    spectrum *= multiplier(f.grid.frequencies)
    return GridFunction(f.grid, fft.irfft(spectrum, n=f.grid.size))


def smoothing_multiplier(cutoff: SpectralCutoff, sigma: float) -> Multiplier:
    """
    Multiplier of the convolution with ``chi_sigma``.

    The rescaled spectrum is ``chi_hat(2 sigma xi)``, which vanishes for
    ``|xi| >= 1 / sigma``; this is where the lattice expansion at scale ``sigma`` is exact.

    :param cutoff: Spectral cutoff.

    :param sigma: Scale.

    :return: The multiplier.
    """
    return lambda xi: cutoff(2.0 * sigma * xi)


def coefficient_multiplier(cutoff: SpectralCutoff, h: float, sigma: float) -> Multiplier:
    """
    Multiplier producing the coefficient field ``(h / sigma) int eta((y - x) / sigma) f(y) dy``.

    Lattice coefficients are the samples of this field at ``x = h sigma k``.

    :param cutoff: Spectral cutoff.

    :param h: Lattice bandwidth.

    :param sigma: Scale.

    :return: The multiplier ``h eta_hat(sigma xi)``.
    """
    return lambda xi: h * cutoff.eta_hat(sigma * xi)
