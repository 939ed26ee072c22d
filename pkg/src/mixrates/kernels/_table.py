"""Space-domain tables of the cutoff kernel chi and the dual kernel eta."""

__docformat__ = "restructuredtext"
__all__ = [
    "DualKernelTable",
    "decay_bounds",
    "default_x_grid",
    "eta_norm",
    "eta_row_sum",
    "invert_to_space",
    "row_sum_constant",
    "tabulated_moments",
]

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import legendre
from scipy.integrate import trapezoid
from scipy.interpolate import CubicSpline

from mixrates._constants import (
    CUTOFF_HALF_WIDTH,
    DEFAULT_KERNEL_HALF_RANGE,
    DEFAULT_KERNEL_NODES,
    DEFAULT_QUADRATURE_TOL,
)
from mixrates._errors import QuadratureError
from mixrates.custom_types import FloatArray
from mixrates.kernels._cutoff import SpectralCutoff

_LOW_ORDER = 10
_HIGH_ORDER = 14
_MAX_PHASE_PER_PANEL = 4.0
_CHUNK = 1024
_PROBE_STRIDE = 64
_PROBE_TAIL = 64


def default_x_grid(
    half_range: float = DEFAULT_KERNEL_HALF_RANGE, nodes: int = DEFAULT_KERNEL_NODES
) -> FloatArray:
    """
    Uniform symmetric grid on ``[-half_range, half_range]``.

    :param half_range: Largest tabulated ``|x|``.

    :param nodes: Number of nodes; must be odd so that 0 is a node.

    :return: Grid points.
    :raises ValueError: If the range is not positive or the node count is even or too small.

    """
    if half_range <= 0.0:
        raise ValueError(f"half_range must be positive, got {half_range}")
    if nodes < 3 or nodes % 2 == 0:
        raise ValueError(f"nodes must be odd and at least 3, got {nodes}")
    return np.linspace(-half_range, half_range, nodes)


def _panel_rule(edges: FloatArray, order: int) -> tuple[FloatArray, FloatArray]:
    """Composite Gauss-Legendre nodes and weights over consecutive ``edges``."""
    base_nodes, base_weights = legendre.leggauss(order)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = (hi - lo) / 2.0
    nodes = (lo + hi) / 2.0 + half * base_nodes[None, :]
    weights = half * base_weights[None, :]
    return nodes.ravel(), weights.ravel()


def _spectral_edges(cutoff: SpectralCutoff, x_max: float) -> FloatArray:
    """Panel edges on ``[0, support]`` with breakpoints at the plateau and support ends."""
    width = _MAX_PHASE_PER_PANEL / max(x_max, 1.0)
    edge_in = CUTOFF_HALF_WIDTH - cutoff.mollifier_width
    edge_out = CUTOFF_HALF_WIDTH + cutoff.mollifier_width
    n_in = max(1, math.ceil(edge_in / width))
    n_out = max(1, math.ceil((edge_out - edge_in) / width))
    return np.concatenate(
        [np.linspace(0.0, edge_in, n_in + 1), np.linspace(edge_in, edge_out, n_out + 1)[1:]]
    )


def _cosine_transform(
    x: FloatArray, nodes: FloatArray, weighted: tuple[FloatArray, ...]
) -> list[FloatArray]:
    """
    Evaluate ``(1/pi) sum_i w_i s(xi_i) cos(x xi_i)`` for several weighted spectra ``s``.

    :param x: Nonnegative evaluation points.

    :param nodes: Quadrature nodes in frequency.

    :param weighted: Products of quadrature weights and spectrum samples.

    :return: One array per weighted spectrum.
    """
    outs = [np.empty_like(x) for _ in weighted]
    for start in range(0, x.size, _CHUNK):
        block = np.cos(np.outer(x[start : start + _CHUNK], nodes))
        for out, w in zip(outs, weighted, strict=True):
            out[start : start + _CHUNK] = block @ w / math.pi
    return outs


@dataclass(frozen=True, slots=True, eq=False)
class DualKernelTable:
    """
    Tabulated cutoff kernel ``chi`` and dual kernel ``eta`` with their spectral metadata.

    Between nodes both kernels are evaluated by cubic splines; outside the tabulated
    range they are treated as zero.

    :ivar cutoff: Spectral cutoff the table was inverted from.
    :ivar x_grid: Symmetric sample points.
    :ivar chi_values: ``chi`` at ``x_grid``.
    :ivar eta_values: ``eta`` at ``x_grid``.
    :ivar quadrature_tol: Requested absolute tolerance of the inversion.
    :ivar achieved_error: Self-reported error estimate of the inversion.
    """

    cutoff: SpectralCutoff
    x_grid: FloatArray = field(repr=False)
    chi_values: FloatArray = field(repr=False)
    eta_values: FloatArray = field(repr=False)
    quadrature_tol: float = DEFAULT_QUADRATURE_TOL
    achieved_error: float = 0.0
    _chi_spline: CubicSpline = field(init=False, repr=False)
    _eta_spline: CubicSpline = field(init=False, repr=False)

    def __post_init__(self):
        """Build the interpolating splines."""
        object.__setattr__(self, "_chi_spline", CubicSpline(self.x_grid, self.chi_values))
        object.__setattr__(self, "_eta_spline", CubicSpline(self.x_grid, self.eta_values))

    @property
    def half_range(self) -> float:
        """
        Get the largest tabulated ``|x|``.

        :return: ``x_grid[-1]``.
        """
        return float(self.x_grid[-1])

    @property
    def spacing(self) -> float:
        """
        Get the node spacing of the table.

        :return: ``x_grid[1] - x_grid[0]``.
        """
        return float(self.x_grid[1] - self.x_grid[0])

    def _interpolate(self, spline: CubicSpline, x: FloatArray | float) -> FloatArray:
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        inside = np.abs(x) <= self.half_range
        out[inside] = spline(x[inside])
        return out

    def chi(self, x: FloatArray | float) -> FloatArray:
        """Interpolate ``chi`` at ``x``."""
        return self._interpolate(self._chi_spline, x)

    def eta(self, x: FloatArray | float) -> FloatArray:
        """Interpolate ``eta`` at ``x``."""
        return self._interpolate(self._eta_spline, x)

    def eta_hat(self, xi: FloatArray | float) -> FloatArray:
        """Evaluate the dual-kernel spectrum in closed form."""
        return self.cutoff.eta_hat(xi)


def invert_to_space(
    cutoff: SpectralCutoff,
    x_grid: FloatArray | None = None,
    tol: float = DEFAULT_QUADRATURE_TOL,
) -> DualKernelTable:
    """
    Invert the cutoff and dual-kernel spectra to space by composite Gauss-Legendre rules.

    Both kernels are real and even, so the inverse transform reduces to a cosine integral
    over ``[0, support]``. Panels are short enough that the phase changes by at most a
    few radians per panel at the largest ``|x|``. The error is estimated by comparing the
    rule against a higher-order rule on a stride of probe nodes and on the outermost nodes.

    :param cutoff: Sampled cutoff spectrum.

    :param x_grid: Symmetric sample points; defaults to :func:`default_x_grid`.

    :param tol: Absolute tolerance on the tabulated values.

    :return: The kernel table.
    :raises ValueError: If the grid is not symmetric about 0 or not increasing.
    :raises QuadratureError: If the estimated error exceeds ``tol``.

    """
    x_grid = default_x_grid() if x_grid is None else np.asarray(x_grid, dtype=float)
    if x_grid.ndim != 1 or x_grid.size < 3 or np.any(np.diff(x_grid) <= 0.0):
        raise ValueError("x_grid must be a strictly increasing 1-D array with at least 3 points")
    if not np.allclose(x_grid, -x_grid[::-1], rtol=0.0, atol=1e-12 * (1.0 + x_grid[-1])):
        raise ValueError("x_grid must be symmetric about 0")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    abs_x, inverse = np.unique(np.abs(x_grid), return_inverse=True)
    edges = _spectral_edges(cutoff, float(abs_x[-1]))

    def weighted_spectra(order: int) -> tuple[FloatArray, tuple[FloatArray, FloatArray]]:
        nodes, weights = _panel_rule(edges, order)
        return nodes, (weights * cutoff(nodes), weights * cutoff.eta_hat(nodes))

    nodes, spectra = weighted_spectra(_LOW_ORDER)
    chi_abs, eta_abs = _cosine_transform(abs_x, nodes, spectra)

    tail_start = max(0, abs_x.size - _PROBE_TAIL)
    probes = np.union1d(
        np.arange(0, abs_x.size, _PROBE_STRIDE), np.arange(tail_start, abs_x.size)
    )
    hi_nodes, hi_spectra = weighted_spectra(_HIGH_ORDER)
    chi_ref, eta_ref = _cosine_transform(abs_x[probes], hi_nodes, hi_spectra)
    achieved = float(
        max(np.max(np.abs(chi_ref - chi_abs[probes])), np.max(np.abs(eta_ref - eta_abs[probes])))
    )
    if achieved > tol:
        raise QuadratureError(achieved, tol)

    return DualKernelTable(
        cutoff=cutoff,
        x_grid=x_grid,
        chi_values=chi_abs[inverse],
        eta_values=eta_abs[inverse],
        quadrature_tol=float(tol),
        achieved_error=achieved,
    )


def eta_norm(kernel: DualKernelTable, r: float) -> float:
    """
    Weighted sup norm ``max |x|^r |eta(x)|`` over the table.

    :param kernel: Kernel table.

    :param r: Nonnegative weight exponent.

    :return: The norm.
    """
    return float(np.max(np.abs(kernel.x_grid) ** r * np.abs(kernel.eta_values)))


def row_sum_constant(kernel: DualKernelTable) -> float:
    """
    Constant ``3 ||eta||_{0,0} + 4 ||eta||_{2,0}`` bounding ``h`` times any row sum.

    :param kernel: Kernel table.

    :return: The constant.
    """
    return 3.0 * eta_norm(kernel, 0.0) + 4.0 * eta_norm(kernel, 2.0)


def decay_bounds(kernel: DualKernelTable, orders: tuple[int, ...] = (2, 4)) -> dict[int, float]:
    """
    Record ``max |x|^r |eta(x)|`` over the outer half of the table for each order ``r``.

    :param kernel: Kernel table.

    :param orders: Weight exponents.

    :return: Mapping from order to bound.
    """
    outer = np.abs(kernel.x_grid) >= kernel.half_range / 2.0
    x, eta = np.abs(kernel.x_grid[outer]), np.abs(kernel.eta_values[outer])
    return {r: float(np.max(x**r * eta)) for r in orders}


def tabulated_moments(kernel: DualKernelTable, max_order: int = 4) -> FloatArray:
    """
    Moments ``int x^q chi(x) dx`` by the trapezoid rule on the table.

    The trapezoid rule is exact for the band-limited ``chi`` up to the tails beyond the
    table, so the zeroth moment checks the normalization and odd moments vanish by
    symmetry. Higher even moments are dominated by the truncated tails.

    :param kernel: Kernel table.

    :param max_order: Highest order.

    :return: Array of ``max_order + 1`` signed moments.
    """
    x = kernel.x_grid
    return np.array(
        [float(trapezoid(x**q * kernel.chi_values, x)) for q in range(max_order + 1)]
    )


def eta_row_sum(
    kernel: DualKernelTable, x: float, h: float, sigma: float, k_window: int | None = None
) -> float:
    """
    Truncated absolute row sum ``sum_k |eta((x - h sigma k) / sigma)|``.

    The window is centred at the lattice site nearest to ``x``, so the sum is periodic
    in ``x`` with period ``h sigma``.

    :param kernel: Kernel table.

    :param x: Row position.

    :param h: Lattice bandwidth, at most 1.

    :param sigma: Scale.

    :param k_window: Half width of the index window; defaults to the table range.

    :return: The truncated row sum.
    :raises ValueError: If ``h`` is outside ``(0, 1]``, ``sigma`` is not positive or the
        window is negative.

    """
    if not 0.0 < h <= 1.0:
        raise ValueError(f"h must lie in (0, 1], got {h}")
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if k_window is None:
        k_window = math.ceil(kernel.half_range / h) + 1
    if k_window < 0:
        raise ValueError(f"k_window must be nonnegative, got {k_window}")
    k0 = round(x / (h * sigma))
    k = np.arange(k0 - k_window, k0 + k_window + 1, dtype=float)
    return float(np.sum(np.abs(kernel.eta((x - h * sigma * k) / sigma))))
