"""
Test suite for the space-domain kernel tables.

Validates that:
1. ``chi(0)`` equals the spectral area over ``2 pi`` and both kernels are even.
2. Odd tabulated moments vanish.
3. Quadrature failures raise QuadratureError with structured context.
4. Grids must be odd, symmetric and increasing.
5. Row sums are periodic in ``x`` and bounded by the row-sum constant.
"""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest

from mixrates._errors import QuadratureError
from mixrates.kernels import (
    decay_bounds,
    default_x_grid,
    eta_norm,
    eta_row_sum,
    invert_to_space,
    row_sum_constant,
    tabulated_moments,
)


class TestInversion:
    """Values of the inverted kernels."""

    def test_chi_at_zero(self, small_table):
        """``chi(0) = (1 / pi) int_0^2 chi_hat = 3 / (2 pi)``."""
        center = small_table.x_grid.size // 2
        assert small_table.chi_values[center] == pytest.approx(1.5 / math.pi, abs=1e-8)

    def test_kernels_even(self, small_table):
        """Both tables are symmetric about 0."""
        assert np.array_equal(small_table.chi_values, small_table.chi_values[::-1])
        assert np.array_equal(small_table.eta_values, small_table.eta_values[::-1])

    def test_reported_error_within_tolerance(self, small_table):
        """The self-reported error respects the requested tolerance."""
        assert small_table.achieved_error <= small_table.quadrature_tol

    def test_spline_reproduces_nodes(self, small_table):
        """Interpolation returns the node values and zero beyond the table."""
        nodes = small_table.x_grid[::128]
        assert np.allclose(small_table.chi(nodes), small_table.chi_values[::128], atol=1e-14)
        assert small_table.eta(np.array([100.0]))[0] == 0.0

    def test_metadata(self, small_table):
        """Half range and spacing follow the grid."""
        assert small_table.half_range == 64.0
        assert small_table.spacing == pytest.approx(128.0 / 2048.0)


class TestMoments:
    """Moments on the table."""

    def test_odd_moments_vanish(self, small_table):
        """Odd moments cancel by symmetry."""
        moments = tabulated_moments(small_table, max_order=3)
        assert abs(moments[1]) < 1e-7
        assert abs(moments[3]) < 1e-7


class TestQuadratureFailure:
    """An unreachable tolerance raises the structured error."""

    def test_tiny_tolerance(self, cutoff):
        """The error carries the achieved and requested tolerances."""
        with pytest.raises(QuadratureError) as info:
            invert_to_space(cutoff, default_x_grid(8.0, 129), tol=1e-30)
        assert info.value.tol == 1e-30
        assert info.value.achieved > 1e-30


class TestGridValidation:
    """Grid checks."""

    @pytest.mark.parametrize(("half_range", "nodes", "match"), [
        (0.0, 11, r"half_range must be positive"),
        (8.0, 10, r"nodes must be odd"),
        (8.0, 1, r"nodes must be odd"),
    ])
    def test_default_grid(self, half_range, nodes, match):
        """Bad ranges and node counts are rejected."""
        with pytest.raises(ValueError, match=match):
            default_x_grid(half_range, nodes)

    def test_asymmetric_grid(self, cutoff):
        """Grids must be symmetric about 0."""
        with pytest.raises(ValueError, match=r"symmetric"):
            invert_to_space(cutoff, np.linspace(-4.0, 5.0, 11))

    def test_non_increasing_grid(self, cutoff):
        """Grids must be strictly increasing."""
        with pytest.raises(ValueError, match=r"strictly increasing"):
            invert_to_space(cutoff, np.array([1.0, 0.0, -1.0]))


class TestRowSums:
    """Row sums of the dual kernel."""

    @pytest.mark.parametrize("h", [0.5, 1.0])
    def test_periodic_in_x(self, small_table, h):
        """Shifting ``x`` by one lattice step leaves the sum unchanged."""
        sigma = 0.25
        base = eta_row_sum(small_table, 0.013, h, sigma, k_window=200)
        shifted = eta_row_sum(small_table, 0.013 + h * sigma, h, sigma, k_window=200)
        assert shifted == pytest.approx(base, rel=1e-9)

    @pytest.mark.parametrize("h", [0.25, 0.5, 1.0])
    def test_bounded_by_constant(self, small_table, h):
        """``h`` times a row sum stays below the row-sum constant."""
        total = eta_row_sum(small_table, 0.1, h, 1.0, k_window=200)
        assert h * total <= row_sum_constant(small_table)

    def test_invalid_bandwidth(self, small_table):
        """``h`` must lie in ``(0, 1]``."""
        with pytest.raises(ValueError, match=r"h must lie in \(0, 1\]"):
            eta_row_sum(small_table, 0.0, 1.5, 1.0)

    def test_norms(self, small_table):
        """Weighted norms are nonnegative and the decay bounds cover the outer half."""
        assert eta_norm(small_table, 0.0) >= abs(small_table.eta_values[small_table.x_grid.size // 2])
        bounds = decay_bounds(small_table)
        assert set(bounds) == {2, 4}
        assert all(v >= 0.0 for v in bounds.values())
