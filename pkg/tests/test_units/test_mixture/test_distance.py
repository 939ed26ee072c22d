"""Tests for evaluation grids, distances and the bump perturbation bound."""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest

from mixrates.mixture import (
    ApproxReport,
    EvalGrid,
    FiniteGaussMixture,
    bump_sup_difference,
    empirical_l2,
    gaussian_perturbation_bound,
    grid_sup,
)


class TestEvalGrid:
    """Evaluation grids."""

    def test_uniform_trapezoid_weights(self):
        """Weights integrate constants exactly."""
        grid = EvalGrid.uniform(-2.0, 3.0, 0.01)
        assert float(np.sum(grid.weights)) == pytest.approx(5.0)
        assert grid.spacing <= 0.01 + 1e-15
        assert grid.points[0] == -2.0
        assert grid.points[-1] == 3.0

    def test_rejects_unsorted(self):
        """Points must be strictly increasing."""
        with pytest.raises(ValueError, match=r"strictly increasing"):
            EvalGrid(np.array([0.0, 0.0, 1.0]))

    def test_rejects_bad_weights(self):
        """One weight per point."""
        with pytest.raises(ValueError, match=r"quadrature weights"):
            EvalGrid(np.array([0.0, 1.0]), np.array([1.0]))

    @pytest.mark.parametrize(("lower", "upper", "spacing"), [(1.0, 1.0, 0.1), (0.0, 1.0, 0.0)])
    def test_rejects_bad_uniform(self, lower, upper, spacing):
        """Empty intervals and nonpositive spacings are rejected."""
        with pytest.raises(ValueError):
            EvalGrid.uniform(lower, upper, spacing)


class TestDistances:
    """Empirical and sup distances."""

    def test_empirical_l2_constant_shift(self):
        """Shifting by a constant ``c`` gives distance ``|c|``."""
        xs = np.random.default_rng(0).normal(size=200)
        assert empirical_l2(np.sin, lambda x: np.sin(x) + 0.3, xs) == pytest.approx(0.3)

    def test_empirical_l2_needs_covariates(self):
        """An empty design is rejected."""
        with pytest.raises(ValueError, match=r"at least one covariate"):
            empirical_l2(np.sin, np.cos, np.array([]))

    def test_grid_sup_restriction(self):
        """Restricting to a radius ignores points outside it."""
        grid = EvalGrid.uniform(-4.0, 4.0, 0.5)
        assert grid_sup(np.abs, np.zeros_like, grid) == 4.0
        assert grid_sup(np.abs, np.zeros_like, grid, radius=1.0) == 1.0
        assert grid_sup(np.abs, np.zeros_like, EvalGrid(np.array([3.0])), radius=1.0) == 0.0


class TestPerturbationBound:
    """``sup |phi((x - mu1) / s1) - phi((x - mu2) / s2)| <= (4 |s1 - s2| + |mu1 - mu2|) / max(s1, s2)``."""

    def test_bound_dominates_measured_difference(self):
        """Random pairs with scale ratio in ``[1/2, 2]`` respect the bound."""
        rng = np.random.default_rng(5)
        for _ in range(50):
            s1 = rng.uniform(0.1, 1.0)
            s2 = s1 * rng.uniform(0.5, 2.0)
            mu1, mu2 = rng.normal(scale=0.5, size=2)
            measured = bump_sup_difference(mu1, mu2, s1, s2)
            assert measured <= gaussian_perturbation_bound(mu1, mu2, s1, s2) + 1e-12

    def test_equal_bumps(self):
        """Identical bumps have zero bound and zero difference."""
        assert gaussian_perturbation_bound(0.2, 0.2, 0.5, 0.5) == 0.0
        assert bump_sup_difference(0.2, 0.2, 0.5, 0.5) == 0.0

    def test_ratio_outside_range(self):
        """Scale ratios beyond ``[1/2, 2]`` are rejected."""
        with pytest.raises(ValueError, match=r"Scale ratio must lie in \[1/2, 2\]"):
            gaussian_perturbation_bound(0.0, 0.0, 1.0, 3.0)

    def test_nonpositive_scale(self):
        """Scales must be positive."""
        with pytest.raises(ValueError, match=r"Scales must be positive"):
            gaussian_perturbation_bound(0.0, 0.0, 0.0, 1.0)


class TestApproxReport:
    """Report validation."""

    def _report(self, **overrides):
        fields = dict(
            mixture=FiniteGaussMixture.empty(),
            lambda_size=0,
            sup_error_core=0.1,
            sup_error_global=0.2,
            coeff_l1=0.0,
            coeff_max=0.0,
            coeff_count=0,
            retained_l1=0.0,
            untruncated_error=0.1,
            truncation_gap=0.0,
            core_radius=1.0,
            grid_spacing=0.01,
            grid_radius=2.0,
        )
        fields.update(overrides)
        return ApproxReport(**fields)

    def test_valid(self):
        """A consistent report builds."""
        assert self._report().annuli == ()

    def test_lambda_exceeds_count(self):
        """``|Lambda|`` cannot exceed the tabulated count."""
        with pytest.raises(ValueError, match=r"lambda_size must lie in"):
            self._report(lambda_size=3, coeff_count=2)

    def test_negative_error(self):
        """Errors are nonnegative; NaN is allowed."""
        with pytest.raises(ValueError, match=r"sup_error_core must be nonnegative"):
            self._report(sup_error_core=-1.0)
        assert math.isnan(self._report(sup_error_core=math.nan).sup_error_core)
