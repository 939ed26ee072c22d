"""
Test suite for the dyadic residual cascade.

Validates that:
1. Recursive residuals equal ``f0 - chi_{sigma_j} * f0`` at every level.
2. Level inputs sum to ``f0 - Delta_J``.
3. Truncation keeps large coefficients inside each level's window.
4. Coefficient sets with wrong scales or levels are rejected.
"""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.hybrid import (
    HybridPlan,
    MultiScaleCoeffs,
    hybrid_coefficients,
    level_inputs,
    residual_cascade,
    telescoping_deviation,
    truncate_hybrid,
)
from mixrates.kernels import GridFunction, SpectralGrid
from mixrates.location import LatticeCoefficients


@pytest.fixture
def sampled(target):
    """Target on a grid fine enough for level 5."""
    return GridFunction.sample(target, SpectralGrid.covering(24.0, 2.0**-5 / 16.0))


class TestCascade:
    """Residual identities."""

    def test_telescoping(self, sampled, cutoff):
        """The recursive and direct residuals agree to rounding."""
        residuals = residual_cascade(sampled, 5, cutoff)
        assert len(residuals) == 6
        assert telescoping_deviation(residuals, sampled, cutoff) < 1e-12

    def test_inputs_sum(self, sampled, cutoff):
        """``sum_j L_j = f0 - Delta_J``."""
        inputs = level_inputs(sampled, 5, cutoff)
        residuals = residual_cascade(sampled, 5, cutoff)
        total = np.sum([level.values for level in inputs], axis=0)
        assert np.max(np.abs(total - (sampled.values - residuals[-1].values))) < 1e-12

    def test_residuals_shrink(self, sampled, cutoff):
        """A smooth target leaves smaller residuals at finer levels."""
        sups = [r.sup() for r in residual_cascade(sampled, 3, cutoff)]
        assert all(a >= b for a, b in zip(sups, sups[1:], strict=False))

    def test_needs_one_level(self, sampled, cutoff):
        """At least one level beyond the coarsest."""
        with pytest.raises(ValueError, match=r"J must be at least 1"):
            residual_cascade(sampled, 0, cutoff)


class TestCoefficients:
    """Per-level coefficients and truncation."""

    def test_levels_and_truncation(self, target, cutoff):
        """Kept atoms exceed the threshold and sit inside their level's window."""
        plan = HybridPlan.from_levels(3, 1.0, 2.0)
        coeffs = hybrid_coefficients(target, plan, cutoff)
        assert coeffs.J == 3
        assert len(coeffs) == sum(len(level) for level in coeffs.levels)
        retained, mixture = truncate_hybrid(coeffs, plan)
        assert retained.shape == (len(mixture), 2)
        for j, k in retained:
            sigma = plan.sigma(int(j))
            site = plan.h * sigma * k
            assert abs(site) <= plan.mu_threshold(int(j))
        assert np.all(np.abs(mixture.weights) > plan.threshold)
        assert set(np.unique(mixture.scales)) <= set(plan.sigmas)

    def test_wrong_finest_level(self, target, cutoff):
        """Coefficients and plan must agree on ``J``."""
        coeffs = hybrid_coefficients(target, HybridPlan.from_levels(2, 1.0, 2.0), cutoff)
        with pytest.raises(ValueError, match=r"reach level 2, the plan reaches 3"):
            truncate_hybrid(coeffs, HybridPlan.from_levels(3, 1.0, 2.0))

    def test_wrong_scale(self):
        """Level ``j`` must sit at scale ``2^-j``."""
        level = LatticeCoefficients(1.0, 0.3, [0], [1.0])
        with pytest.raises(ValueError, match=r"Level 0 has scale 0.3"):
            MultiScaleCoeffs((level,))
