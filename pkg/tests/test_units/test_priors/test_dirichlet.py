"""
Test suite for Dirichlet-process scale priors.

Validates that:
1. Stick breaking gives probability measures over base-law atoms.
2. Batched cell probabilities have the expected shape and total mass.
3. Markov checks compare tail frequencies against their bounds.
4. The dyadic-ladder bound decays in ``J`` and its growth fit needs three levels.
"""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest

from mixrates.priors import (
    DiscreteScaleMeasure,
    ScalePriorSpec,
    dp_markov_check,
    dp_omega_lower_bound,
    fit_omega_growth,
    omega_cells,
    sample_dp,
    sample_dp_batch,
)


class TestStickBreaking:
    """Single Dirichlet-process draws."""

    def test_probability_measure(self, dp_spec, rng):
        """Weights sum to one and the residual is below the tolerance."""
        draw = sample_dp(2.0, dp_spec, rng)
        assert draw.weights.sum() == pytest.approx(1.0, abs=1e-12)
        assert draw.residual <= 1e-10
        assert np.all(draw.atoms > 0.0)
        assert draw.mass(0.0, math.inf) == pytest.approx(1.0, abs=1e-12)

    def test_sample_hits_atoms(self, dp_spec, rng):
        """Draws from the measure are its atoms."""
        draw = sample_dp(1.0, dp_spec, rng)
        assert np.all(np.isin(draw.sample(rng, 200), draw.atoms))

    def test_short_truncation(self, ig, rng):
        """One stick cannot reach the tolerance."""
        with pytest.raises(ValueError, match="raise the truncation"):
            sample_dp(1.0, ig, rng, truncation=1)

    def test_invalid_concentration(self, ig, rng):
        """alpha_sigma must be positive."""
        with pytest.raises(ValueError, match="alpha_sigma must be positive"):
            sample_dp(0.0, ig, rng)

    def test_measure_validation(self):
        """Weights must be a probability vector matching the atoms."""
        with pytest.raises(ValueError, match="sum to one"):
            DiscreteScaleMeasure([0.5, 0.2], [1.0, 2.0])
        with pytest.raises(ValueError, match="as many weights as atoms"):
            DiscreteScaleMeasure([1.0], [1.0, 2.0])


class TestBatch:
    """Cell probabilities of many draws."""

    def test_shape_and_total(self, dp_spec, rng):
        """The whole half line carries all but the unassigned stick."""
        masses = sample_dp_batch(1.0, dp_spec, [(0.0, math.inf), (0.5, 1.5)], 300, rng)
        assert masses.shape == (300, 2)
        np.testing.assert_allclose(masses[:, 0], 1.0, atol=1e-8)
        assert np.all(masses[:, 1] <= masses[:, 0] + 1e-12)

    def test_mean_matches_base(self, ig, rng):
        """E P(cell) = G(cell)."""
        masses = sample_dp_batch(1.0, ig, [(0.5, 1.5)], 4000, rng)
        assert masses.mean() == pytest.approx(ig.mass(0.5, 1.5), abs=0.03)


class TestMarkovCheck:
    """Tail-event frequencies."""

    def test_checks(self, dp_spec, rng):
        """One upper and one lower check per position, all within their bounds."""
        checks = dp_markov_check(dp_spec, [1.0, 2.0], 500, rng)
        assert [c.event for c in checks] == ["upper", "lower", "upper", "lower"]
        assert [c.x for c in checks] == [1.0, 1.0, 2.0, 2.0]
        assert all(0.0 <= c.frequency <= 1.0 for c in checks)
        assert all(c.passed for c in checks)

    def test_needs_dirichlet(self, rng):
        """A fixed scale law has no random tail events."""
        with pytest.raises(ValueError, match="Dirichlet-process scale prior"):
            dp_markov_check(ScalePriorSpec.inverse_gaussian(), [1.0], 10, rng)


class TestOmegaBound:
    """Dyadic-ladder lower bound."""

    def test_cells(self):
        """J + 1 disjoint cells at the dyadic scales."""
        cells = omega_cells(4, 1.0)
        assert len(cells) == 5
        assert cells[0] == (1.0, 1.0 + 2.0**-4)
        ordered = sorted(cells)
        assert all(hi < lo for (_, hi), (lo, _) in zip(ordered, ordered[1:]))

    def test_decreasing(self, dp_spec):
        """The log bound is finite and decreases with J."""
        values = [dp_omega_lower_bound(J, 1.0, 1.0, dp_spec) for J in range(2, 6)]
        assert all(math.isfinite(v) and v < 0.0 for v in values)
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_ranges(self, ig):
        """J below 2 and r below 1 are rejected."""
        with pytest.raises(ValueError, match="J must be at least 2"):
            dp_omega_lower_bound(1, 1.0, 1.0, ig)
        with pytest.raises(ValueError, match="r must be at least 1"):
            dp_omega_lower_bound(3, 0.5, 1.0, ig)

    def test_growth_fit(self, dp_spec):
        """The exponential term drives the growth."""
        growth = fit_omega_growth([2, 3, 4, 5, 6], 1.0, 1.0, dp_spec)
        assert growth.levels == (2, 3, 4, 5, 6)
        assert growth.exponential > 0.0

    def test_growth_needs_three_levels(self, dp_spec):
        """Duplicated levels count once."""
        with pytest.raises(ValueError, match="at least three levels"):
            fit_omega_growth([3, 3, 4], 1.0, 1.0, dp_spec)
