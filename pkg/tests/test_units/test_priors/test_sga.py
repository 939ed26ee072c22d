"""
Test suite for symmetric Gamma scalars and processes.

Validates that:
1. Scalars have the symmetric Gamma moments and dominate the small-ball bound.
2. Jump magnitudes invert the Lévy tail above the floor.
3. Process draws honour the small-jump policy and the site kind.
4. Signed atom measures add, restrict and convert consistently.
"""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest
from scipy import special

from mixrates._enums import SmallJumpPolicy
from mixrates.priors import (
    SignedAtomMeasure,
    invert_levy_tail,
    jump_count_mean,
    lump_gamma_params,
    sample_jump_magnitudes,
    sample_sga,
    sample_sga_process,
    sga_small_ball_bound,
    simulate_total_variation,
)


def _locations(rng, size):
    return rng.normal(0.0, 1.0, size)


def _pairs(rng, size):
    return np.column_stack([np.full(size, 0.5), rng.normal(0.0, 1.0, size)])


class TestScalar:
    """SGa(alpha) draws and their small-ball bound."""

    def test_single_draw_is_float(self, rng):
        """Without a size one float comes back."""
        assert isinstance(sample_sga(0.5, rng), float)

    def test_moments(self, rng):
        """Mean 0 and variance 2 alpha."""
        draws = sample_sga(0.5, rng, 200_000)
        assert draws.shape == (200_000,)
        assert abs(draws.mean()) < 0.02
        assert draws.var() == pytest.approx(1.0, rel=0.05)

    def test_small_ball_bound_holds(self, rng):
        """The bound sits below the empirical ball probability."""
        draws = sample_sga(0.5, rng, 100_000)
        for x in (0.0, 0.3, -1.0):
            empirical = float(np.mean(np.abs(draws - x) <= 0.1))
            assert sga_small_ball_bound(0.5, x, 0.1) <= empirical

    def test_small_ball_bound_formula(self):
        """delta exp(-2|x|) / (3 e Gamma(alpha))."""
        expected = 0.25 * math.exp(-2.0) / (3.0 * math.e * special.gamma(0.75))
        assert sga_small_ball_bound(0.75, -1.0, 0.25) == pytest.approx(expected)

    @pytest.mark.parametrize(
        ("alpha", "delta", "match"),
        [(0.0, 0.1, "alpha"), (1.5, 0.1, "alpha"), (0.5, 0.0, "delta"), (0.5, 0.6, "delta")],
    )
    def test_small_ball_ranges(self, alpha, delta, match):
        """Shape and radius leave their ranges."""
        with pytest.raises(ValueError, match=match):
            sga_small_ball_bound(alpha, 0.0, delta)

    def test_invalid_alpha(self, rng):
        """Non-positive shape is rejected."""
        with pytest.raises(ValueError, match="alpha must be positive"):
            sample_sga(0.0, rng)


class TestJumps:
    """Lévy-tail inversion and jump magnitudes."""

    def test_count_mean(self):
        """2 alpha_bar E1(floor)."""
        assert jump_count_mean(1.5, 0.01) == pytest.approx(3.0 * special.exp1(0.01))

    def test_inversion(self):
        """E1(u) = v E1(floor) for levels across many decades."""
        floor = 0.01
        levels = np.array([1.0, 0.5, 0.1, 1e-3, 1e-6, 1e-10])
        u = invert_levy_tail(levels, floor)
        assert u[0] == pytest.approx(floor)
        np.testing.assert_allclose(special.exp1(u) / special.exp1(floor), levels, rtol=1e-8)
        assert np.all(np.diff(u) > 0.0)

    def test_magnitudes_above_floor(self, rng):
        """Every magnitude is at least the floor."""
        u = sample_jump_magnitudes(5000, 0.05, rng)
        assert u.shape == (5000,)
        assert np.all(u >= 0.05)

    def test_lump_moments(self):
        """Gamma shape and scale match the small-jump mean and variance."""
        shape, scale = lump_gamma_params(2.0, 0.1)
        assert shape * scale == pytest.approx(2.0 * (1.0 - math.exp(-0.1)))
        assert shape * scale * scale == pytest.approx(2.0 * (1.0 - 1.1 * math.exp(-0.1)))


class TestProcess:
    """Symmetric Gamma process draws."""

    def test_discard(self, rng):
        """Location sites, exact jumps and the recorded bias."""
        measure = sample_sga_process(1.0, _locations, 0.01, rng)
        assert not measure.has_scales
        assert measure.truncation == 0.01
        assert measure.bias_bound == pytest.approx(0.02)
        assert np.all(np.abs(measure.masses) >= 0.01)

    def test_lump(self, rng):
        """One extra compensating atom and no bias."""
        measure = sample_sga_process(1.0, _pairs, 0.01, rng, SmallJumpPolicy.LUMP)
        assert measure.has_scales
        assert measure.bias_bound == 0.0
        assert len(measure) >= 1
        np.testing.assert_array_equal(measure.scales, 0.5)

    def test_zero_mass(self, rng):
        """alpha_bar = 0 draws the empty measure with the base's site kind."""
        assert len(sample_sga_process(0.0, _locations, 0.01, rng)) == 0
        assert sample_sga_process(0.0, _pairs, 0.01, rng).has_scales

    def test_invalid(self, rng):
        """Negative mass and floors outside (0, 1) are rejected."""
        with pytest.raises(ValueError, match="alpha_bar must be nonnegative"):
            sample_sga_process(-1.0, _locations, 0.01, rng)
        with pytest.raises(ValueError, match="jump_floor"):
            sample_sga_process(1.0, _locations, 1.0, rng)

    @pytest.mark.parametrize(
        ("policy", "expected"),
        [(SmallJumpPolicy.DISCARD, 2.0 * math.exp(-0.01)), (SmallJumpPolicy.LUMP, 2.0)],
    )
    def test_total_variation_mean(self, rng, policy, expected):
        """E|M| is 2 alpha_bar e^-floor above the floor, 2 alpha_bar with the lump."""
        tv = simulate_total_variation(1.0, 0.01, 20_000, rng, policy)
        assert tv.shape == (20_000,)
        assert np.all(tv >= 0.0)
        assert tv.mean() == pytest.approx(expected, rel=0.03)


class TestSignedAtomMeasure:
    """Finite signed measures."""

    def test_total_variation_and_cells(self):
        """|M| sums absolute masses; cells are half open."""
        measure = SignedAtomMeasure([1.0, -2.0, 0.5], [-1.0, 0.0, 1.0], 0.01)
        assert measure.total_variation == pytest.approx(3.5)
        assert measure.cell_mass(-1.0, 0.0) == pytest.approx(-2.0)
        assert measure.cell_mass(-2.0, 1.0) == pytest.approx(-0.5)

    def test_add(self):
        """Superposition keeps the smaller truncation and sums the bias."""
        a = SignedAtomMeasure([1.0], [0.0], 0.1, bias_bound=0.2)
        b = SignedAtomMeasure([-1.0, 2.0], [1.0, 2.0], 0.05, bias_bound=0.1)
        total = a + b
        assert len(total) == 3
        assert total.truncation == 0.05
        assert total.bias_bound == pytest.approx(0.3)

    def test_add_mixed_kinds(self):
        """Location and location-scale sites do not mix."""
        a = SignedAtomMeasure([1.0], [0.0], 0.1)
        with pytest.raises(ValueError, match="Cannot superpose"):
            a + a.with_scale(0.5)

    def test_mixture(self):
        """Location sites need a shared scale; scaled sites carry their own."""
        measure = SignedAtomMeasure([1.0, -0.5], [0.0, 1.0], 0.01)
        with pytest.raises(ValueError, match="shared sigma"):
            measure.to_mixture()
        x = np.linspace(-2.0, 2.0, 9)
        np.testing.assert_allclose(measure.to_mixture(0.5)(x), measure.with_scale(0.5).to_mixture()(x))

    def test_rows(self):
        """Rows are (mass, sigma, mu) with NaN sigma for location sites."""
        rows = SignedAtomMeasure([1.0], [3.0], 0.01).rows()
        assert rows.shape == (1, 3)
        assert math.isnan(rows[0, 1])
        assert rows[0, 2] == 3.0

    def test_validation(self):
        """Columns must agree, scales be positive and the truncation positive."""
        with pytest.raises(ValueError, match="Location column"):
            SignedAtomMeasure([1.0, 2.0], [0.0], 0.01)
        with pytest.raises(ValueError, match="Site scales must be positive"):
            SignedAtomMeasure([1.0], [0.0], 0.01, [0.0])
        with pytest.raises(ValueError, match="truncation must be positive"):
            SignedAtomMeasure([1.0], [0.0], 0.0)
        with pytest.raises(ValueError, match="already carry scales"):
            SignedAtomMeasure([1.0], [0.0], 0.01, [1.0]).with_scale(0.5)
