"""
Test suite for location base measures.

Validates that:
1. The fixed kind is a symmetric density with certified small balls.
2. The covariate kind averages shifted kernels and certifies its small balls.
3. Specs without a kernel or covariates are rejected.
"""

__docformat__ = "restructuredtext"

import numpy as np
import pytest
from scipy import stats

from mixrates._enums import LocationBaseKind
from mixrates.priors import LocationBaseSpec, covariate_base


class TestFixed:
    """Symmetric Pareto-tailed base."""

    def test_density(self, pareto_base):
        """Symmetric, centred and with tail index b6 - 1."""
        assert pareto_base.tail_index == 1.0
        assert pareto_base.size == 0
        assert float(pareto_base.cdf(0.0)) == pytest.approx(0.5)
        x = np.array([0.5, 2.0, 7.0])
        np.testing.assert_allclose(pareto_base.pdf(x), pareto_base.pdf(-x))
        assert float(pareto_base.pdf(0.0)) == pytest.approx(0.5)

    def test_small_ball_bound(self, pareto_base):
        """The certified bound sits below the exact ball mass."""
        x = np.linspace(-20.0, 20.0, 41)[:, None]
        t = np.geomspace(1e-3, 1.0, 7)[None, :]
        assert np.all(pareto_base.small_ball_bound(x, t) <= pareto_base.ball_mass(x, t))

    def test_sample(self, pareto_base, rng):
        """Draws are symmetric about zero."""
        draws = pareto_base.sample(rng, 40_000)
        assert draws.shape == (40_000,)
        assert np.mean(draws > 0.0) == pytest.approx(0.5, abs=0.02)

    def test_invalid_exponent(self):
        """b6 <= 1 gives an improper density."""
        with pytest.raises(ValueError, match="b6 must exceed 1"):
            LocationBaseSpec.pareto(1.0)

    def test_no_certificate(self, pareto_base):
        """Certificates are for covariate bases."""
        with pytest.raises(ValueError, match="covariate base"):
            pareto_base.certificate()


class TestCovariate:
    """Kernel smoothing of the covariates."""

    @pytest.fixture
    def base(self):
        """Gaussian kernel around three covariates."""
        return covariate_base(stats.norm(), np.array([-2.0, 0.0, 3.0]))

    def test_density(self, base):
        """Density is the average of the shifted kernels."""
        assert base.kind is LocationBaseKind.COVARIATE
        assert base.size == 3
        z = np.array([-1.0, 0.5, 4.0])
        expected = np.mean(stats.norm.pdf(z[:, None] - base.covariates), axis=1)
        np.testing.assert_allclose(base.pdf(z), expected)

    def test_certificate(self, base):
        """The Gaussian kernel certifies a = 2 Phi(1) - 1 and c = 1."""
        a, c = base.certificate()
        assert a == pytest.approx(2.0 * stats.norm.cdf(1.0) - 1.0)
        assert c == 1.0
        t = np.geomspace(1e-3, 1.0, 5)
        for x in base.covariates:
            assert np.all(base.small_ball_bound(x, t) >= a * t / base.size - 1e-15)
            assert np.all(base.small_ball_bound(x, t) <= base.ball_mass(x, t) + 1e-15)

    def test_sample(self, base, rng):
        """Draws come from the kernel mixture."""
        draws = base.sample(rng, 30_000)
        assert draws.mean() == pytest.approx(1.0 / 3.0, abs=0.05)

    def test_invalid(self):
        """A kernel without the scipy interface, or missing covariates, is rejected."""
        with pytest.raises(ValueError, match="frozen scipy distribution"):
            covariate_base(object(), np.zeros(2))
        with pytest.raises(ValueError, match="kernel density and covariates"):
            LocationBaseSpec(LocationBaseKind.COVARIATE)
        with pytest.raises(ValueError, match="nonempty array"):
            covariate_base(stats.norm(), np.array([]))
