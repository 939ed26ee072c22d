"""
Test suite for prior draws.

Validates that:
1. Every prior family produces the site kind it promises.
2. Families reject scale priors and base measures that do not fit them.
3. Verbose draws print one progress line.
"""

__docformat__ = "restructuredtext"

import numpy as np
import pytest
from _helpers import log_lines, parse_log_line
from scipy import stats

from mixrates._enums import MixtureKind
from mixrates.priors import ScalePriorSpec, covariate_base, sample_prior


class TestFamilies:
    """Site kinds per family."""

    def test_location(self, pareto_base, rng):
        """One shared scale and location sites."""
        draw = sample_prior(MixtureKind.LOCATION, ScalePriorSpec(), pareto_base, 1.0, 0.01, rng)
        assert draw.sigma is not None and draw.sigma > 0.0
        assert not draw.measure.has_scales
        assert draw.scale_measure is None
        x = np.linspace(-3.0, 3.0, 7)
        np.testing.assert_allclose(draw(x), draw.mixture(x))

    def test_location_scale(self, pareto_base, rng):
        """Every site carries its own scale."""
        draw = sample_prior(MixtureKind.LOCATION_SCALE, ScalePriorSpec(), pareto_base, 1.0, 0.01, rng)
        assert draw.sigma is None
        assert draw.measure.has_scales
        assert np.all(draw.measure.scales > 0.0)

    def test_hybrid(self, pareto_base, dp_spec, rng):
        """Scales are atoms of the drawn Dirichlet-process measure."""
        draw = sample_prior(MixtureKind.HYBRID, dp_spec, pareto_base, 1.0, 0.01, rng)
        assert draw.scale_measure is not None
        assert np.all(np.isin(draw.measure.scales, draw.scale_measure.atoms))

    def test_covariate_location(self, rng):
        """Covariate location draws share one scale."""
        base = covariate_base(stats.norm(), np.linspace(-1.0, 1.0, 5))
        draw = sample_prior(MixtureKind.COVARIATE_LOCATION, ScalePriorSpec(), base, 1.0, 0.01, rng)
        assert draw.sigma is not None
        assert not draw.measure.has_scales


class TestMismatch:
    """Families with the wrong ingredients."""

    def test_hybrid_needs_dirichlet(self, pareto_base, rng):
        """A fixed scale law cannot feed the hybrid family."""
        with pytest.raises(ValueError, match="Dirichlet-process scale prior"):
            sample_prior(MixtureKind.HYBRID, ScalePriorSpec(), pareto_base, 1.0, 0.01, rng)

    def test_covariate_needs_covariates(self, pareto_base, rng):
        """The covariate family needs a covariate base."""
        with pytest.raises(ValueError, match="covariate base measure"):
            sample_prior(MixtureKind.COVARIATE_LOCATION, ScalePriorSpec(), pareto_base, 1.0, 0.01, rng)


def test_verbose(pareto_base, rng, capsys):
    """One SAMPLE line naming the family."""
    draw = sample_prior(
        MixtureKind.LOCATION_SCALE, ScalePriorSpec(), pareto_base, 1.0, 0.01, rng, verbose=True
    )
    lines = log_lines(capsys.readouterr().out)
    assert len(lines) == 1
    parsed = parse_log_line(lines[0])
    assert parsed["prefix"] == "SAMPLE"
    assert parsed["owner"] == "priors"
    assert parsed["method"] == "sample_prior"
    assert parsed["target"] == "location_scale"
    assert f"atoms={len(draw)}" in parsed["context"]
