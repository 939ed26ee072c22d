"""
Test suite for the hybrid scheme pipeline.

Validates that:
1. One annulus per level with the plan's radii and atom counts.
2. A smooth target is reproduced almost exactly before truncation.
3. Prior-mass cells are disjoint and count bounds follow their regimes.
4. Verbose output covers every residual and level stage.
"""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest
from _helpers import log_lines, parse_log_line

from mixrates.hybrid import (
    HybridArgument,
    HybridCache,
    HybridPipeline,
    HybridPlan,
    annulus_spread,
    annulus_trend,
    build_hybrid_stages,
    hybrid_approx,
    hybrid_cells,
    hybrid_lambda_bound,
    mass_bound,
)
from mixrates.location import LocationPlan, location_approx


class TestReport:
    """Report of a four-level run."""

    def test_annuli(self, report, plan):
        """Annuli follow the windows and partition the atoms by level."""
        assert [a.level for a in report.annuli] == list(plan.levels)
        assert [a.outer for a in report.annuli] == list(plan.zetas)
        assert report.annuli[-1].inner == 0.0
        assert sum(a.atoms_at_level for a in report.annuli) == report.lambda_size
        for a in report.annuli:
            assert a.normalized_error == pytest.approx(a.sup_error / plan.sigma(a.level) ** plan.beta)

    def test_consistency(self, report, plan):
        """Core errors obey the triangle inequality and the core is the unit window."""
        assert report.core_radius == 1.0
        assert report.untruncated_error < 1e-4
        assert report.sup_error_core <= report.untruncated_error + report.truncation_gap + 1e-12
        assert report.sup_error_core <= report.sup_error_global
        assert 0 < report.lambda_size <= report.coeff_count

    def test_trend_and_spread(self, report):
        """Annulus statistics are defined on a multi-level report."""
        rho = annulus_trend(report)
        assert math.isnan(rho) or -1.0 <= rho <= 1.0
        if report.annuli[-1].normalized_error > 0.0:
            assert annulus_spread(report) >= 1.0

    def test_infinite_moment_index(self, target, cutoff):
        """With unit windows every outer annulus is empty."""
        report = hybrid_approx(target, HybridPlan.from_levels(2, 1.0, math.inf), cutoff)
        assert all(math.isnan(a.sup_error) for a in report.annuli[:-1])
        assert math.isfinite(report.annuli[-1].sup_error)
        assert math.isnan(annulus_trend(report))

    def test_location_report_has_no_annuli(self, target, cutoff):
        """Annulus statistics need a multi-scale report."""
        single = location_approx(target, LocationPlan.from_sigma(0.25, 1.0, 2.0), cutoff)
        with pytest.raises(ValueError, match=r"no annulus errors"):
            annulus_trend(single)


class TestBounds:
    """Count and mass bounds."""

    def test_lambda_bound_regimes(self):
        """Two branches split at ``p = 2 beta``."""
        heavy = HybridPlan.from_levels(4, 1.0, 1.0)
        light = HybridPlan.from_levels(4, 1.0, 4.0)
        j_log_j = 4.0 * math.log(4.0)
        assert hybrid_lambda_bound(heavy) == pytest.approx(min(16.0**2, j_log_j * 16.0**2))
        assert hybrid_lambda_bound(light) == pytest.approx(j_log_j * 16.0)

    def test_mass_bound(self, plan):
        """``4 ||f0||_1 / sigma_J``."""
        assert mass_bound(plan, 2.0) == pytest.approx(4.0 * 2.0 * 16.0)

    def test_cells_disjoint(self, target, cutoff, plan):
        """The cells ``U_j x V_jk`` of the retained atoms are pairwise disjoint."""
        cache = HybridCache()
        argument = HybridArgument(target=target, plan=plan, kernel=cutoff)
        HybridPipeline(build_hybrid_stages(cache, argument)).run()
        cells = hybrid_cells(plan, cache.retained)
        assert cells.disjoint
        assert cells.index.shape[0] == len(cache.mixture)


class TestPipeline:
    """Pipeline mechanics."""

    def test_stage_graph(self, target, cutoff):
        """Sample first, Report last, one residual and one level stage per level."""
        cache = HybridCache()
        argument = HybridArgument(target=target, plan=HybridPlan.from_levels(2, 1.0, 2.0), kernel=cutoff)
        pipeline = HybridPipeline(build_hybrid_stages(cache, argument))
        names = [stage.name for stage in pipeline.stages]
        assert names[0] == "Sample"
        assert names[-1] == "Report"
        assert {f"Residual_{j}" for j in range(3)} | {f"Level_{j}" for j in range(3)} <= set(names)
        with pytest.raises(RuntimeError, match=r"has not been run"):
            _ = pipeline.report

    def test_verbose_lines(self, target, cutoff, capsys):
        """Every residual and level stage logs in the shared format."""
        hybrid_approx(target, HybridPlan.from_levels(2, 1.0, 2.0), cutoff, verbose=True)
        lines = [parse_log_line(line) for line in log_lines(capsys.readouterr().out)]
        owners = {line["owner"] for line in lines if line["prefix"] == "RESIDUAL"}
        assert owners == {"Residual_0", "Residual_1", "Residual_2"}
        targets = [line["target"] for line in lines if line["prefix"] == "COEFF"]
        assert sorted(targets) == ["levels[0]", "levels[1]", "levels[2]"]
        assert sum(line["prefix"] == "RECONSTRUCT" for line in lines) == 1

    def test_release_keeps_mixture(self, target, cutoff):
        """Released runs keep only the mixture and report."""
        cache = HybridCache()
        argument = HybridArgument(target=target, plan=HybridPlan.from_levels(2, 1.0, 2.0), kernel=cutoff)
        HybridPipeline(build_hybrid_stages(cache, argument), release_cache_during_running=True).run()
        assert cache.residuals == {}
        assert cache.levels == {}
        assert cache.coefficients is None
        assert cache.mixture is not None
        assert np.isfinite(cache.report.sup_error_global)
