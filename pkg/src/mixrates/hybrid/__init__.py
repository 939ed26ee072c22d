"""
Multi-scale hybrid mixtures.

The target is split by a dyadic cascade of residuals; level ``j`` is expanded at scale
``2^-j`` and truncated to a window ``zeta_j`` that shrinks towards the centre, so that
accuracy is spent where the design puts its mass.
"""

__docformat__ = "restructuredtext"

from mixrates.hybrid._cascade import (
    MultiScaleCoeffs,
    cascade_step,
    hybrid_coefficients,
    level_coefficients,
    level_inputs,
    residual_cascade,
    telescoping_deviation,
    truncate_hybrid,
)
from mixrates.hybrid._diagnostics import (
    HybridCells,
    annulus_spread,
    annulus_trend,
    hybrid_cells,
    hybrid_lambda_bound,
    mass_bound,
)
from mixrates.hybrid._plan import HybridPlan
from mixrates.hybrid._scheme import HybridPipeline, build_hybrid_stages, hybrid_approx
from mixrates.hybrid._stages import (
    HybridArgument,
    HybridCache,
    HybridReportStage,
    HybridSampleStage,
    HybridTruncateStage,
    LevelStage,
    ResidualStage,
)

__all__ = [
    "HybridArgument",
    "HybridCache",
    "HybridCells",
    "HybridPipeline",
    "HybridPlan",
    "HybridReportStage",
    "HybridSampleStage",
    "HybridTruncateStage",
    "LevelStage",
    "MultiScaleCoeffs",
    "ResidualStage",
    "annulus_spread",
    "annulus_trend",
    "build_hybrid_stages",
    "cascade_step",
    "hybrid_approx",
    "hybrid_cells",
    "hybrid_coefficients",
    "hybrid_lambda_bound",
    "level_coefficients",
    "level_inputs",
    "mass_bound",
    "residual_cascade",
    "telescoping_deviation",
    "truncate_hybrid",
]
