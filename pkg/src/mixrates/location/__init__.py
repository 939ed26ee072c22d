"""
Single-scale location mixtures.

A target is smoothed by ``chi_sigma``, expanded on the lattice ``h sigma Z`` with
coefficients from the dual kernel ``eta``, and truncated to the index set of large
coefficients inside the location window.
"""

__docformat__ = "restructuredtext"

from mixrates.location._coefficients import (
    LatticeCoefficients,
    coefficients,
    covariate_index_set,
    reconstruct,
    smooth,
    truncate_location,
)
from mixrates.location._diagnostics import (
    LocationCells,
    alias_error,
    alias_slope,
    coefficient_constants,
    diagnostic_radius,
    lambda_bound,
    location_cells,
    reconstruction_error,
    truncation_scale,
)
from mixrates.location._plan import LocationPlan
from mixrates.location._scheme import LocationPipeline, build_location_stages, location_approx
from mixrates.location._stages import (
    CoefficientStage,
    LocationArgument,
    LocationCache,
    ReconstructStage,
    SampleStage,
    SmoothStage,
    TruncateStage,
)

__all__ = [
    "CoefficientStage",
    "LatticeCoefficients",
    "LocationArgument",
    "LocationCache",
    "LocationCells",
    "LocationPipeline",
    "LocationPlan",
    "ReconstructStage",
    "SampleStage",
    "SmoothStage",
    "TruncateStage",
    "alias_error",
    "alias_slope",
    "build_location_stages",
    "coefficient_constants",
    "coefficients",
    "covariate_index_set",
    "diagnostic_radius",
    "lambda_bound",
    "location_approx",
    "location_cells",
    "reconstruct",
    "reconstruction_error",
    "smooth",
    "truncate_location",
    "truncation_scale",
]
