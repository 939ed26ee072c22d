"""
Random measures behind the mixture priors.

Symmetric Gamma processes are simulated exactly above a jump floor; scale priors are
inverse-Gaussian laws or Dirichlet processes over them; location base measures are a
fixed Pareto-tailed law or a kernel smoothing of the covariates. :func:`sample_prior`
composes them into draws of the location, location-scale and hybrid mixture priors.
"""

__docformat__ = "restructuredtext"

from mixrates.priors._dirichlet import (
    DiscreteScaleMeasure,
    MarkovCheck,
    OmegaGrowth,
    dp_markov_check,
    dp_omega_lower_bound,
    fit_omega_growth,
    omega_cells,
    sample_dp,
    sample_dp_batch,
)
from mixrates.priors._location_base import ContinuousLaw, LocationBaseSpec, covariate_base
from mixrates.priors._prior import PriorDraw, sample_prior
from mixrates.priors._scale import (
    InverseGaussian,
    ScaleDistribution,
    ScalePriorSpec,
    TailReport,
    inverse_gaussian_ops,
    tail_report,
)
from mixrates.priors._sga import (
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

__all__ = [
    "ContinuousLaw",
    "DiscreteScaleMeasure",
    "InverseGaussian",
    "LocationBaseSpec",
    "MarkovCheck",
    "OmegaGrowth",
    "PriorDraw",
    "ScaleDistribution",
    "ScalePriorSpec",
    "SignedAtomMeasure",
    "TailReport",
    "covariate_base",
    "dp_markov_check",
    "dp_omega_lower_bound",
    "fit_omega_growth",
    "invert_levy_tail",
    "inverse_gaussian_ops",
    "jump_count_mean",
    "lump_gamma_params",
    "omega_cells",
    "sample_dp",
    "sample_dp_batch",
    "sample_jump_magnitudes",
    "sample_prior",
    "sample_sga",
    "sample_sga_process",
    "sga_small_ball_bound",
    "simulate_total_variation",
    "tail_report",
]
