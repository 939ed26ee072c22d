"""
mixrates: constructive Gaussian mixture approximations and their prior machinery.

Main components:
- pipeline: stage DAG engine shared by the approximation schemes
- kernels: spectral cutoff ``chi``, dual kernel ``eta`` and their space tables
- mixture: finite signed Gaussian mixtures, evaluation grids and error reports
- location: single-scale location scheme
- hybrid: multi-scale hybrid scheme over a dyadic residual cascade
- priors: symmetric Gamma processes, scale priors and prior draws
- sieve: sieves, explicit nets and complement mass estimates
- rates: posterior contraction rate exponents and tables
- harness: catalogs, sweeps, validators and the command line
"""

__docformat__ = "restructuredtext"

__version__ = "2026.10.0"

from mixrates import pipeline
from mixrates._enums import LocationBaseKind, MixtureKind, ScalePriorKind, SmallJumpPolicy
from mixrates._errors import QuadratureError, WindowError
from mixrates.hybrid import HybridPlan, hybrid_approx
from mixrates.kernels import build_cutoff, invert_to_space
from mixrates.location import LocationPlan, location_approx
from mixrates.mixture import ApproxReport, FiniteGaussMixture
from mixrates.priors import sample_prior
from mixrates.rates import RateSpec, rate_exponent, render_table

__all__ = [
    "ApproxReport",
    "FiniteGaussMixture",
    "HybridPlan",
    "LocationBaseKind",
    "LocationPlan",
    "MixtureKind",
    "QuadratureError",
    "RateSpec",
    "ScalePriorKind",
    "SmallJumpPolicy",
    "WindowError",
    "__version__",
    "build_cutoff",
    "hybrid_approx",
    "invert_to_space",
    "location_approx",
    "pipeline",
    "rate_exponent",
    "render_table",
    "sample_prior",
]
