"""
Finite signed Gaussian mixtures.

Every scheme produces a :class:`FiniteGaussMixture` ``sum_i u_i phi((x - mu_i) / sigma_i)``
with ``phi(x) = exp(-x^2 / 2)``; errors are grid sups on an explicit grid and are
collected in an :class:`ApproxReport`.
"""

__docformat__ = "restructuredtext"

from mixrates.mixture._distance import (
    EvalGrid,
    bump_sup_difference,
    empirical_l2,
    gaussian_perturbation_bound,
    grid_sup,
)
from mixrates.mixture._mixture import (
    FiniteGaussMixture,
    GaussAtom,
    eval_mixture,
    mixture_on_grid,
)
from mixrates.mixture._report import AnnulusError, ApproxReport

__all__ = [
    "AnnulusError",
    "ApproxReport",
    "EvalGrid",
    "FiniteGaussMixture",
    "GaussAtom",
    "bump_sup_difference",
    "empirical_l2",
    "eval_mixture",
    "gaussian_perturbation_bound",
    "grid_sup",
    "mixture_on_grid",
]
