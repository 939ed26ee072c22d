"""Diagnostics produced by one approximation cell."""

__docformat__ = "restructuredtext"
__all__ = ["AnnulusError", "ApproxReport"]

import math
from dataclasses import dataclass, field

from mixrates.mixture._mixture import FiniteGaussMixture


@dataclass(frozen=True, slots=True)
class AnnulusError:
    """
    Error of a multi-scale approximation on one annulus ``zeta_{j+1} < |x| <= zeta_j``.

    The innermost annulus (``j = J``) is the full interval ``|x| <= zeta_J``.

    :ivar level: Level ``j``.
    :ivar inner: Inner radius (0 for the innermost annulus).
    :ivar outer: Outer radius ``zeta_j``.
    :ivar sup_error: Grid sup of the error, NaN when no grid point falls inside.
    :ivar normalized_error: ``sup_error / sigma_j ** beta``.
    :ivar atoms_at_level: Retained atoms with scale ``sigma_j``.
    """

    level: int
    inner: float
    outer: float
    sup_error: float
    normalized_error: float
    atoms_at_level: int


@dataclass(frozen=True, slots=True, eq=False)
class ApproxReport:
    """
    Mixture and error diagnostics for one ``(sigma or J, beta, p)`` cell.

    :ivar mixture: Truncated mixture ``f_M``.
    :ivar lambda_size: Number of retained coefficients ``|Lambda|``.
    :ivar sup_error_core: Grid sup of ``|f_M - f0|`` on the core region.
    :ivar sup_error_global: Grid sup of ``|f_M - f0|`` on the whole grid.
    :ivar coeff_l1: Sum of ``|u_k|`` over all tabulated coefficients.
    :ivar coeff_max: Largest ``|u_k|`` over all tabulated coefficients.
    :ivar coeff_count: Number of tabulated coefficients.
    :ivar retained_l1: Sum of ``|u_k|`` over ``Lambda``.
    :ivar untruncated_error: Core grid sup of the full-window reconstruction error.
    :ivar truncation_gap: Core grid sup of ``|full - truncated|`` reconstruction.
    :ivar core_radius: Radius of the core region.
    :ivar grid_spacing: Spacing of the evaluation grid.
    :ivar grid_radius: Half width of the evaluation grid.
    :ivar annuli: Per-annulus errors for multi-scale schemes.
    """

    mixture: FiniteGaussMixture
    lambda_size: int
    sup_error_core: float
    sup_error_global: float
    coeff_l1: float
    coeff_max: float
    coeff_count: int
    retained_l1: float
    untruncated_error: float
    truncation_gap: float
    core_radius: float
    grid_spacing: float
    grid_radius: float
    annuli: tuple[AnnulusError, ...] = field(default=())

    def __post_init__(self):
        """Validate counts and error signs."""
        if not 0 <= self.lambda_size <= self.coeff_count:
            raise ValueError(
                f"lambda_size must lie in [0, {self.coeff_count}], got {self.lambda_size}"
            )
        for name in ("sup_error_core", "sup_error_global", "coeff_l1", "truncation_gap"):
            value = getattr(self, name)
            if not (value >= 0.0 or math.isnan(value)):
                raise ValueError(f"{name} must be nonnegative, got {value}")
