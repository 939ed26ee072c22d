"""Stages of the location scheme and the cache and arguments they share."""

__docformat__ = "restructuredtext"
__all__ = [
    "CoefficientStage",
    "LocationArgument",
    "LocationCache",
    "ReconstructStage",
    "SampleStage",
    "SmoothStage",
    "TruncateStage",
]

from dataclasses import dataclass

import numpy as np

from mixrates._constants import (
    LOG_COEFF,
    LOG_INIT,
    LOG_RECONSTRUCT,
    LOG_SAMPLE,
    LOG_SMOOTH,
    LOG_TRUNCATE,
)
from mixrates.custom_types import Evaluable, IntArray
from mixrates.kernels import DualKernelTable, GridFunction, SpectralCutoff, SpectralGrid
from mixrates.location._coefficients import (
    LatticeCoefficients,
    coefficients,
    reconstruct,
    smooth,
    truncate_location,
)
from mixrates.location._plan import LocationPlan
from mixrates.mixture import ApproxReport, FiniteGaussMixture, mixture_on_grid
from mixrates.pipeline import Stage, StageArgument, StageCache
from mixrates.utils import sup_abs


@dataclass(frozen=True, slots=True, kw_only=True)
class LocationArgument(StageArgument):
    """
    Settings shared by the stages of one location cell.

    :ivar target: Function to approximate.
    :ivar plan: Cell parameters.
    :ivar kernel: Kernel table or bare cutoff.
    :ivar bandwidth: Largest angular frequency of the target, when known.
    """

    target: Evaluable
    plan: LocationPlan
    kernel: DualKernelTable | SpectralCutoff
    bandwidth: float | None = None


@dataclass(slots=True)
class LocationCache(StageCache):
    """
    Products of the location stages.

    :ivar grid: Scheme grid.
    :ivar target: Target sampled on the grid.
    :ivar smoothed: ``chi_sigma * f0`` on the grid.
    :ivar coefficients: Coefficients on the full window.
    :ivar retained: Index set.
    :ivar mixture: Truncated mixture.
    :ivar report: Final report.
    """

    grid: SpectralGrid | None = None
    target: GridFunction | None = None
    smoothed: GridFunction | None = None
    coefficients: LatticeCoefficients | None = None
    retained: IntArray | None = None
    mixture: FiniteGaussMixture | None = None
    report: ApproxReport | None = None


class SampleStage(Stage[LocationCache, LocationArgument]):
    """Input stage: chooses the grid and samples the target on it."""

    def run(self):
        """Sample the target."""
        plan = self.argument.plan
        grid = plan.spectral_grid(self.argument.bandwidth)
        self.cache.grid = grid
        self.cache.target = GridFunction.sample(self.argument.target, grid)
        self.log(
            LOG_SAMPLE,
            "run",
            "sample target",
            "target",
            f"nodes={grid.size}, spacing={grid.spacing:.3g}",
        )

    def clear_cache(self):
        """Drop the sampled target."""
        self.cache.target = None


class SmoothStage(Stage[LocationCache, LocationArgument]):
    """Convolves the sampled target with ``chi_sigma``."""

    def run(self):
        """Smooth the target."""
        if self.cache.target is None:
            raise RuntimeError(f"{self.name} needs the sampled target")
        sigma = self.argument.plan.sigma
        self.cache.smoothed = smooth(self.cache.target, sigma, self.argument.kernel)
        self.log(LOG_SMOOTH, "run", "convolve chi_sigma", "smoothed", f"sigma={sigma:.4g}")

    def clear_cache(self):
        """Drop the smoothed target."""
        self.cache.smoothed = None


class CoefficientStage(Stage[LocationCache, LocationArgument]):
    """Reads the lattice coefficients off the coefficient field."""

    def run(self):
        """Tabulate the coefficients on the plan window."""
        if self.cache.smoothed is None:
            raise RuntimeError(f"{self.name} needs the smoothed target")
        plan = self.argument.plan
        self.cache.coefficients = coefficients(
            self.cache.smoothed,
            plan.h,
            plan.sigma,
            self.argument.kernel,
            k_range=plan.k_range,
            boundary_threshold=plan.threshold / 10.0 if plan.capped else None,
        )
        self.log(
            LOG_COEFF,
            "run",
            "tabulate u_k",
            "coefficients",
            f"count={len(self.cache.coefficients)}, h={plan.h:.4g}",
        )

    def clear_cache(self):
        """Drop the full coefficient table."""
        self.cache.coefficients = None


class TruncateStage(Stage[LocationCache, LocationArgument]):
    """Restricts the coefficients to the index set."""

    def run(self):
        """Build the index set and the truncated mixture."""
        if self.cache.coefficients is None:
            raise RuntimeError(f"{self.name} needs the coefficients")
        retained, mixture = truncate_location(self.cache.coefficients, self.argument.plan)
        self.cache.retained = retained
        self.cache.mixture = mixture
        self.log(LOG_TRUNCATE, "run", "threshold u_k", "mixture", f"|Lambda|={retained.size}")

    def clear_cache(self):
        """Keep the mixture; the report refers to it."""
        self.cache.retained = None


class ReconstructStage(Stage[LocationCache, LocationArgument]):
    """Output stage: evaluates both reconstructions and assembles the report."""

    def run(self):
        """Measure the errors and write the report."""
        cache = self.cache
        if cache.mixture is None or cache.coefficients is None or cache.target is None:
            raise RuntimeError(f"{self.name} needs the mixture, coefficients and target")
        plan = self.argument.plan
        grid = cache.grid
        truncated = mixture_on_grid(cache.mixture, grid)
        full = mixture_on_grid(reconstruct(cache.coefficients), grid)
        target = cache.target.values
        core = np.abs(grid.points) <= plan.core_radius

        cache.report = ApproxReport(
            mixture=cache.mixture,
            lambda_size=len(cache.mixture),
            sup_error_core=sup_abs((truncated - target)[core]),
            sup_error_global=sup_abs(truncated - target),
            coeff_l1=cache.coefficients.l1,
            coeff_max=cache.coefficients.max_abs,
            coeff_count=len(cache.coefficients),
            retained_l1=cache.mixture.total_variation,
            untruncated_error=sup_abs((full - target)[core]),
            truncation_gap=sup_abs((full - truncated)[core]),
            core_radius=plan.core_radius,
            grid_spacing=grid.spacing,
            grid_radius=grid.radius,
        )
        self.log(
            LOG_RECONSTRUCT,
            "run",
            "evaluate mixture",
            "report",
            f"core={cache.report.sup_error_core:.3e}, global={cache.report.sup_error_global:.3e}",
        )

    def clear_cache(self):
        """The output stage keeps its report."""
        self.log(LOG_INIT, "clear_cache", "keep", "report")
