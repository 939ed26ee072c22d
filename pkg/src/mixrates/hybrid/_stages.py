"""Stages of the hybrid cascade and the cache and arguments they share."""

__docformat__ = "restructuredtext"
__all__ = [
    "HybridArgument",
    "HybridCache",
    "HybridReportStage",
    "HybridSampleStage",
    "HybridTruncateStage",
    "LevelStage",
    "ResidualStage",
]

import math
from dataclasses import dataclass, field

import numpy as np

from mixrates._constants import (
    LOG_COEFF,
    LOG_INIT,
    LOG_RECONSTRUCT,
    LOG_RESIDUAL,
    LOG_SAMPLE,
    LOG_TRUNCATE,
)
from mixrates.custom_types import Evaluable, IntArray
from mixrates.hybrid._cascade import (
    MultiScaleCoeffs,
    cascade_step,
    level_coefficients,
    truncate_hybrid,
)
from mixrates.hybrid._plan import HybridPlan
from mixrates.kernels import DualKernelTable, GridFunction, SpectralCutoff, SpectralGrid
from mixrates.location import LatticeCoefficients
from mixrates.mixture import AnnulusError, ApproxReport, FiniteGaussMixture, mixture_on_grid
from mixrates.pipeline import Stage, StageArgument, StageCache
from mixrates.utils import sup_abs


@dataclass(frozen=True, slots=True, kw_only=True)
class HybridArgument(StageArgument):
    """
    Settings shared by the stages of one hybrid cell.

    :ivar target: Function to approximate.
    :ivar plan: Cell parameters.
    :ivar kernel: Kernel table or bare cutoff.
    :ivar bandwidth: Largest angular frequency of the target, when known.
    """

    target: Evaluable
    plan: HybridPlan
    kernel: DualKernelTable | SpectralCutoff
    bandwidth: float | None = None


@dataclass(slots=True)
class HybridCache(StageCache):
    """
    Products of the hybrid stages.

    :ivar grid: Shared grid.
    :ivar target: Target sampled on the grid.
    :ivar residuals: ``Delta_j`` by level.
    :ivar level_inputs: ``L_j`` by level.
    :ivar levels: Coefficients by level.
    :ivar coefficients: All levels, assembled.
    :ivar retained: Index set as rows ``(j, k)``.
    :ivar mixture: Truncated mixture.
    :ivar report: Final report.
    """

    grid: SpectralGrid | None = None
    target: GridFunction | None = None
    residuals: dict[int, GridFunction] = field(default_factory=dict)
    level_inputs: dict[int, GridFunction] = field(default_factory=dict)
    levels: dict[int, LatticeCoefficients] = field(default_factory=dict)
    coefficients: MultiScaleCoeffs | None = None
    retained: IntArray | None = None
    mixture: FiniteGaussMixture | None = None
    report: ApproxReport | None = None


class HybridSampleStage(Stage[HybridCache, HybridArgument]):
    """Input stage: chooses the shared grid and samples the target."""

    def run(self):
        """Sample the target."""
        grid = self.argument.plan.spectral_grid(self.argument.bandwidth)
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


class ResidualStage(Stage[HybridCache, HybridArgument]):
    """Level ``j`` of the cascade: ``L_j = chi_{sigma_j} * Delta_{j-1}`` and ``Delta_j``."""

    def __init__(self, name: str, cache: HybridCache, argument: HybridArgument, level: int):
        """
        Initialize the stage.

        :param name: Name of the stage.

        :param cache: Shared cache instance.

        :param argument: Shared arguments instance.

        :param level: Dyadic level ``j``.

        """
        super().__init__(name, cache, argument)
        self.level = level

    def run(self):
        """Split the previous residual into the level input and the next residual."""
        j = self.level
        previous = self.cache.target if j == 0 else self.cache.residuals.get(j - 1)
        if previous is None:
            raise RuntimeError(f"{self.name} needs the residual of level {j - 1}")
        level_input, residual = cascade_step(previous, 2.0**-j, self.argument.kernel)
        self.cache.level_inputs[j] = level_input
        self.cache.residuals[j] = residual
        self.log(
            LOG_RESIDUAL,
            "run",
            "split residual",
            f"residuals[{j}]",
            f"sup={residual.sup():.3e}",
        )

    def clear_cache(self):
        """Drop this level's residual and input."""
        self.cache.residuals.pop(self.level, None)
        self.cache.level_inputs.pop(self.level, None)


class LevelStage(Stage[HybridCache, HybridArgument]):
    """Coefficients of level ``j``."""

    def __init__(self, name: str, cache: HybridCache, argument: HybridArgument, level: int):
        """
        Initialize the stage.

        :param name: Name of the stage.

        :param cache: Shared cache instance.

        :param argument: Shared arguments instance.

        :param level: Dyadic level ``j``.

        """
        super().__init__(name, cache, argument)
        self.level = level

    def run(self):
        """Tabulate the level coefficients."""
        j = self.level
        level_input = self.cache.level_inputs.get(j)
        if level_input is None:
            raise RuntimeError(f"{self.name} needs the input of level {j}")
        coeffs = level_coefficients(level_input, j, self.argument.plan, self.argument.kernel)
        self.cache.levels[j] = coeffs
        self.log(LOG_COEFF, "run", "tabulate u_jk", f"levels[{j}]", f"count={len(coeffs)}")

    def clear_cache(self):
        """Drop this level's coefficients."""
        self.cache.levels.pop(self.level, None)


class HybridTruncateStage(Stage[HybridCache, HybridArgument]):
    """Fan-in of all levels: assembles the coefficients and truncates them."""

    def run(self):
        """Build the index set and the truncated mixture."""
        plan = self.argument.plan
        missing = [j for j in plan.levels if j not in self.cache.levels]
        if missing:
            raise RuntimeError(f"{self.name} is missing levels {missing}")
        coeffs = MultiScaleCoeffs(tuple(self.cache.levels[j] for j in plan.levels))
        retained, mixture = truncate_hybrid(coeffs, plan)
        self.cache.coefficients = coeffs
        self.cache.retained = retained
        self.cache.mixture = mixture
        self.log(LOG_TRUNCATE, "run", "threshold u_jk", "mixture", f"|Lambda|={len(mixture)}")

    def clear_cache(self):
        """Drop the assembled coefficients."""
        self.cache.coefficients = None


class HybridReportStage(Stage[HybridCache, HybridArgument]):
    """Output stage: global, core and per-annulus errors."""

    def run(self):
        """Measure the errors and write the report."""
        cache = self.cache
        if cache.mixture is None or cache.coefficients is None or cache.target is None:
            raise RuntimeError(f"{self.name} needs the mixture, coefficients and target")
        plan = self.argument.plan
        grid = cache.grid
        truncated = mixture_on_grid(cache.mixture, grid)
        full = mixture_on_grid(cache.coefficients.reconstruct(), grid)
        target = cache.target.values
        error = np.abs(truncated - target)
        distance = np.abs(grid.points)
        core = distance <= plan.zeta(plan.J)

        annuli = []
        for j in plan.levels:
            outer = plan.zeta(j)
            inner = plan.zeta(j + 1) if j < plan.J else 0.0
            inside = distance <= outer
            if j < plan.J:
                inside &= distance > inner
            sup_error = float(np.max(error[inside])) if np.any(inside) else math.nan
            annuli.append(
                AnnulusError(
                    level=j,
                    inner=inner,
                    outer=outer,
                    sup_error=sup_error,
                    normalized_error=sup_error / plan.sigma(j) ** plan.beta,
                    atoms_at_level=int(np.count_nonzero(cache.mixture.scales == plan.sigma(j))),
                )
            )

        cache.report = ApproxReport(
            mixture=cache.mixture,
            lambda_size=len(cache.mixture),
            sup_error_core=sup_abs(error[core]),
            sup_error_global=sup_abs(error),
            coeff_l1=cache.coefficients.l1,
            coeff_max=cache.coefficients.max_abs,
            coeff_count=len(cache.coefficients),
            retained_l1=cache.mixture.total_variation,
            untruncated_error=sup_abs((full - target)[core]),
            truncation_gap=sup_abs((full - truncated)[core]),
            core_radius=plan.zeta(plan.J),
            grid_spacing=grid.spacing,
            grid_radius=grid.radius,
            annuli=tuple(annuli),
        )
        self.log(
            LOG_RECONSTRUCT,
            "run",
            "evaluate mixture",
            "report",
            f"core={cache.report.sup_error_core:.3e}, annuli={len(annuli)}",
        )

    def clear_cache(self):
        """The output stage keeps its report."""
        self.log(LOG_INIT, "clear_cache", "keep", "report")
