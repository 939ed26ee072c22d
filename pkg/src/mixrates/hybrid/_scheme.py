"""Hybrid cascade as a stage pipeline."""

__docformat__ = "restructuredtext"
__all__ = ["HybridPipeline", "build_hybrid_stages", "hybrid_approx"]

from mixrates.custom_types import Evaluable
from mixrates.hybrid._plan import HybridPlan
from mixrates.hybrid._stages import (
    HybridArgument,
    HybridCache,
    HybridReportStage,
    HybridSampleStage,
    HybridTruncateStage,
    LevelStage,
    ResidualStage,
)
from mixrates.kernels import DualKernelTable, SpectralCutoff
from mixrates.mixture import ApproxReport
from mixrates.pipeline import Pipeline, Stage, link


def build_hybrid_stages(
    cache: HybridCache, argument: HybridArgument
) -> list[Stage[HybridCache, HybridArgument]]:
    """
    Build and link the hybrid stages.

    ``Sample -> Residual_0 -> ... -> Residual_J`` is the cascade; each ``Residual_j`` feeds
    ``Level_j``, all levels fan in to ``Truncate``, and ``Truncate`` and ``Sample`` feed
    ``Report``.

    :param cache: Shared cache.

    :param argument: Shared arguments.

    :return: The stages, in construction order.
    """
    sample = HybridSampleStage("Sample", cache, argument)
    truncate = HybridTruncateStage("Truncate", cache, argument)
    report = HybridReportStage("Report", cache, argument)
    stages: list[Stage[HybridCache, HybridArgument]] = [sample]
    previous: Stage[HybridCache, HybridArgument] = sample
    for j in argument.plan.levels:
        residual = ResidualStage(f"Residual_{j}", cache, argument, j)
        level = LevelStage(f"Level_{j}", cache, argument, j)
        link(previous, residual)
        link(residual, level)
        link(level, truncate)
        stages.extend([residual, level])
        previous = residual
    link(truncate, report)
    link(sample, report)
    stages.extend([truncate, report])
    return stages


class HybridPipeline(Pipeline):
    """Pipeline producing the multi-scale :class:`ApproxReport` of one hybrid cell."""

    @property
    def report(self) -> ApproxReport:
        """
        Get the report written by the output stage.

        :return: The report.
        :raises RuntimeError: If the pipeline has not run.

        """
        cache = self.cache
        if not isinstance(cache, HybridCache) or cache.report is None:
            raise RuntimeError("HybridPipeline has not been run")
        return cache.report


def hybrid_approx(
    f0: Evaluable,
    plan: HybridPlan,
    kernel: DualKernelTable | SpectralCutoff,
    bandwidth: float | None = None,
    verbose: bool = False,
) -> ApproxReport:
    """
    Approximate ``f0`` by a multi-scale mixture and measure errors per annulus.

    :param f0: Integrable target.

    :param plan: Cell parameters.

    :param kernel: Kernel table or bare cutoff.

    :param bandwidth: Largest angular frequency of ``f0``, when known; refines the grid.

    :param verbose: Print one line per stage action.

    :return: The report, with one :class:`AnnulusError` per level.
    :raises WindowError: If a capped window cuts through significant coefficients.

    """
    cache = HybridCache()
    argument = HybridArgument(
        verbose=verbose, target=f0, plan=plan, kernel=kernel, bandwidth=bandwidth
    )
    pipeline = HybridPipeline(
        build_hybrid_stages(cache, argument),
        verbose=verbose,
        release_cache_during_running=True,
    )
    pipeline.run()
    return pipeline.report
