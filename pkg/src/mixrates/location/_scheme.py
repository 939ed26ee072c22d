"""Location scheme as a stage pipeline."""

__docformat__ = "restructuredtext"
__all__ = ["LocationPipeline", "build_location_stages", "location_approx"]

from mixrates.custom_types import Evaluable
from mixrates.kernels import DualKernelTable, SpectralCutoff
from mixrates.location._plan import LocationPlan
from mixrates.location._stages import (
    CoefficientStage,
    LocationArgument,
    LocationCache,
    ReconstructStage,
    SampleStage,
    SmoothStage,
    TruncateStage,
)
from mixrates.mixture import ApproxReport
from mixrates.pipeline import Pipeline, Stage, link


def build_location_stages(
    cache: LocationCache, argument: LocationArgument
) -> list[Stage[LocationCache, LocationArgument]]:
    """
    Build and link the location stages.

    ``Sample -> Smooth -> Coeff -> Truncate -> Reconstruct``, with the sampled target and
    the full coefficient table also feeding ``Reconstruct``.

    :param cache: Shared cache.

    :param argument: Shared arguments.

    :return: The stages, in construction order.
    """
    sample = SampleStage("Sample", cache, argument)
    smoothing = SmoothStage("Smooth", cache, argument)
    coeff = CoefficientStage("Coeff", cache, argument)
    truncate = TruncateStage("Truncate", cache, argument)
    rebuild = ReconstructStage("Reconstruct", cache, argument)
    link(sample, smoothing)
    link(smoothing, coeff)
    link(coeff, truncate)
    link(truncate, rebuild)
    link(sample, rebuild)
    link(coeff, rebuild)
    return [sample, smoothing, coeff, truncate, rebuild]


class LocationPipeline(Pipeline):
    """Pipeline producing the :class:`ApproxReport` of one location cell."""

    @property
    def report(self) -> ApproxReport:
        """
        Get the report written by the output stage.

        :return: The report.
        :raises RuntimeError: If the pipeline has not run.

        """
        cache = self.cache
        if not isinstance(cache, LocationCache) or cache.report is None:
            raise RuntimeError("LocationPipeline has not been run")
        return cache.report


def location_approx(
    f0: Evaluable,
    plan: LocationPlan,
    kernel: DualKernelTable | SpectralCutoff,
    bandwidth: float | None = None,
    verbose: bool = False,
) -> ApproxReport:
    """
    Approximate ``f0`` by a location mixture at one scale and measure the errors.

    Runs smoothing, coefficient extraction, truncation to the index set and
    reconstruction, then reports grid sups on the core region ``|x| <= sigma^(-2 beta / p)``
    and on the whole grid.

    :param f0: Integrable target.

    :param plan: Cell parameters.

    :param kernel: Kernel table or bare cutoff.

    :param bandwidth: Largest angular frequency of ``f0``, when known; refines the grid.

    :param verbose: Print one line per stage action.

    :return: The report.
    :raises QuadratureError: If the grid cannot carry the smoothed spectrum.
    :raises WindowError: If the capped window cuts through significant coefficients.

    """
    cache = LocationCache()
    argument = LocationArgument(
        verbose=verbose, target=f0, plan=plan, kernel=kernel, bandwidth=bandwidth
    )
    pipeline = LocationPipeline(
        build_location_stages(cache, argument),
        verbose=verbose,
        release_cache_during_running=True,
    )
    pipeline.run()
    return pipeline.report
