"""Pipeline of stages sharing one cache and one argument object."""

__docformat__ = "restructuredtext"
__all__ = ["Pipeline", "release_stage_cache"]

from abc import ABC
from collections.abc import Sequence
from typing import Literal

from mixrates._constants import LOG_CLEAR
from mixrates.custom_types import StageType
from mixrates.pipeline._arguments import StageArgument
from mixrates.pipeline._cache import StageCache
from mixrates.pipeline._sort import topo_sort_bfs, topo_sort_dfs


def release_stage_cache(
    cache_counter: dict[StageType, int], stages: Sequence[StageType], verbose: bool = False
):
    """
    Release cached products of stages that are no longer needed.

    Decrements the counter of each stage and clears its products once no successor is
    left waiting for them.

    :param cache_counter: Number of successors that still need each stage's products.

    :param stages: Stages whose counters to decrement.

    :param verbose: Print one line per released stage.

    """
    for stage in set(stages):  # A stage may appear twice among the predecessors
        cache_counter[stage] -= 1
        if cache_counter[stage] <= 0:  # The output stage ends at -1
            if verbose:
                print(f"{LOG_CLEAR} {stage.name}.clear_cache() | release -> cache[{stage.name}]")
            stage.clear_cache()
            del cache_counter[stage]


class Pipeline(ABC):
    """
    Template for a stage pipeline.

    All stages share the same cache and the same frozen arguments; their ``run``
    methods read from and write to this cache. There is no nesting of pipelines.
    Concrete pipelines read their result from the cache after :meth:`run`.
    """

    _stages: list[StageType]
    _sort_strategy: Literal["dfs", "bfs"]
    _cache: StageCache
    _arguments: StageArgument

    verbose: bool
    release_cache_during_running: bool

    def __init__(
        self,
        stages: Sequence[StageType],
        sort_strategy: Literal["dfs", "bfs"] = "bfs",
        verbose: bool = False,
        release_cache_during_running: bool = False,
    ):
        """
        Initialize a pipeline.

        :param stages: Stages to include, already linked.

        :param sort_strategy: ``"bfs"`` or ``"dfs"`` topological order.

        :param verbose: Print the execution order.

        :param release_cache_during_running: Drop a stage's products once all of its
            successors have run.

        :raises ValueError: If the strategy is unknown, the graph is cyclic, there is not
            exactly one input and one output stage, or the stages disagree on their
            cache or arguments.

        """
        if len(stages) == 0:
            raise ValueError("Pipeline needs at least one stage, got none.")
        self.verbose = verbose
        self.release_cache_during_running = release_cache_during_running
        self._sort_strategy = sort_strategy
        if sort_strategy == "dfs":
            self._stages = topo_sort_dfs(stages, self.verbose)
        elif sort_strategy == "bfs":
            self._stages = topo_sort_bfs(stages, self.verbose)
        else:
            raise ValueError(f"Unknown sort strategy: {sort_strategy}")

        input_stages = [stage for stage in self._stages if len(stage.pre_stages) == 0]
        output_stages = [stage for stage in self._stages if len(stage.next_stages) == 0]

        if len(input_stages) == 0:
            raise ValueError(
                "Pipeline must have exactly one input stage, but found zero. "
                "No stage has zero predecessors."
            )
        if len(input_stages) > 1:
            raise ValueError(
                f"Pipeline must have exactly one input stage, but found {len(input_stages)} "
                f"multiple input stages: {[s.name for s in input_stages]}"
            )
        if len(output_stages) == 0:
            raise ValueError(
                "Pipeline must have exactly one output stage, but found zero. "
                "No stage has zero successors."
            )
        if len(output_stages) > 1:
            raise ValueError(
                f"Pipeline must have exactly one output stage, but found {len(output_stages)} "
                f"multiple output stages: {[s.name for s in output_stages]}"
            )

        self._cache = stages[0].cache
        self._arguments = stages[0].argument
        for stage in stages[1:]:
            if stage.cache is not self._cache:
                raise ValueError(f"Stage {stage.name} does not share the pipeline cache.")
            if stage.argument is not self._arguments:
                raise ValueError(f"Stage {stage.name} does not share the pipeline arguments.")

    def run(self):
        """
        Execute all stages in topological order.

        With ``release_cache_during_running`` set, the products of a stage are released
        as soon as every successor has consumed them; the output stage keeps its own.
        """
        cache_counter = {stage: len(stage.next_stages) for stage in self._stages}

        for stage in self._stages:
            if self.verbose:
                print(f"Running stage {stage.name}")
            stage.run()
            if self.release_cache_during_running:
                release_stage_cache(cache_counter, stage.pre_stages, self.verbose)

    @property
    def sort_strategy(self):
        """
        Get the sorting strategy used in the pipeline.

        :return: Sorting strategy (either 'dfs' or 'bfs').
        """
        return self._sort_strategy

    @property
    def stages(self) -> list[StageType]:
        """
        Get the stages in execution order.

        :return: Topologically sorted list of stages.
        """
        return self._stages

    @property
    def cache(self) -> StageCache:
        """
        Get the shared cache for the pipeline.

        :return: Cache instance shared by all stages.
        """
        return self._cache

    @property
    def arguments(self) -> StageArgument:
        """
        Get the shared arguments for the pipeline.

        :return: Arguments instance shared by all stages.
        """
        return self._arguments
