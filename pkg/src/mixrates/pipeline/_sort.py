"""Topological sorting of pipeline stages."""

__docformat__ = "restructuredtext"
__all__ = ["topo_sort_bfs", "topo_sort_dfs"]

from collections import deque
from collections.abc import Sequence

from mixrates._constants import CYCLE_ERROR_MSG
from mixrates.custom_types import StageType


def _report_endpoints(stages: Sequence[StageType], verbose: bool = False):
    """
    Print how many input and output stages the pipeline has.

    :param stages: Stages of the pipeline.

    :param verbose: Whether to print diagnostics.

    """
    if not verbose:
        return
    n_inputs = sum(1 for stage in stages if len(stage.pre_stages) == 0)
    n_outputs = sum(1 for stage in stages if len(stage.next_stages) == 0)
    print(f"The pipeline has {n_inputs} inputs and {n_outputs} outputs.")


def topo_sort_dfs(stages: Sequence[StageType], verbose: bool = False) -> list[StageType]:
    """
    Sort stages in topological order by depth-first search.

    Depth-first order finishes one branch before starting the next, so a product
    consumed only by that branch is released early.

    :param stages: Stages to sort.

    :param verbose: Whether to print diagnostics.

    :return: Topologically sorted list of stages.
    :raises ValueError: If the pipeline contains a cycle.

    """
    _report_endpoints(stages, verbose)

    visited = set()
    temp_mark = set()
    sorted_stages = []

    def dfs(stage):
        if stage in temp_mark:
            raise ValueError(CYCLE_ERROR_MSG)
        if stage not in visited:
            temp_mark.add(stage)
            for next_stage in stage.next_stages:
                dfs(next_stage)
            temp_mark.remove(stage)
            visited.add(stage)
            sorted_stages.append(stage)

    for stage in stages:
        if len(stage.pre_stages) == 0:
            dfs(stage)

    if len(sorted_stages) != len(stages):
        raise ValueError(CYCLE_ERROR_MSG)

    return sorted_stages[::-1]


def topo_sort_bfs(stages: Sequence[StageType], verbose: bool = False) -> list[StageType]:
    """
    Sort stages in topological order by breadth-first search (Kahn's algorithm).

    :param stages: Stages to sort.

    :param verbose: Whether to print diagnostics.

    :return: Topologically sorted list of stages.
    :raises ValueError: If the pipeline contains a cycle.

    """
    _report_endpoints(stages, verbose)

    # Unique predecessors: a stage may list the same upstream product twice.
    in_degrees: dict[StageType, int] = {stage: len(set(stage.pre_stages)) for stage in stages}

    queue: deque[StageType] = deque(stage for stage in stages if in_degrees[stage] == 0)
    sorted_stages: list[StageType] = []
    while queue:
        stage = queue.popleft()
        sorted_stages.append(stage)
        for next_stage in stage.next_stages:
            in_degrees[next_stage] -= 1
            if in_degrees[next_stage] == 0:
                queue.append(next_stage)

    if len(sorted_stages) != len(stages):
        raise ValueError(CYCLE_ERROR_MSG)

    return sorted_stages
