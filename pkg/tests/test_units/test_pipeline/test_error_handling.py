"""
Test suite for pipeline construction errors.

Validates that:
1. Graphs without exactly one input and one output stage raise ValueError.
2. Cycles are detected by both sort strategies.
3. Stages must share the pipeline cache and arguments.
4. Unknown sort strategies and empty stage lists are rejected.
5. Stages that do not override ``run`` or ``clear_cache`` raise RuntimeError.
"""

__docformat__ = "restructuredtext"

import pytest

from mixrates.pipeline import Pipeline, StageArgument, link
from test_pipeline._helpers import (
    BareStage,
    RecordingCache,
    SumStage,
    build_graph,
    build_pipeline,
)

_INVALID_IO_CASES = [
    ([("A", "C"), ("B", "C")], r"exactly one input stage.*multiple"),
    ([("A", "B"), ("A", "C")], r"exactly one output stage.*multiple"),
]
_CYCLE_CASES = [
    [("A", "B"), ("B", "C"), ("C", "B"), ("C", "D")],
    [("A", "B"), ("B", "A")],
    [("A", "B"), ("B", "C"), ("C", "A")],
]


class TestInputOutputConstraints:
    """Pipelines need exactly one input and one output stage."""

    @pytest.mark.parametrize(("edges", "match"), _INVALID_IO_CASES)
    def test_invalid_endpoints(self, edges, match, sort_strategy):
        """Multiple inputs or outputs are named in the error."""
        stages = build_graph(edges)
        with pytest.raises(ValueError, match=match):
            Pipeline(list(stages.values()), sort_strategy=sort_strategy)


class TestCycleDetection:
    """Both strategies detect cycles."""

    @pytest.mark.parametrize("edges", _CYCLE_CASES)
    def test_cycle_is_detected(self, edges, sort_strategy):
        """Cyclic graphs fail during sorting."""
        stages = build_graph(edges)
        with pytest.raises(ValueError, match=r"cycle"):
            Pipeline(list(stages.values()), sort_strategy=sort_strategy)


class TestSharedState:
    """All stages share one cache and one argument object."""

    def test_foreign_cache_rejected(self):
        """A stage with its own cache is named."""
        argument = StageArgument()
        first = SumStage("A", RecordingCache(), argument)
        second = SumStage("B", RecordingCache(), argument)
        link(first, second)
        with pytest.raises(ValueError, match=r"Stage B does not share the pipeline cache"):
            Pipeline([first, second])

    def test_foreign_arguments_rejected(self, recording_cache):
        """A stage with its own arguments is named."""
        first = SumStage("A", recording_cache, StageArgument())
        second = SumStage("B", recording_cache, StageArgument(verbose=True))
        link(first, second)
        with pytest.raises(ValueError, match=r"Stage B does not share the pipeline arguments"):
            Pipeline([first, second])


class TestInvalidSettings:
    """Invalid settings fail at construction."""

    def test_unknown_sort_strategy(self):
        """Only bfs and dfs are accepted."""
        with pytest.raises(ValueError, match=r"Unknown sort strategy: random"):
            build_pipeline("chain", sort_strategy="random")

    def test_empty_pipeline(self):
        """A pipeline needs at least one stage."""
        with pytest.raises(ValueError, match=r"at least one stage"):
            Pipeline([])


class TestAbstractStage:
    """The base stage refuses to run."""

    def test_run_not_implemented(self, recording_cache):
        """``run`` names the concrete class."""
        stage = BareStage("X", recording_cache, StageArgument())
        with pytest.raises(RuntimeError, match=r"instantiated in BareStage"):
            stage.run()

    def test_clear_cache_not_implemented(self, recording_cache):
        """``clear_cache`` names the concrete class."""
        stage = BareStage("X", recording_cache, StageArgument())
        with pytest.raises(RuntimeError, match=r"instantiated in BareStage"):
            stage.clear_cache()
