"""
Stage pipelines for the approximation schemes.

A scheme is a directed acyclic graph of stages that share one cache and one frozen
argument object. The pipeline sorts the stages topologically, runs them, and can
release intermediate products as soon as all consumers have run.
"""

__docformat__ = "restructuredtext"

from mixrates.pipeline._arguments import StageArgument
from mixrates.pipeline._cache import StageCache
from mixrates.pipeline._pipeline import Pipeline, release_stage_cache
from mixrates.pipeline._sort import topo_sort_bfs, topo_sort_dfs
from mixrates.pipeline._stage import Stage, link

__all__ = [
    "Pipeline",
    "Stage",
    "StageArgument",
    "StageCache",
    "link",
    "release_stage_cache",
    "topo_sort_bfs",
    "topo_sort_dfs",
]
