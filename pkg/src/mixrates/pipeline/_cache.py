"""Base cache class for intermediate pipeline products."""

__docformat__ = "restructuredtext"
__all__ = ["StageCache"]

from dataclasses import dataclass


@dataclass(slots=True)
class StageCache:
    """
    Base class for caching in pipelines.

    All stages of one pipeline share a single cache instance. Concrete caches define
    the fields holding grids, smoothed functions, coefficients and reports.
    """
