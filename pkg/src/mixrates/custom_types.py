"""Type definitions for the mixrates package."""

__docformat__ = "restructuredtext"
__all__ = [
    "ArgumentType",
    "CacheType",
    "Evaluable",
    "FloatArray",
    "IntArray",
    "SiteSampler",
    "StageType",
]

from collections.abc import Callable
from typing import TYPE_CHECKING, TypeAlias, TypeVar

import numpy as np
from numpy.typing import NDArray

from mixrates.pipeline._arguments import StageArgument
from mixrates.pipeline._cache import StageCache

if TYPE_CHECKING:
    from mixrates.pipeline._stage import Stage

FloatArray: TypeAlias = NDArray[np.float64]
IntArray: TypeAlias = NDArray[np.int64]

Evaluable: TypeAlias = Callable[[FloatArray], FloatArray]
"""Vectorized real function: maps an array of points to an array of values."""

SiteSampler: TypeAlias = Callable[[np.random.Generator, int], FloatArray]
"""Draws ``size`` atom sites: locations of shape ``(size,)`` or ``(sigma, mu)`` rows of shape ``(size, 2)``."""

# Type variables for generic components
CacheType = TypeVar("CacheType", bound=StageCache)
ArgumentType = TypeVar("ArgumentType", bound=StageArgument)

# Type alias for stages with specific cache and argument types
StageType: TypeAlias = "Stage[CacheType, ArgumentType]"
