"""Base arguments class shared by all stages of a pipeline."""

__docformat__ = "restructuredtext"
__all__ = ["StageArgument"]

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class StageArgument:
    """
    Base class for pipeline arguments.

    This immutable class carries the settings that every stage of a pipeline reads.
    Concrete pipelines subclass it with ``kw_only=True`` to add their plans.

    :ivar verbose: Print one line per stage action.
    """

    verbose: bool = False
