"""Abstract base class for pipeline stages."""

__docformat__ = "restructuredtext"
__all__ = ["Stage", "link"]

from abc import ABC
from collections.abc import Sequence
from typing import Generic

from mixrates.custom_types import ArgumentType, CacheType


class Stage(ABC, Generic[CacheType, ArgumentType]):
    """
    Abstract base class for pipeline stages.

    Each stage is one step of an approximation scheme (sampling, smoothing,
    coefficient extraction, truncation, reconstruction). Stages read the products of
    their predecessors from the shared cache and write their own.

    **Graph structure:**
    - Input stage: no predecessors, samples the target function
    - Hidden stages: have predecessors and successors
    - Output stage: no successors, assembles the report
    """

    _name: str
    _cache: CacheType
    _argument: ArgumentType
    _pre_stages: list["Stage[CacheType, ArgumentType]"]
    _next_stages: list["Stage[CacheType, ArgumentType]"]

    def __init__(self, name: str, cache: CacheType, argument: ArgumentType):
        """
        Initialize a stage.

        :param name: Name of the stage.

        :param cache: Shared cache instance.

        :param argument: Shared arguments instance.

        """
        self._name = name
        self._cache = cache
        self._argument = argument
        self._pre_stages = []
        self._next_stages = []

    def run(self) -> None:
        """
        Compute this stage's products and store them in the cache.

        :raises RuntimeError: If not implemented by subclass.

        """
        raise RuntimeError(f"This method should be instantiated in {type(self).__name__}.")

    def clear_cache(self) -> None:
        """
        Drop this stage's products from the cache.

        Called by the pipeline once every successor has run.

        :raises RuntimeError: If not implemented by subclass.

        """
        raise RuntimeError(f"This method should be instantiated in {type(self).__name__}.")

    def log(self, prefix: str, method: str, action: str, target: str, context: str = "") -> None:
        """
        Print one verbose line if the shared arguments ask for it.

        Format: ``[PREFIX] Stage.method() | action -> target [context]``.

        :param prefix: Log prefix constant.

        :param method: Name of the calling method.

        :param action: What is being done.

        :param target: Where the result goes.

        :param context: Optional bracketed context.

        """
        if not self._argument.verbose:
            return
        suffix = f" [{context}]" if context else ""
        print(f"{prefix} {self._name}.{method}() | {action} -> {target}{suffix}")

    @property
    def name(self):
        """
        Get stage name.

        :return: Name of this stage.
        """
        return self._name

    @property
    def cache(self) -> CacheType:
        """
        Get shared cache instance.

        :return: Cache instance shared across stages.
        """
        return self._cache

    @property
    def argument(self) -> ArgumentType:
        """
        Get shared arguments instance.

        :return: Arguments instance shared across stages.
        """
        return self._argument

    @property
    def pre_stages(self) -> Sequence["Stage[CacheType, ArgumentType]"]:
        """
        Get predecessor stages.

        :return: Sequence of predecessor stages.
        """
        return self._pre_stages

    @pre_stages.setter
    def pre_stages(self, value: list["Stage[CacheType, ArgumentType]"]):
        """
        Set predecessor stages.

        :param value: List of stages that precede this stage.

        """
        self._pre_stages = value

    @property
    def next_stages(self) -> Sequence["Stage[CacheType, ArgumentType]"]:
        """
        Get successor stages.

        :return: Sequence of successor stages.
        """
        return self._next_stages

    @next_stages.setter
    def next_stages(self, value: list["Stage[CacheType, ArgumentType]"]):
        """
        Set successor stages.

        :param value: List of stages that succeed this stage.

        """
        self._next_stages = value


def link(pre: Stage, nxt: Stage) -> None:
    """
    Add the edge ``pre -> nxt`` on both endpoints.

    :param pre: Upstream stage.

    :param nxt: Downstream stage.

    """
    pre.next_stages = [*pre.next_stages, nxt]
    nxt.pre_stages = [*nxt.pre_stages, pre]
