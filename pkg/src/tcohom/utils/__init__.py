"""Various utility functions."""

from .frozendict import FrozenDict

__all__ = ["FrozenDict"]
