"""Implements an immutable, canonically ordered mapping."""

from collections.abc import Callable, Iterable, Iterator, Mapping
from typing import Any, final


@final
class FrozenDict[K, V](Mapping[K, V]):
    """An immutable mapping that iterates its keys in sorted order.

    Keys must be hashable and mutually comparable.
    Two FrozenDicts with the same items are equal and hash equally, independent of the insertion order.
    """

    # NOTE: ruff treats calls to this class as immutable via
    # [tool.ruff.lint.flake8-bugbear] extend-immutable-calls in pyproject.toml.

    __slots__ = ("__hash", "__items")

    __items: dict[K, V]
    __hash: int | None

    def __init__(self, items: Mapping[K, V] | Iterable[tuple[K, V]] = ()) -> None:
        """Create a new FrozenDict from a mapping or an iterable of pairs."""
        pairs = items.items() if isinstance(items, Mapping) else items
        self.__items = dict(sorted(pairs, key=_first))
        self.__hash = None

    @classmethod
    def collect(
        cls,
        pairs: Iterable[tuple[K, V]],
        combine: Callable[[V, V], V],
        keep: Callable[[V], bool] = bool,
    ) -> "FrozenDict[K, V]":
        """Build a FrozenDict, combining values of repeated keys and dropping values failing keep."""
        acc: dict[K, V] = {}
        for key, value in pairs:
            if key in acc:
                acc[key] = combine(acc[key], value)
            else:
                acc[key] = value
        return cls((k, v) for k, v in acc.items() if keep(v))

    def __iter__(self) -> Iterator[K]:
        """Iterate over the keys in sorted order."""
        return iter(self.__items)

    def __getitem__(self, key: K) -> V:
        """Get an item from this mapping."""
        return self.__items[key]

    def __len__(self) -> int:
        """Total number of items in this mapping."""
        return len(self.__items)

    def __repr__(self) -> str:
        """Return a code representation of this FrozenDict."""
        return f"FrozenDict({self.__items!r})"

    def __eq__(self, other: object) -> bool:
        """Check if this FrozenDict holds the same items as another one."""
        return isinstance(other, FrozenDict) and self.__items == other.__items

    def __hash__(self) -> int:
        """Compute the (cached) hash of the underlying items."""
        if self.__hash is None:
            self.__hash = hash(tuple(self.__items.items()))
        return self.__hash


def _first(pair: tuple[Any, Any]) -> Any:
    return pair[0]
