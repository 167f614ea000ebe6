"""wedge monomials dz_I∧dz̄_J in the canonical order dz₁ < dz₂ < dz̄₁ < dz̄₂."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cache
from itertools import combinations
from typing import final


class Leg(IntEnum):
    """A single differential, ordered canonically."""

    DZ1 = 0
    DZ2 = 1
    DZB1 = 2
    DZB2 = 3

    @property
    def holomorphic(self) -> bool:
        """dz₁ or dz₂."""
        return self < Leg.DZB1

    @property
    def index(self) -> int:
        """The variable index, 1 or 2."""
        return self % 2 + 1

    @property
    def on_z2(self) -> bool:
        """dz₂ or dz̄₂."""
        return self.index == 2  # noqa: PLR2004

    def conjugate(self) -> "Leg":
        """dz_i ↔ dz̄_i."""
        return Leg((self + 2) % 4)

    @property
    def label(self) -> str:
        """Plain-text name such as dz1 or dzb2."""
        return ("dz" if self.holomorphic else "dzb") + str(self.index)


@final
@dataclass(frozen=True, order=True)
class Frame:
    """A wedge monomial, stored as strictly increasing legs."""

    legs: tuple[Leg, ...] = field(default=())

    def __post_init__(self) -> None:
        """Check the legs are canonical."""
        if any(b <= a for a, b in zip(self.legs, self.legs[1:], strict=False)):
            msg = f"legs {self.legs} are not strictly increasing"
            raise ValueError(msg)

    @classmethod
    def from_legs(cls, legs: Iterable[Leg]) -> tuple[int, "Frame"]:
        """Sort the legs into canonical order.

        Returns the permutation sign, or 0 when a leg repeats.
        """
        seq = list(legs)
        if len(set(seq)) != len(seq):
            return 0, cls()
        inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
        return (-1) ** inversions, cls(tuple(sorted(seq)))

    @classmethod
    def of(cls, holo: Iterable[int] = (), anti: Iterable[int] = ()) -> "Frame":
        """The frame dz_I∧dz̄_J for index sets I and J ⊆ {1, 2}."""
        legs = [Leg(i - 1) for i in holo] + [Leg(j + 1) for j in anti]
        sign, frame = cls.from_legs(legs)
        if sign != 1:
            msg = f"I = {tuple(holo)}, J = {tuple(anti)} is not a pair of increasing index sets"
            raise ValueError(msg)
        return frame

    @property
    def holo(self) -> tuple[int, ...]:
        """The index set I."""
        return tuple(leg.index for leg in self.legs if leg.holomorphic)

    @property
    def anti(self) -> tuple[int, ...]:
        """The index set J."""
        return tuple(leg.index for leg in self.legs if not leg.holomorphic)

    @property
    def bidegree(self) -> tuple[int, int]:
        """(|I|, |J|)."""
        return len(self.holo), len(self.anti)

    @property
    def degree(self) -> int:
        """|I| + |J|."""
        return len(self.legs)

    @property
    def z2_legs(self) -> int:
        """Number of legs among dz₂, dz̄₂."""
        return sum(1 for leg in self.legs if leg.on_z2)

    def add_left(self, leg: Leg) -> tuple[int, "Frame"]:
        """Wedge leg on the left, i.e. leg ∧ dz_I∧dz̄_J."""
        return Frame.from_legs((leg, *self.legs))

    def wedge(self, other: "Frame") -> tuple[int, "Frame"]:
        """self ∧ other."""
        return Frame.from_legs((*self.legs, *other.legs))

    def conjugate(self) -> tuple[int, "Frame"]:
        """The conjugate dz̄_I∧dz_J reordered to dz_J∧dz̄_I, with sign (-1)^{|I||J|}."""
        return Frame.from_legs(leg.conjugate() for leg in self.legs)

    @property
    def label(self) -> str:
        """Plain-text name such as dz1^dzb1, or 1 for the empty frame."""
        return "^".join(leg.label for leg in self.legs) or "1"

    def __str__(self) -> str:
        """Same as label."""
        return self.label


@cache
def frames(p: int, q: int) -> tuple[Frame, ...]:
    """All frames of bidegree (p, q) in canonical order."""
    if p < 0 or q < 0:
        return ()
    holo = (Leg.DZ1, Leg.DZ2)
    anti = (Leg.DZB1, Leg.DZB2)
    return tuple(
        sorted(Frame((*i, *j)) for i in combinations(holo, p) for j in combinations(anti, q))
    )


@cache
def frames_of_degree(k: int) -> tuple[Frame, ...]:
    """All frames of total degree k in canonical order."""
    return tuple(sorted(f for p in range(k + 1) for f in frames(p, k - p)))
