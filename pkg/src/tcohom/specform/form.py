"""smooth forms on X as finite sums of Fourier modes with exp-polynomial coefficients."""

from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from logging import getLogger
from math import pi
from operator import add
from typing import final

import numpy as np

from tcohom.errors import TcohomError
from tcohom.lattice import Lattice, Mode, to_real_coords
from tcohom.utils import FrozenDict

from .coeff import CoeffFunction, CoeffLimits
from .frame import Frame, frames, frames_of_degree

type EntryKey = tuple[Mode, Frame]
type Bidegree = tuple[int, int]

logger = getLogger(__name__)


class BidegreeMismatchError(TcohomError, ValueError):
    """Raised when two forms of different bidegree are added."""


class LatticeMismatchError(TcohomError, ValueError):
    """Raised when two forms living on different lattices are combined."""


def _nonzero(coeff: CoeffFunction) -> bool:
    return not coeff.is_zero


@final
@dataclass(frozen=True)
class SpectralForm:
    """A form Σ_σ Σ_frame a(t₄)·exp⟨σ,t'⟩·dz_I∧dz̄_J on X.

    Forms are homogeneous of a declared bidegree, or mixed (bidegree None) of a single total degree.
    """

    lattice: Lattice
    degree: int
    bidegree: Bidegree | None
    entries: FrozenDict[EntryKey, CoeffFunction] = field(default=FrozenDict())
    limits: CoeffLimits = field(default=CoeffLimits())

    def __post_init__(self) -> None:
        """Validate the entries against the declared degree."""
        if self.bidegree is not None and sum(self.bidegree) != self.degree:
            msg = f"bidegree {self.bidegree} does not have degree {self.degree}"
            raise BidegreeMismatchError(msg)
        for (mode, frame), coeff in self.entries.items():
            if coeff.is_zero:
                msg = f"zero coefficient stored at {mode}, {frame}"
                raise ValueError(msg)
            if frame.degree != self.degree or (
                self.bidegree is not None and frame.bidegree != self.bidegree
            ):
                msg = f"frame {frame} does not fit a form of degree {self.degree} and bidegree {self.bidegree}"
                raise BidegreeMismatchError(msg)
            self.limits.check(coeff)

    # region constructors

    @classmethod
    def zero(
        cls, lattice: Lattice, bidegree: Bidegree, limits: CoeffLimits | None = None
    ) -> "SpectralForm":
        """The zero form of the given bidegree."""
        return cls(lattice, sum(bidegree), bidegree, FrozenDict(), limits or CoeffLimits())

    @classmethod
    def mixed_zero(
        cls, lattice: Lattice, degree: int, limits: CoeffLimits | None = None
    ) -> "SpectralForm":
        """The zero form of mixed bidegree and the given total degree."""
        return cls(lattice, degree, None, FrozenDict(), limits or CoeffLimits())

    @classmethod
    def build(
        cls,
        lattice: Lattice,
        items: Iterable[tuple[Mode, Frame, CoeffFunction]],
        *,
        bidegree: Bidegree | None = None,
        degree: int | None = None,
        limits: CoeffLimits | None = None,
    ) -> "SpectralForm":
        """Build a normalized form, summing repeated (mode, frame) entries and dropping zeros.

        Without bidegree or degree both are inferred from the frames; a form is only mixed when asked for
        by passing degree alone or when its frames have different bidegrees.
        """
        entries = FrozenDict.collect(
            (((mode, frame), coeff) for mode, frame, coeff in items), add, keep=_nonzero
        )
        if bidegree is not None:
            degree = sum(bidegree)
        elif degree is None:
            found = {frame.bidegree for _, frame in entries}
            degrees = {sum(b) for b in found}
            if len(degrees) != 1:
                msg = "cannot infer the degree of an empty form or of frames with different degrees"
                raise BidegreeMismatchError(msg)
            (degree,) = degrees
            if len(found) == 1:
                (bidegree,) = found
        return cls(lattice, degree, bidegree, entries, limits or CoeffLimits())

    @classmethod
    def monomial(
        cls,
        lattice: Lattice,
        frame: Frame,
        coeff: CoeffFunction | complex = 1,
        mode: Mode | None = None,
        limits: CoeffLimits | None = None,
    ) -> "SpectralForm":
        """The single entry coeff·e_σ·frame."""
        if not isinstance(coeff, CoeffFunction):
            coeff = CoeffFunction.constant(coeff)
        return cls.build(
            lattice,
            [(mode or Mode.zero(), frame, coeff)],
            bidegree=frame.bidegree,
            limits=limits,
        )

    # endregion

    # region inspection

    @property
    def is_zero(self) -> bool:
        """Check if no entry is stored."""
        return len(self.entries) == 0

    @property
    def is_mixed(self) -> bool:
        """Check if this form has no declared bidegree."""
        return self.bidegree is None

    @property
    def is_constant(self) -> bool:
        """Check if this form is supported at σ = 0 with constant coefficients."""
        return all(
            mode.is_zero and coeff.is_constant for (mode, _), coeff in self.entries.items()
        )

    def __iter__(self) -> Iterator[tuple[Mode, Frame, CoeffFunction]]:
        """Iterate over (mode, frame, coefficient) in canonical order."""
        return ((mode, frame, coeff) for (mode, frame), coeff in self.entries.items())

    def __len__(self) -> int:
        """Number of stored entries."""
        return len(self.entries)

    def modes(self) -> tuple[Mode, ...]:
        """Modes in the support, sorted."""
        return tuple(sorted({mode for mode, _ in self.entries}))

    def by_mode(self) -> dict[Mode, dict[Frame, CoeffFunction]]:
        """Group the entries by mode."""
        grouped: dict[Mode, dict[Frame, CoeffFunction]] = {}
        for mode, frame, coeff in self:
            grouped.setdefault(mode, {})[frame] = coeff
        return grouped

    def restrict(self, keep: Callable[[Mode], bool]) -> "SpectralForm":
        """Keep only the entries whose mode satisfies keep."""
        return self._replace((key, c) for key, c in self.entries.items() if keep(key[0]))

    def coefficient(self, frame: Frame, mode: Mode | None = None) -> CoeffFunction:
        """The coefficient at (mode, frame), zero if absent."""
        return self.entries.get((mode or Mode.zero(), frame), CoeffFunction())

    def max_abs(self) -> float:
        """Largest absolute value of a stored term."""
        return max((c.max_abs() for c in self.entries.values()), default=0.0)

    @property
    def k_max(self) -> int:
        """Largest polynomial degree in t₄."""
        return max((c.k_max for c in self.entries.values()), default=0)

    @property
    def m_max(self) -> int:
        """Largest exponential index |m|."""
        return max((c.m_max for c in self.entries.values()), default=0)

    def parts(self) -> dict[Bidegree, "SpectralForm"]:
        """Split into homogeneous components."""
        grouped: dict[Bidegree, list[tuple[Mode, Frame, CoeffFunction]]] = {}
        for mode, frame, coeff in self:
            grouped.setdefault(frame.bidegree, []).append((mode, frame, coeff))
        return {
            bidegree: SpectralForm.build(
                self.lattice, items, bidegree=bidegree, limits=self.limits
            )
            for bidegree, items in sorted(grouped.items())
        }

    # endregion

    # region algebra

    def _replace(
        self, entries: Iterable[tuple[EntryKey, CoeffFunction]], limits: CoeffLimits | None = None
    ) -> "SpectralForm":
        return SpectralForm(
            self.lattice,
            self.degree,
            self.bidegree,
            FrozenDict.collect(entries, add, keep=_nonzero),
            limits or self.limits,
        )

    def _check_lattice(self, other: "SpectralForm") -> None:
        if self.lattice != other.lattice:
            msg = "forms live on different lattices"
            raise LatticeMismatchError(msg)

    def add(self, other: "SpectralForm") -> "SpectralForm":
        """Sum of two forms of equal bidegree."""
        self._check_lattice(other)
        if (
            self.bidegree is not None
            and other.bidegree is not None
            and self.bidegree != other.bidegree
        ) or self.degree != other.degree:
            msg = f"cannot add forms of bidegree {self.bidegree} and {other.bidegree}"
            raise BidegreeMismatchError(msg)
        return self.combine(other)

    def combine(self, other: "SpectralForm") -> "SpectralForm":
        """Sum of two forms of equal total degree, mixed if the bidegrees differ."""
        self._check_lattice(other)
        if self.degree != other.degree:
            msg = f"cannot combine forms of degree {self.degree} and {other.degree}"
            raise BidegreeMismatchError(msg)
        bidegree = self.bidegree if self.bidegree == other.bidegree else None
        return SpectralForm(
            self.lattice,
            self.degree,
            bidegree,
            FrozenDict.collect(
                [*self.entries.items(), *other.entries.items()], add, keep=_nonzero
            ),
            self.limits.join(other.limits),
        )

    def __add__(self, other: "SpectralForm") -> "SpectralForm":
        """Same as add."""
        return self.add(other)

    def scale(self, c: complex) -> "SpectralForm":
        """Multiply by a constant."""
        return self._replace((key, coeff.scale(c)) for key, coeff in self.entries.items())

    def __neg__(self) -> "SpectralForm":
        """Negation."""
        return self.scale(-1)

    def __sub__(self, other: "SpectralForm") -> "SpectralForm":
        """Difference of two forms of equal bidegree."""
        return self.add(-other)

    def chop(self, tol: float) -> "SpectralForm":
        """Drop every term with absolute value ≤ tol."""
        return self._replace((key, coeff.chop(tol)) for key, coeff in self.entries.items())

    def with_limits(self, limits: CoeffLimits) -> "SpectralForm":
        """The same form checked against other limits."""
        return self._replace(self.entries.items(), limits)

    def wedge(self, other: "SpectralForm") -> "SpectralForm":
        """Exterior product; characters multiply by adding modes."""
        self._check_lattice(other)
        limits = self.limits.join(other.limits)

        if self.bidegree is not None and other.bidegree is not None:
            p = self.bidegree[0] + other.bidegree[0]
            q = self.bidegree[1] + other.bidegree[1]
            if p > 2 or q > 2:  # noqa: PLR2004
                clamped = (min(p, 2), min(q, 2))
                logger.warning(
                    "wedge of bidegree %s and %s overflows, returning zero of bidegree %s",
                    self.bidegree,
                    other.bidegree,
                    clamped,
                )
                return SpectralForm.zero(self.lattice, clamped, limits)
            bidegree: Bidegree | None = (p, q)
        else:
            bidegree = None
        degree = self.degree + other.degree
        if degree > 4:  # noqa: PLR2004
            logger.warning("wedge of degree %d overflows, returning zero", degree)
            return SpectralForm.mixed_zero(self.lattice, 4, limits)

        items: list[tuple[Mode, Frame, CoeffFunction]] = []
        for mode_f, frame_f, coeff_f in self:
            for mode_g, frame_g, coeff_g in other:
                sign, frame = frame_f.wedge(frame_g)
                if sign == 0:
                    continue
                items.append((mode_f + mode_g, frame, (coeff_f * coeff_g).scale(sign)))
        return SpectralForm.build(
            self.lattice, items, bidegree=bidegree, degree=degree, limits=limits
        )

    def conjugate(self) -> "SpectralForm":
        """Complex conjugate; (σ, I, J, a) ↦ (-σ, J, I, ±ā)."""
        items: list[tuple[Mode, Frame, CoeffFunction]] = []
        for mode, frame, coeff in self:
            sign, conj = frame.conjugate()
            items.append((-mode, conj, coeff.conj().scale(sign)))
        bidegree = None if self.bidegree is None else (self.bidegree[1], self.bidegree[0])
        return SpectralForm.build(
            self.lattice, items, bidegree=bidegree, degree=self.degree, limits=self.limits
        )

    # endregion

    def evaluate(self, z1: complex, z2: complex) -> dict[Frame, complex]:
        """Value of every frame coefficient at the point (z₁, z₂)."""
        t = to_real_coords(self.lattice, z1, z2)
        basis = frames(*self.bidegree) if self.bidegree is not None else frames_of_degree(self.degree)
        values = dict.fromkeys(basis, 0j)
        for mode, frame, coeff in self:
            phase = 2 * pi * (mode.s1 * t.t1 + mode.s2 * t.t2 + mode.s3 * t.t3)
            values[frame] += coeff.evaluate(t.t4) * complex(np.exp(1j * phase))
        return values


def combine_all(
    lattice: Lattice, degree: int, forms: Iterable[SpectralForm]
) -> SpectralForm:
    """Sum any number of forms of the same total degree."""
    total = SpectralForm.mixed_zero(lattice, degree)
    homogeneous: set[Bidegree | None] = set()
    for form in forms:
        total = total.combine(form)
        homogeneous.add(form.bidegree)
    if len(homogeneous) == 1:
        (bidegree,) = homogeneous
        if bidegree is not None:
            return SpectralForm(lattice, degree, bidegree, total.entries, total.limits)
    return total
