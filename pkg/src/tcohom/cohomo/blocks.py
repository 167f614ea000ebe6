"""per-mode coefficient spaces and the matrices of the operators on them."""

from dataclasses import dataclass, field
from enum import StrEnum
from functools import cache, cached_property
from itertools import product
from math import pi
from typing import Any, final

import numpy as np
import numpy.typing as npt
import sympy

from tcohom.calculus import LEGS, OperatorKind
from tcohom.lattice import Lattice, Mode, mode_multiplier_a, multiplier_a_exact
from tcohom.specform import (
    Bidegree,
    CoeffFunction,
    CoeffLimits,
    Frame,
    SpectralForm,
    TermKey,
    TruncationOverflowError,
    frames,
)

from .truncation import Truncation

# spellchecker:words dtype

type BlockMatrix = npt.NDArray[Any]
"""complex128 for numeric blocks, object (sympy entries) for exact ones"""


class RankMethod(StrEnum):
    """How block matrices are built and ranked."""

    NUMERIC = "numeric"
    EXACT = "exact"
    """entries divided by π, in the basis (π t₄)^k e^{2πm t₄}"""


@final
@dataclass(frozen=True, order=True)
class BasisElement:
    """The basis vector t₄^k·e^{2πm·t₄}·frame of a mode block."""

    frame: Frame
    k: int
    m: int

    @property
    def key(self) -> TermKey:
        """(k, m)."""
        return (self.k, self.m)


def coeff_keys(trunc: Truncation) -> tuple[TermKey, ...]:
    """Every (k, m) with k ≤ K and |m| ≤ M, ordered by k then m."""
    return tuple(product(range(trunc.k + 1), range(-trunc.m, trunc.m + 1)))


def allowed_keys(mode: Mode, frame: Frame, trunc: Truncation) -> tuple[TermKey, ...]:
    """Coefficient terms kept for frame at mode.

    At σ = 0 the purely polynomial terms of a frame with j legs among dz₂, dz̄₂ stop at degree K - j.
    """
    if not mode.is_zero:
        return coeff_keys(trunc)
    cap = trunc.k - frame.z2_legs
    return tuple((k, m) for k, m in coeff_keys(trunc) if m != 0 or k <= cap)


@final
@dataclass(frozen=True)
class ModeBlock:
    """An ordered basis of the coefficient space of some bidegrees at a single mode."""

    mode: Mode
    bidegrees: tuple[Bidegree, ...]
    elements: tuple[BasisElement, ...] = field(repr=False)

    @classmethod
    def of(cls, mode: Mode, bidegrees: tuple[Bidegree, ...], trunc: Truncation) -> "ModeBlock":
        """The block spanned by the frames of the given bidegrees; out-of-range bidegrees are empty."""
        elements = tuple(
            BasisElement(frame, k, m)
            for bidegree in bidegrees
            for frame in frames(*bidegree)
            for k, m in allowed_keys(mode, frame, trunc)
        )
        return cls(mode, bidegrees, elements)

    @property
    def dim(self) -> int:
        """Dimension of the block."""
        return len(self.elements)

    @cached_property
    def frames(self) -> tuple[Frame, ...]:
        """Frames in the block, in canonical order."""
        return tuple(dict.fromkeys(e.frame for e in self.elements))

    @cached_property
    def _positions(self) -> dict[tuple[Frame, TermKey], int]:
        return {(e.frame, e.key): i for i, e in enumerate(self.elements)}

    def position(self, frame: Frame, key: TermKey) -> int | None:
        """Index of a basis element, None if it is not in the block."""
        return self._positions.get((frame, key))

    def indices(self, frame: Frame) -> list[int]:
        """Indices of the basis elements of a frame."""
        return [i for i, e in enumerate(self.elements) if e.frame == frame]

    def to_form(
        self,
        lattice: Lattice,
        vector: BlockMatrix,
        *,
        limits: CoeffLimits | None = None,
        chop: float = 0.0,
    ) -> SpectralForm:
        """The form with coefficient vector vector in this block."""
        items = [
            (self.mode, e.frame, CoeffFunction.monomial(complex(c), e.k, e.m))
            for e, c in zip(self.elements, vector.tolist(), strict=True)
            if abs(complex(c)) > chop
        ]
        if len(self.bidegrees) == 1:
            return SpectralForm.build(lattice, items, bidegree=self.bidegrees[0], limits=limits)
        return SpectralForm.build(
            lattice, items, degree=sum(self.bidegrees[0]), limits=limits
        )

    def vector(self, form: SpectralForm) -> npt.NDArray[np.complex128]:
        """Coefficient vector of the part of form at this mode.

        Raises TruncationOverflowError if form has terms outside the block.
        """
        out = np.zeros(self.dim, dtype=np.complex128)
        for mode, frame, coeff in form:
            if mode != self.mode:
                continue
            for key, c in coeff.terms.items():
                index = self.position(frame, key)
                if index is None:
                    msg = f"term {key} of {frame} at mode {mode} is outside the truncation"
                    raise TruncationOverflowError(msg)
                out[index] = c
        return out


def mode_block_basis(mode: Mode, bidegree: Bidegree, trunc: Truncation) -> ModeBlock:
    """Basis of the (p, q) coefficient space at a mode."""
    return ModeBlock.of(mode, (bidegree,), trunc)


def degree_block_basis(mode: Mode, degree: int, trunc: Truncation) -> ModeBlock:
    """Basis of the total degree k coefficient space at a mode."""
    bidegrees = tuple((p, degree - p) for p in range(3) if 0 <= degree - p <= 2)  # noqa: PLR2004
    return ModeBlock.of(mode, bidegrees, trunc)


# region coefficient operators


@cache
def _derivative(trunc_k: int, trunc_m: int, exact: bool) -> BlockMatrix:
    """d/dt₄ on the full coefficient space; divided by π in the exact basis."""
    keys = list(product(range(trunc_k + 1), range(-trunc_m, trunc_m + 1)))
    index = {key: i for i, key in enumerate(keys)}
    out: BlockMatrix = np.zeros((len(keys), len(keys)), dtype=object if exact else np.complex128)
    for j, (k, m) in enumerate(keys):
        if k > 0:
            out[index[(k - 1, m)], j] += k
        if m != 0:
            out[j, j] += 2 * m if exact else 2 * pi * m
    return out


@cache
def coefficient_operator(
    op: OperatorKind, lattice: Lattice, mode: Mode, trunc: Truncation, method: RankMethod
) -> BlockMatrix:
    """Matrix of a single-variable operator on the full coefficient space of mode."""
    exact = method is RankMethod.EXACT
    der = _derivative(trunc.k, trunc.m, exact)
    size = der.shape[0]
    eye: BlockMatrix = np.eye(size, dtype=object if exact else np.complex128)

    half_i: Any
    if exact:
        a: Any = multiplier_a_exact(lattice, mode)
        b: Any = sympy.I * mode.s2
        half_i = sympy.I / 2
    else:
        a = mode_multiplier_a(lattice, mode)
        b = 1j * pi * mode.s2
        half_i = 0.5j

    match op:
        case OperatorKind.DELBAR_Z1:
            return eye * a
        case OperatorKind.DEL_Z1:
            a_bar = sympy.expand(sympy.conjugate(a)) if exact else a.conjugate()
            return eye * (-a_bar)
        case OperatorKind.DEL_Z2:
            return der * (-half_i) + eye * b
        case OperatorKind.DELBAR_Z2:
            return der * half_i + eye * b
        case _:
            msg = f"{op} is not a single-variable operator"
            raise ValueError(msg)


def _paths(op: OperatorKind) -> list[tuple[OperatorKind, ...]]:
    """Chains of single-variable operators, applied left to right, summing to op."""
    if op is OperatorKind.DELDELBAR:
        return [
            (first, second)
            for second in OperatorKind.DEL.components
            for first in OperatorKind.DELBAR.components
        ]
    return [(c,) for c in op.components]


def block_operator(
    op: OperatorKind,
    lattice: Lattice,
    domain: ModeBlock,
    codomain: ModeBlock,
    trunc: Truncation,
    method: RankMethod = RankMethod.NUMERIC,
) -> BlockMatrix:
    """Matrix of op from domain to codomain; both blocks belong to the same mode."""
    mode = domain.mode
    exact = method is RankMethod.EXACT
    keys = coeff_keys(trunc)
    key_index = {key: i for i, key in enumerate(keys)}
    out: BlockMatrix = np.zeros(
        (codomain.dim, domain.dim), dtype=object if exact else np.complex128
    )

    for frame in domain.frames:
        cols = domain.indices(frame)
        src = [key_index[domain.elements[j].key] for j in cols]
        for path in _paths(op):
            sign, target = 1, frame
            full: BlockMatrix | None = None
            for step in path:
                s, target = target.add_left(LEGS[step])
                sign *= s
                if sign == 0:
                    break
                matrix = coefficient_operator(step, lattice, mode, trunc, method)
                full = matrix if full is None else matrix @ full
            if sign == 0 or full is None:
                continue

            image = full[:, src]
            rows = [codomain.position(target, key) for key in keys]
            kept = [i for i, r in enumerate(rows) if r is not None]
            dropped = [i for i, r in enumerate(rows) if r is None]
            if dropped and np.any(image[dropped, :] != 0):
                msg = f"{op} maps {frame} at mode {mode} outside the truncated codomain"
                raise TruncationOverflowError(msg)
            if kept:
                out[np.ix_([rows[i] for i in kept], cols)] += sign * image[kept, :]
    return out


def operator_matrix(
    op: OperatorKind,
    lattice: Lattice,
    mode: Mode,
    bidegree: Bidegree,
    trunc: Truncation,
    method: RankMethod = RankMethod.NUMERIC,
) -> BlockMatrix:
    """Matrix of op on the (p, q) block of mode; d maps into the total degree block."""
    domain = mode_block_basis(mode, bidegree, trunc)
    codomain = codomain_block(op, mode, bidegree, trunc)
    return block_operator(op, lattice, domain, codomain, trunc, method)


def codomain_block(
    op: OperatorKind, mode: Mode, bidegree: Bidegree, trunc: Truncation
) -> ModeBlock:
    """Block receiving op applied to the (p, q) block."""
    p, q = bidegree
    if op is OperatorKind.D:
        return degree_block_basis(mode, p + q + 1, trunc)
    if op is OperatorKind.DELDELBAR:
        return mode_block_basis(mode, (p + 1, q + 1), trunc)
    if all(LEGS[c].holomorphic for c in op.components):
        return mode_block_basis(mode, (p + 1, q), trunc)
    return mode_block_basis(mode, (p, q + 1), trunc)


# endregion
