"""the operators ∂, ∂̄, d and ∂∂̄ acting mode by mode on spectral forms.

∂ = ∂_{z₁} + ∂_{z₂} and ∂̄ = ∂̄_{z₁} + ∂̄_{z₂}. At a mode σ the four pieces act on a coefficient a(t₄) by

    ∂̄_{z₁}: a ↦ A^σ·a               (leg dz̄₁)
    ∂_{z₁}:  a ↦ -conj(A^σ)·a        (leg dz₁)
    ∂_{z₂}:  a ↦ (1/2i)·a′ + B^σ·a   (leg dz₂)
    ∂̄_{z₂}: a ↦ -(1/2i)·a′ + B^σ·a  (leg dz̄₂)

and the new leg is wedged on the left.
"""

from collections.abc import Callable
from enum import StrEnum
from typing import Final

from tcohom.lattice import Lattice, Mode, mode_multiplier_a, mode_multiplier_b
from tcohom.specform import Bidegree, CoeffFunction, Frame, Leg, SpectralForm

type CoeffMap = Callable[[CoeffFunction], CoeffFunction]


class OperatorKind(StrEnum):
    """A differential operator on forms."""

    DEL = "del"
    DELBAR = "delbar"
    D = "d"
    DELDELBAR = "deldelbar"
    DEL_Z1 = "del_z1"
    DELBAR_Z1 = "delbar_z1"
    DEL_Z2 = "del_z2"
    DELBAR_Z2 = "delbar_z2"

    @property
    def components(self) -> tuple["OperatorKind", ...]:
        """The single-variable operators summing to this one (DelDelbar is a composition)."""
        return _COMPONENTS[self]


_COMPONENTS: Final[dict[OperatorKind, tuple[OperatorKind, ...]]] = {
    OperatorKind.DEL_Z1: (OperatorKind.DEL_Z1,),
    OperatorKind.DELBAR_Z1: (OperatorKind.DELBAR_Z1,),
    OperatorKind.DEL_Z2: (OperatorKind.DEL_Z2,),
    OperatorKind.DELBAR_Z2: (OperatorKind.DELBAR_Z2,),
    OperatorKind.DEL: (OperatorKind.DEL_Z1, OperatorKind.DEL_Z2),
    OperatorKind.DELBAR: (OperatorKind.DELBAR_Z1, OperatorKind.DELBAR_Z2),
    OperatorKind.D: (
        OperatorKind.DEL_Z1,
        OperatorKind.DEL_Z2,
        OperatorKind.DELBAR_Z1,
        OperatorKind.DELBAR_Z2,
    ),
    OperatorKind.DELDELBAR: (),
}

LEGS: Final[dict[OperatorKind, Leg]] = {
    OperatorKind.DEL_Z1: Leg.DZ1,
    OperatorKind.DEL_Z2: Leg.DZ2,
    OperatorKind.DELBAR_Z1: Leg.DZB1,
    OperatorKind.DELBAR_Z2: Leg.DZB2,
}
"""leg added by each single-variable operator"""


def coefficient_map(op: OperatorKind, lattice: Lattice, mode: Mode) -> CoeffMap:
    """The action of a single-variable operator on the coefficient of mode σ."""
    match op:
        case OperatorKind.DELBAR_Z1:
            a = mode_multiplier_a(lattice, mode)
            return lambda c: c.scale(a)
        case OperatorKind.DEL_Z1:
            a_bar = mode_multiplier_a(lattice, mode).conjugate()
            return lambda c: c.scale(-a_bar)
        case OperatorKind.DEL_Z2:
            b = mode_multiplier_b(mode)
            return lambda c: c.del_z2(b)
        case OperatorKind.DELBAR_Z2:
            b = mode_multiplier_b(mode)
            return lambda c: c.delbar_z2(b)
        case _:
            msg = f"{op} is not a single-variable operator"
            raise ValueError(msg)


def target_bidegree(op: OperatorKind, bidegree: Bidegree) -> Bidegree | None:
    """Bidegree of op applied to a homogeneous form, None when the image is mixed.

    Images beyond (2, 2) are clamped; they only hold the zero form.
    """
    p, q = bidegree
    match op:
        case OperatorKind.DELDELBAR:
            return (min(p + 1, 2), min(q + 1, 2))
        case OperatorKind.D:
            candidates = [b for b in ((p + 1, q), (p, q + 1)) if max(b) <= 2]  # noqa: PLR2004
            if len(candidates) == 1:
                return candidates[0]
            return None if candidates else (min(p + 1, 2), q)
        case _:
            if LEGS[op.components[0]].holomorphic:
                return (min(p + 1, 2), q)
            return (p, min(q + 1, 2))


def apply(op: OperatorKind, form: SpectralForm) -> SpectralForm:
    """Apply op to form."""
    if op is OperatorKind.DELDELBAR:
        return apply(OperatorKind.DEL, apply(OperatorKind.DELBAR, form))

    lattice = form.lattice
    bidegree = None if form.bidegree is None else target_bidegree(op, form.bidegree)
    degree = form.degree + 1 if bidegree is None else sum(bidegree)
    if degree > 4:  # noqa: PLR2004
        return SpectralForm.mixed_zero(lattice, 4, form.limits)

    items: list[tuple[Mode, Frame, CoeffFunction]] = []
    for mode, entries in form.by_mode().items():
        for component in op.components:
            action = coefficient_map(component, lattice, mode)
            leg = LEGS[component]
            for frame, coeff in entries.items():
                sign, target = frame.add_left(leg)
                if sign == 0:
                    continue
                items.append((mode, target, action(coeff).scale(sign)))

    if bidegree is not None:
        # drop the images that left the allowed range
        items = [item for item in items if item[1].bidegree == bidegree]
    return SpectralForm.build(
        lattice, items, bidegree=bidegree, degree=degree, limits=form.limits
    )


def is_closed(op: OperatorKind, form: SpectralForm, tol: float = 1e-12) -> bool:
    """Check if op(form) vanishes relative to the size of form."""
    return apply(op, form).max_abs() <= tol * (1 + form.max_abs())
