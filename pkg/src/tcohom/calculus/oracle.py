"""finite-difference images of the first-order operators, computed from evaluate alone."""

from collections.abc import Callable
from typing import Final

from tcohom.specform import Frame, Leg, SpectralForm

from .operators import LEGS, OperatorKind

DEFAULT_STEP: Final = 1e-6

type Point = tuple[complex, complex]
type Function = Callable[[complex, complex], complex]


def partial(f: Function, z: Point, leg: Leg, step: float = DEFAULT_STEP) -> complex:
    """∂f/∂z_i or ∂f/∂z̄_i at z for the variable of leg, by central differences.

    ∂ = (∂_x - i∂_y)/2 and ∂̄ = (∂_x + i∂_y)/2.
    """

    def difference(h: complex) -> complex:
        if leg.index == 1:
            return f(z[0] + h, z[1]) - f(z[0] - h, z[1])
        return f(z[0], z[1] + h) - f(z[0], z[1] - h)

    dx = difference(step) / (2 * step)
    dy = difference(1j * step) / (2 * step)
    return (dx - 1j * dy) / 2 if leg.holomorphic else (dx + 1j * dy) / 2


def left_wedge(leg: Leg, frame: Frame) -> tuple[int, Frame | None]:
    """leg ∧ frame: the sign is (-1) to the number of legs of frame that leg moves past."""
    if leg in frame.legs:
        return 0, None
    passed = sum(1 for other in frame.legs if other < leg)
    return (-1) ** passed, Frame(tuple(sorted((*frame.legs, leg))))


def finite_difference(
    op: OperatorKind, form: SpectralForm, z: Point, step: float = DEFAULT_STEP
) -> dict[Frame, complex]:
    """Coefficients of op(form) at z from central differences of form.evaluate."""
    if op is OperatorKind.DELDELBAR:
        msg = "finite_difference needs a first-order operator"
        raise ValueError(msg)

    values: dict[Frame, complex] = {}
    for frame in sorted({frame for _, frame, _ in form}, key=lambda f: f.legs):

        def coefficient(z1: complex, z2: complex, frame: Frame = frame) -> complex:
            return form.evaluate(z1, z2)[frame]

        for component in op.components:
            leg = LEGS[component]
            sign, target = left_wedge(leg, frame)
            if target is None:
                continue
            values[target] = values.get(target, 0j) + sign * partial(coefficient, z, leg, step)
    return values
