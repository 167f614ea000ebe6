"""membership of forms in the sheaves F, F̄ and G.

F = ker ∂̄_{z₂}, F̄ = ker ∂_{z₂} and G = ker ∂_{z₂}∂̄_{z₂} on functions.
F^{p,q} allows J ⊆ {1}, F̄^{p,q} allows I ⊆ {1}, and G^{p,q} (for p, q ≤ 1) takes
G-coefficients on dz₁, dz̄₁ and dz₁∧dz̄₁, F-coefficients on dz₂ and dz₂∧dz̄₁,
and F̄-coefficients on dz̄₂ and dz₁∧dz̄₂.
"""

from dataclasses import dataclass
from enum import Enum, auto
from typing import Final, final

from tcohom.lattice import Mode, mode_multiplier_b

from .coeff import CoeffFunction
from .form import SpectralForm
from .frame import Frame, Leg

DEFAULT_TOLERANCE: Final = 1e-12


class FunctionSheaf(Enum):
    """The function sheaves a single coefficient can belong to."""

    F = auto()
    F_BAR = auto()
    G = auto()


@final
@dataclass(frozen=True)
class SheafMembership:
    """Result of sheaf_membership."""

    in_f: bool
    in_fbar: bool
    in_g: bool


def coefficient_in(
    sheaf: FunctionSheaf, coeff: CoeffFunction, mode: Mode, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """Check if the function coeff(t₄)·exp⟨σ,t'⟩ lies in the given sheaf."""
    b = mode_multiplier_b(mode)
    match sheaf:
        case FunctionSheaf.F:
            image = coeff.delbar_z2(b)
        case FunctionSheaf.F_BAR:
            image = coeff.del_z2(b)
        case FunctionSheaf.G:
            image = coeff.delbar_z2(b).del_z2(b)
    return image.max_abs() <= tol * (1 + coeff.max_abs())


def g_sheaf_for(frame: Frame) -> FunctionSheaf | None:
    """The function sheaf G^{p,q} asks for at a frame, None if the frame is not allowed."""
    p, q = frame.bidegree
    if p > 1 or q > 1:
        return None
    if Leg.DZ2 in frame.legs:
        return None if Leg.DZB2 in frame.legs else FunctionSheaf.F
    if Leg.DZB2 in frame.legs:
        return FunctionSheaf.F_BAR
    return FunctionSheaf.G


def sheaf_membership(form: SpectralForm, tol: float = DEFAULT_TOLERANCE) -> SheafMembership:
    """Decide membership of form in F^{p,q}, F̄^{p,q} and G^{p,q}."""
    in_f = in_fbar = in_g = True
    if form.bidegree is not None and (form.bidegree[0] > 1 or form.bidegree[1] > 1):
        in_g = False

    for mode, frame, coeff in form:
        if in_f and (
            Leg.DZB2 in frame.legs or not coefficient_in(FunctionSheaf.F, coeff, mode, tol)
        ):
            in_f = False
        if in_fbar and (
            Leg.DZ2 in frame.legs
            or not coefficient_in(FunctionSheaf.F_BAR, coeff, mode, tol)
        ):
            in_fbar = False
        if in_g:
            sheaf = g_sheaf_for(frame)
            in_g = sheaf is not None and coefficient_in(sheaf, coeff, mode, tol)

    return SheafMembership(in_f=in_f, in_fbar=in_fbar, in_g=in_g)


def f_sheaf_for(frame: Frame) -> FunctionSheaf | None:
    """The function sheaf F^{p,q} asks for at a frame, None if the frame carries dz̄₂."""
    return None if Leg.DZB2 in frame.legs else FunctionSheaf.F


def fbar_sheaf_for(frame: Frame) -> FunctionSheaf | None:
    """The function sheaf F̄^{p,q} asks for at a frame, None if the frame carries dz₂."""
    return None if Leg.DZ2 in frame.legs else FunctionSheaf.F_BAR
