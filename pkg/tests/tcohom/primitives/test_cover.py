"""test the cover module."""

import pytest

from tcohom.calculus import OperatorKind
from tcohom.lattice import Lattice, Mode
from tcohom.primitives import CoverForm, apply_cover, closed_form_primitives
from tcohom.specform import CoeffFunction, Frame, Leg, SpectralForm

LATTICE = Lattice.default()
ONE = SpectralForm.monomial(LATTICE, Frame())


def test_re_z2() -> None:
    """Test evaluation and differentials of Re z₂."""
    re_z2 = CoverForm(ONE.scale(0), ONE)
    assert not re_z2.is_periodic
    assert re_z2.evaluate(0.1 + 0.2j, -0.7 + 0.3j)[Frame()] == pytest.approx(-0.7)

    image = apply_cover(OperatorKind.D, re_z2)
    assert image.is_periodic
    assert image.periodic.coefficient(Frame((Leg.DZ2,))) == CoeffFunction.constant(0.5)
    assert image.periodic.coefficient(Frame((Leg.DZB2,))) == CoeffFunction.constant(0.5)


def test_lift() -> None:
    """Test that forms on X lift to periodic cover forms."""
    lifted = CoverForm.of(ONE)
    assert lifted.is_periodic
    assert (lifted + lifted).periodic == ONE.scale(2)


def test_apply_cover_operators() -> None:
    """Test that only ∂, ∂̄ and d act on cover forms."""
    with pytest.raises(ValueError, match="not defined on cover forms"):
        apply_cover(OperatorKind.DELDELBAR, CoverForm.of(ONE))


def test_closed_form_primitives_keep_the_zero_mode() -> None:
    """Test that the σ = 0 part of w is the residual."""
    dz11 = Frame((Leg.DZ1, Leg.DZB1))
    w = SpectralForm.monomial(LATTICE, dz11).combine(
        SpectralForm.monomial(LATTICE, dz11, 2, Mode(0, 0, 1))
    )
    psi1, psi2, residual = closed_form_primitives(w)
    assert residual == SpectralForm.monomial(LATTICE, dz11)
    image = apply_cover(OperatorKind.DELBAR, psi1) + apply_cover(OperatorKind.DEL, psi2)
    assert image.periodic.combine(residual).combine(-w).max_abs() <= 1e-12
