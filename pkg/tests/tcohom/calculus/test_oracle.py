"""test the oracle module."""

import pytest

from tcohom.calculus import OperatorKind, finite_difference, left_wedge, partial
from tcohom.lattice import Lattice
from tcohom.specform import CoeffFunction, Frame, Leg, SpectralForm, frames_of_degree

# spellchecker:words deldelbar


def test_partial_of_a_polynomial() -> None:
    """Test ∂ and ∂̄ of z₁²·z̄₂."""

    def f(z1: complex, z2: complex) -> complex:
        return z1 * z1 * z2.conjugate()

    z = (0.3 + 0.2j, -0.1 + 0.4j)
    assert partial(f, z, Leg.DZ1) == pytest.approx(2 * z[0] * z[1].conjugate(), abs=1e-8)
    assert partial(f, z, Leg.DZB1) == pytest.approx(0, abs=1e-8)
    assert partial(f, z, Leg.DZ2) == pytest.approx(0, abs=1e-8)
    assert partial(f, z, Leg.DZB2) == pytest.approx(z[0] * z[0], abs=1e-8)


@pytest.mark.parametrize(
    ("leg", "frame", "want"),
    [
        (Leg.DZB1, Frame(), (1, Frame((Leg.DZB1,)))),
        (Leg.DZB1, Frame((Leg.DZ1,)), (-1, Frame((Leg.DZ1, Leg.DZB1)))),
        (Leg.DZ1, Frame((Leg.DZ2, Leg.DZB1)), (1, Frame((Leg.DZ1, Leg.DZ2, Leg.DZB1)))),
        (Leg.DZB2, Frame((Leg.DZ1, Leg.DZ2)), (1, Frame((Leg.DZ1, Leg.DZ2, Leg.DZB2)))),
        (Leg.DZ2, Frame((Leg.DZ1, Leg.DZB1)), (-1, Frame((Leg.DZ1, Leg.DZ2, Leg.DZB1)))),
        (Leg.DZ1, Frame((Leg.DZ1,)), (0, None)),
    ],
)
def test_left_wedge(leg: Leg, frame: Frame, want: tuple[int, Frame | None]) -> None:
    """Test the sign of wedging a leg on the left."""
    assert left_wedge(leg, frame) == want


def test_left_wedge_matches_add_left() -> None:
    """Test that counting passed legs agrees with sorting by inversions."""
    for degree in range(4):
        for frame in frames_of_degree(degree):
            for leg in Leg:
                sign, target = left_wedge(leg, frame)
                got_sign, got_target = frame.add_left(leg)
                assert sign == got_sign
                if sign:
                    assert target == got_target


def test_finite_difference_of_t4() -> None:
    """Test d t₄ = (dz₂ - dz̄₂)/2i by differences."""
    lattice = Lattice.default()
    t4 = SpectralForm.monomial(lattice, Frame(), CoeffFunction.monomial(1, 1))
    got = finite_difference(OperatorKind.D, t4, (0.1 + 0.2j, 0.3 - 0.05j))
    assert got[Frame((Leg.DZ2,))] == pytest.approx(-0.5j, abs=1e-6)
    assert got[Frame((Leg.DZB2,))] == pytest.approx(0.5j, abs=1e-6)


def test_finite_difference_needs_a_first_order_operator() -> None:
    """Test that ∂∂̄ is refused."""
    form = SpectralForm.monomial(Lattice.default(), Frame())
    with pytest.raises(ValueError, match="first-order"):
        finite_difference(OperatorKind.DELDELBAR, form, (0j, 0j))
