"""test the form module."""

import numpy as np
import pytest

from tcohom.lattice import Lattice, Mode, Rational
from tcohom.specform import (
    BidegreeMismatchError,
    CoeffFunction,
    CoeffLimits,
    Frame,
    LatticeMismatchError,
    SpectralForm,
    TruncationOverflowError,
    combine_all,
    random_form,
)

LATTICE = Lattice.default()
DZ1 = Frame.of((1,))
DZB1 = Frame.of((), (1,))
DZ1_DZB1 = Frame.of((1,), (1,))
SIGMA = Mode(1, -1, 0)


def test_build_infers_bidegree() -> None:
    """Test that build infers the bidegree from the frames."""
    form = SpectralForm.build(LATTICE, [(SIGMA, DZ1_DZB1, CoeffFunction.constant(1))])
    assert form.bidegree == (1, 1)
    assert form.degree == 2

    mixed = SpectralForm.build(
        LATTICE,
        [(SIGMA, DZ1, CoeffFunction.constant(1)), (SIGMA, DZB1, CoeffFunction.constant(1))],
    )
    assert mixed.is_mixed
    assert set(mixed.parts()) == {(1, 0), (0, 1)}

    with pytest.raises(BidegreeMismatchError):
        SpectralForm.build(LATTICE, [])


def test_build_sums_and_drops() -> None:
    """Test that repeated entries are summed and zero entries dropped."""
    one = CoeffFunction.constant(1)
    form = SpectralForm.build(
        LATTICE, [(SIGMA, DZ1, one), (SIGMA, DZ1, -one)], bidegree=(1, 0)
    )
    assert form.is_zero


def test_bidegree_is_checked() -> None:
    """Test that frames must match the declared bidegree."""
    with pytest.raises(BidegreeMismatchError):
        SpectralForm.monomial(LATTICE, DZ1).add(SpectralForm.monomial(LATTICE, DZB1))
    with pytest.raises(BidegreeMismatchError):
        SpectralForm.build(LATTICE, [(SIGMA, DZ1, CoeffFunction.constant(1))], bidegree=(0, 1))


def test_limits_are_checked() -> None:
    """Test that coefficients beyond the limits are rejected."""
    with pytest.raises(TruncationOverflowError):
        SpectralForm.monomial(LATTICE, DZ1, CoeffFunction.monomial(1, 3), limits=CoeffLimits(2, 2))


def test_wedge() -> None:
    """Test that 1-forms anticommute and modes add."""
    a = SpectralForm.monomial(LATTICE, DZ1, 2, Mode(1, 0, 0))
    b = SpectralForm.monomial(LATTICE, DZB1, 3j, Mode(0, 1, 0))
    ab = a.wedge(b)
    assert ab.bidegree == (1, 1)
    assert ab.coefficient(DZ1_DZB1, Mode(1, 1, 0)) == CoeffFunction.constant(6j)
    assert b.wedge(a) == -ab
    assert a.wedge(a).is_zero


def test_wedge_overflow() -> None:
    """Test that wedges beyond bidegree (2, 2) are the zero form."""
    top = SpectralForm.monomial(LATTICE, Frame.of((1, 2)))
    assert top.wedge(SpectralForm.monomial(LATTICE, DZ1)).is_zero


def test_conjugate() -> None:
    """Test conj(e_σ t₄ dz₁∧dz̄₁) = -e_{-σ} t₄ dz₁∧dz̄₁."""
    t4 = CoeffFunction.monomial(1, 1)
    form = SpectralForm.monomial(LATTICE, DZ1_DZB1, t4, SIGMA)
    want = SpectralForm.monomial(LATTICE, DZ1_DZB1, t4.scale(-1), -SIGMA)
    assert form.conjugate() == want


def test_conjugate_is_an_involution() -> None:
    """Test conj∘conj = id on random forms."""
    rng = np.random.default_rng(7)
    for bidegree in ((0, 1), (1, 1), (2, 1)):
        form = random_form(LATTICE, rng, bidegree)
        assert form.conjugate().conjugate() == form
        assert form.conjugate().bidegree == bidegree[::-1]


def test_lattice_mismatch() -> None:
    """Test that forms on different lattices cannot be combined."""
    other = Lattice(Rational(0), Rational(2), Rational(1, 2), Rational(0))
    with pytest.raises(LatticeMismatchError):
        SpectralForm.monomial(LATTICE, DZ1).add(SpectralForm.monomial(other, DZ1))


def test_evaluate_is_periodic() -> None:
    """Test that a form takes the same values on lattice translates."""
    rng = np.random.default_rng(3)
    form = random_form(LATTICE, rng, (1, 1))
    z1, z2 = 0.2 + 0.4j, -0.3 + 0.1j
    values = form.evaluate(z1, z2)
    for g1, g2 in LATTICE.generators():
        shifted = form.evaluate(z1 + g1, z2 + g2)
        for frame, value in values.items():
            assert shifted[frame] == pytest.approx(value)


def test_restrict_and_inspection() -> None:
    """Test restrict, modes, k_max and m_max."""
    form = SpectralForm.build(
        LATTICE,
        [
            (Mode.zero(), DZ1, CoeffFunction.monomial(1, 2)),
            (SIGMA, DZ1, CoeffFunction.monomial(1, 0, -1)),
        ],
    )
    assert form.modes() == (Mode.zero(), SIGMA)
    assert form.k_max == 2
    assert form.m_max == 1
    assert not form.is_constant
    assert form.restrict(lambda m: m.is_zero).modes() == (Mode.zero(),)


def test_combine_all() -> None:
    """Test summing homogeneous and mixed forms."""
    a = SpectralForm.monomial(LATTICE, DZ1)
    b = SpectralForm.monomial(LATTICE, DZB1)
    assert combine_all(LATTICE, 1, [a, a]).bidegree == (1, 0)
    assert combine_all(LATTICE, 1, [a, b]).is_mixed
    assert (a - a).is_zero
