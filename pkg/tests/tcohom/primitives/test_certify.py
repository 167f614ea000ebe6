"""test the certify module."""

import pytest

from tcohom.lattice import (
    Lattice,
    LiouvilleSeries,
    Mode,
    Rational,
    classify_theta,
    mode_multiplier_a,
)
from tcohom.primitives import BoundKind, certify_convergence

LATTICE = Lattice.default()


def test_finite_input() -> None:
    """Test that finitely many modes are always convergent."""
    amplitudes = {Mode(1, 1, 0): 2.0, Mode(0, 2, 0): 1.0, Mode(1, 0, 0): 5.0}
    got = certify_convergence(amplitudes, LATTICE, classify_theta(LATTICE))
    assert got.kind is BoundKind.FINITE_INPUT
    assert len(got.shell_sums) == 2
    # σ₂ = 0 is not summed
    assert got.shell_sums[0] == pytest.approx(2.0 / abs(mode_multiplier_a(LATTICE, Mode(1, 1, 0))))
    assert got.to_json()["kind"] == "FiniteInput"


def test_geometric_majorant() -> None:
    """Test fast decaying amplitudes on a theta lattice."""
    got = certify_convergence(
        lambda mode: 10.0 ** (-3 * mode.radius), LATTICE, classify_theta(LATTICE)
    )
    assert got.kind is BoundKind.GEOMETRIC_MAJORANT
    assert got.majorant is not None
    assert got.shell_sums[-1] <= got.majorant
    assert got.rho == pytest.approx(1e-3)


def test_slow_decay_is_not_certified() -> None:
    """Test that amplitudes decaying slower than δ are refused."""
    got = certify_convergence(lambda _: 1.0, LATTICE, classify_theta(LATTICE))
    assert got.kind is BoundKind.NOT_CERTIFIED
    assert got.majorant is None


def test_wild_lattice_is_not_certified() -> None:
    """Test that a lattice without a theta witness certifies nothing."""
    lattice = Lattice(Rational(0), Rational(1), LiouvilleSeries(10, 6), Rational(0))
    got = certify_convergence(
        lambda mode: 10.0 ** (-3 * mode.radius), lattice, classify_theta(lattice)
    )
    assert got.kind is BoundKind.NOT_CERTIFIED
    assert got.delta is None


def test_needs_two_shells() -> None:
    """Test the shell count."""
    with pytest.raises(ValueError, match="two shells"):
        certify_convergence(lambda _: 1.0, LATTICE, None, shells=1)
