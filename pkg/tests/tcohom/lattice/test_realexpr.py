"""test the realexpr module."""

from collections.abc import Callable
from fractions import Fraction

import pytest

from tcohom.lattice import (
    Decimal,
    LiouvilleSeries,
    QuadraticIrrational,
    Rational,
    RealExprError,
)

# spellchecker:words liouville


def test_rational_normalizes() -> None:
    """Test that rationals are stored in lowest terms."""
    assert Rational(2, 4) == Rational(1, 2)
    assert Rational(-3, 6).to_json() == {"rat": [-1, 2]}
    assert Rational(3).is_rational().rational


@pytest.mark.parametrize(
    "build",
    [
        lambda: Rational(1, 0),
        lambda: QuadraticIrrational(Fraction(0), Fraction(1), 4),
        lambda: QuadraticIrrational(Fraction(0), Fraction(0), 2),
        lambda: Decimal("1.2.3", 5),
        lambda: LiouvilleSeries(1, 3),
        lambda: LiouvilleSeries(10, 3, (1, 1, 2)),
    ],
)
def test_invalid_expressions(build: Callable[[], object]) -> None:
    """Test that malformed expressions are rejected."""
    with pytest.raises(RealExprError):
        build()


def test_quadratic_partial_quotients() -> None:
    """Test the periodic continued fractions of √2 and the golden ratio."""
    assert QuadraticIrrational(Fraction(0), Fraction(1), 2).partial_quotients() == ((1,), (2,))
    golden = QuadraticIrrational(Fraction(1, 2), Fraction(1, 2), 5)
    assert golden.partial_quotients()[1] == (1,)
    assert float(golden) == pytest.approx(1.6180339887498949)


def test_inexact_expressions_are_not_rational() -> None:
    """Test that finite approximations of irrationals report rational False, exact False."""
    for x in (Decimal("1.41421356", 9), LiouvilleSeries(10, 3)):
        verdict = x.is_rational()
        assert not verdict.rational
        assert not verdict.exact
        assert x.to_sympy() is None


def test_liouville_value() -> None:
    """Test the truncated series with factorial exponents."""
    x = LiouvilleSeries(10, 3)
    assert x.powers() == (1, 2, 6)
    assert x.value == Fraction(1, 10) + Fraction(1, 100) + Fraction(1, 10**6)
    assert x.partial_denominators() == (10, 100)
