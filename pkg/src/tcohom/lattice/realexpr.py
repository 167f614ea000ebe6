"""exact and approximate real number expressions used as lattice parameters."""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Final, final, override

import mpmath
import sympy
from sympy.ntheory import factorint
from sympy.ntheory.continued_fraction import continued_fraction

from tcohom.errors import TcohomError

# spellchecker:words mpf workprec factorint liouville


class RealExprError(TcohomError, ValueError):
    """Raised when a real expression is malformed."""


@final
@dataclass(frozen=True)
class RationalityVerdict:
    """Outcome of a rationality test."""

    rational: bool
    exact: bool
    """false when the expression only stands for a finite approximation"""


class RealExpr(ABC):
    """A real number given by an expression."""

    @property
    @abstractmethod
    def exact(self) -> bool:
        """Whether the expression denotes its value exactly."""

    @abstractmethod
    def evaluate(self, prec: int) -> mpmath.mpf:
        """Evaluate this expression with prec bits of working precision."""

    @abstractmethod
    def is_rational(self) -> RationalityVerdict:
        """Decide if this expression is rational."""

    @abstractmethod
    def to_json(self) -> dict[str, Any]:
        """Serialize this expression into the lattice file format."""

    def to_sympy(self) -> sympy.Expr | None:
        """Return an exact sympy expression, or None if the value is not exact."""
        return None

    def __float__(self) -> float:
        """Return the nearest double."""
        return float(self.evaluate(64))


@final
@dataclass(frozen=True, order=True)
class Rational(RealExpr):
    """A rational number num/den in lowest terms."""

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        """Validate and normalize the fraction."""
        if self.den <= 0:
            msg = f"denominator must be positive, got {self.den}"
            raise RealExprError(msg)
        value = Fraction(self.num, self.den)
        object.__setattr__(self, "num", value.numerator)
        object.__setattr__(self, "den", value.denominator)

    @property
    def value(self) -> Fraction:
        """The value as a Fraction."""
        return Fraction(self.num, self.den)

    @property
    @override
    def exact(self) -> bool:
        return True

    @override
    def evaluate(self, prec: int) -> mpmath.mpf:
        with mpmath.workprec(prec):
            return mpmath.mpf(self.num) / self.den

    @override
    def is_rational(self) -> RationalityVerdict:
        return RationalityVerdict(rational=True, exact=True)

    @override
    def to_json(self) -> dict[str, Any]:
        return {"rat": [self.num, self.den]}

    @override
    def to_sympy(self) -> sympy.Expr:
        return sympy.Rational(self.num, self.den)


@final
@dataclass(frozen=True)
class QuadraticIrrational(RealExpr):
    """The number a + b·√d with rational a, b and square-free d > 1."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        """Validate the expression."""
        if self.b == 0:
            msg = "quadratic irrational needs b != 0"
            raise RealExprError(msg)
        if self.d < 2 or any(e > 1 for e in factorint(self.d).values()):
            msg = f"d = {self.d} is not a square-free integer > 1"
            raise RealExprError(msg)

    @property
    @override
    def exact(self) -> bool:
        return True

    @override
    def evaluate(self, prec: int) -> mpmath.mpf:
        with mpmath.workprec(prec):
            a = mpmath.mpf(self.a.numerator) / self.a.denominator
            b = mpmath.mpf(self.b.numerator) / self.b.denominator
            return a + b * mpmath.sqrt(self.d)

    @override
    def is_rational(self) -> RationalityVerdict:
        return RationalityVerdict(rational=False, exact=True)

    @override
    def to_json(self) -> dict[str, Any]:
        return {
            "quad": [
                self.a.numerator,
                self.a.denominator,
                self.b.numerator,
                self.b.denominator,
                self.d,
            ]
        }

    @override
    def to_sympy(self) -> sympy.Expr:
        return sympy.Rational(self.a.numerator, self.a.denominator) + sympy.Rational(
            self.b.numerator, self.b.denominator
        ) * sympy.sqrt(self.d)

    def partial_quotients(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Return the pre-period and the period of the continued fraction expansion."""
        expansion = continued_fraction(self.to_sympy())
        if expansion and isinstance(expansion[-1], list):
            return tuple(int(x) for x in expansion[:-1]), tuple(
                int(x) for x in expansion[-1]
            )
        return tuple(int(x) for x in expansion), ()


_DECIMAL: Final = re.compile(r"^[+-]?\d+(\.\d+)?$")


@final
@dataclass(frozen=True)
class Decimal(RealExpr):
    """A decimal expansion standing for an irrational number known to precision significant digits."""

    digits: str
    precision: int

    def __post_init__(self) -> None:
        """Validate the digit string."""
        if not _DECIMAL.match(self.digits):
            msg = f"not a decimal number: {self.digits!r}"
            raise RealExprError(msg)
        if self.precision <= 0:
            msg = "decimal precision must be positive"
            raise RealExprError(msg)

    @property
    def resolution(self) -> Fraction:
        """Size of the last written decimal place."""
        _, _, frac = self.digits.partition(".")
        return Fraction(1, 10 ** len(frac))

    @property
    def value(self) -> Fraction:
        """The written value as a Fraction."""
        return Fraction(self.digits)

    @property
    @override
    def exact(self) -> bool:
        return False

    @override
    def evaluate(self, prec: int) -> mpmath.mpf:
        with mpmath.workprec(prec):
            return mpmath.mpf(self.digits)

    @override
    def is_rational(self) -> RationalityVerdict:
        return RationalityVerdict(rational=False, exact=False)

    @override
    def to_json(self) -> dict[str, Any]:
        return {"dec": self.digits, "prec": self.precision}


@final
@dataclass(frozen=True)
class LiouvilleSeries(RealExpr):
    """The truncated series Σ base^(-e_k) for k = 1..truncation.

    exponents None stands for the factorial exponents e_k = k!.
    """

    base: int
    truncation: int
    exponents: tuple[int, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        """Validate the series."""
        if self.base < 2:
            msg = "liouville base must be at least 2"
            raise RealExprError(msg)
        if self.truncation <= 0:
            msg = "liouville truncation must be positive"
            raise RealExprError(msg)
        if self.exponents is not None:
            if len(self.exponents) < self.truncation:
                msg = "fewer exponents than the truncation requires"
                raise RealExprError(msg)
            if any(
                b <= a for a, b in zip(self.exponents, self.exponents[1:], strict=False)
            ) or (self.exponents and self.exponents[0] <= 0):
                msg = "liouville exponents must be positive and strictly increasing"
                raise RealExprError(msg)

    def powers(self) -> tuple[int, ...]:
        """Return the exponents e_1, ..., e_truncation."""
        if self.exponents is None:
            return tuple(factorial(k) for k in range(1, self.truncation + 1))
        return self.exponents[: self.truncation]

    @property
    def value(self) -> Fraction:
        """The truncated value as an exact Fraction."""
        return sum((Fraction(1, self.base**e) for e in self.powers()), Fraction(0))

    def partial_denominators(self) -> tuple[int, ...]:
        """Denominators of the proper partial sums; the best approximations of the series."""
        return tuple(self.base**e for e in self.powers()[:-1])

    @property
    @override
    def exact(self) -> bool:
        return False

    @override
    def evaluate(self, prec: int) -> mpmath.mpf:
        value = self.value
        with mpmath.workprec(prec):
            return mpmath.mpf(value.numerator) / value.denominator

    @override
    def is_rational(self) -> RationalityVerdict:
        return RationalityVerdict(rational=False, exact=False)

    @override
    def to_json(self) -> dict[str, Any]:
        exponents: str | list[int] = (
            "factorial" if self.exponents is None else list(self.exponents)
        )
        return {
            "liouville": {
                "base": self.base,
                "exponents": exponents,
                "trunc": self.truncation,
            }
        }
