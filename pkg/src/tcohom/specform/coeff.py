"""exp-polynomial coefficient functions c·t₄^k·e^{2πm·t₄}."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from math import pi
from operator import add
from typing import Final, final

import numpy as np

from tcohom.errors import TcohomError
from tcohom.utils import FrozenDict

type TermKey = tuple[int, int]
"""(k, m) of the term t₄^k·e^{2πm·t₄}"""

_HALF_I: Final = 0.5j
"""i/2 = -1/(2i)"""


class TruncationOverflowError(TcohomError, ArithmeticError):
    """Raised when a coefficient would exceed the configured K_max or M_max."""


@final
@dataclass(frozen=True)
class CoeffLimits:
    """Caps on the polynomial degree and the exponential index of coefficient terms."""

    k_max: int = 4
    m_max: int = 4

    def check(self, coeff: "CoeffFunction") -> None:
        """Raise TruncationOverflowError if coeff has a term beyond the limits."""
        if coeff.k_max > self.k_max or coeff.m_max > self.m_max:
            msg = (
                f"coefficient with (K, M) = ({coeff.k_max}, {coeff.m_max}) "
                f"exceeds the limits ({self.k_max}, {self.m_max})"
            )
            raise TruncationOverflowError(msg)

    def join(self, other: "CoeffLimits") -> "CoeffLimits":
        """The larger of two limits."""
        return CoeffLimits(max(self.k_max, other.k_max), max(self.m_max, other.m_max))


def _nonzero(c: complex) -> bool:
    return c != 0


@final
@dataclass(frozen=True)
class CoeffFunction:
    """A finite sum Σ c·t₄^k·e^{2πm·t₄}; zero coefficients are never stored."""

    terms: FrozenDict[TermKey, complex] = field(default=FrozenDict())

    @classmethod
    def of(
        cls, terms: Mapping[TermKey, complex] | Iterable[tuple[TermKey, complex]]
    ) -> "CoeffFunction":
        """Build a normalized coefficient, summing repeated keys and dropping zeros."""
        pairs = list(terms.items() if isinstance(terms, Mapping) else terms)
        for (k, _), _ in pairs:
            if k < 0:
                msg = f"negative polynomial degree {k}"
                raise ValueError(msg)
        return cls(
            FrozenDict.collect(
                ((key, complex(c)) for key, c in pairs), add, keep=_nonzero
            )
        )

    @classmethod
    def constant(cls, c: complex) -> "CoeffFunction":
        """The constant function c."""
        return cls.of({(0, 0): c})

    @classmethod
    def monomial(cls, c: complex, k: int = 0, m: int = 0) -> "CoeffFunction":
        """The single term c·t₄^k·e^{2πm·t₄}."""
        return cls.of({(k, m): c})

    @property
    def is_zero(self) -> bool:
        """Check if this is the zero function."""
        return len(self.terms) == 0

    @property
    def is_constant(self) -> bool:
        """Check if all terms have k = m = 0."""
        return all(key == (0, 0) for key in self.terms)

    @property
    def k_max(self) -> int:
        """Largest polynomial degree, 0 for the zero function."""
        return max((k for k, _ in self.terms), default=0)

    @property
    def m_max(self) -> int:
        """Largest |m|, 0 for the zero function."""
        return max((abs(m) for _, m in self.terms), default=0)

    def max_abs(self) -> float:
        """Largest absolute value of a coefficient."""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __add__(self, other: "CoeffFunction") -> "CoeffFunction":
        """Sum of two coefficients."""
        return CoeffFunction.of([*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "CoeffFunction":
        """Negation."""
        return self.scale(-1)

    def __sub__(self, other: "CoeffFunction") -> "CoeffFunction":
        """Difference of two coefficients."""
        return self + (-other)

    def scale(self, c: complex) -> "CoeffFunction":
        """Multiply by a constant."""
        return CoeffFunction.of((key, c * v) for key, v in self.terms.items())

    def __mul__(self, other: "CoeffFunction") -> "CoeffFunction":
        """Pointwise product, (k, m)·(k', m') ↦ (k + k', m + m')."""
        return CoeffFunction.of(
            ((k1 + k2, m1 + m2), c1 * c2)
            for (k1, m1), c1 in self.terms.items()
            for (k2, m2), c2 in other.terms.items()
        )

    def derivative(self) -> "CoeffFunction":
        """d/dt₄."""
        pairs: list[tuple[TermKey, complex]] = []
        for (k, m), c in self.terms.items():
            if k > 0:
                pairs.append(((k - 1, m), k * c))
            if m != 0:
                pairs.append(((k, m), 2 * pi * m * c))
        return CoeffFunction.of(pairs)

    def del_z2(self, b: complex) -> "CoeffFunction":
        """Coefficient of ∂_{z₂} at a mode with multiplier B: a ↦ (1/2i)·a′ + B·a."""
        return self.derivative().scale(-_HALF_I) + self.scale(b)

    def delbar_z2(self, b: complex) -> "CoeffFunction":
        """Coefficient of ∂̄_{z₂} at a mode with multiplier B: a ↦ -(1/2i)·a′ + B·a."""
        return self.derivative().scale(_HALF_I) + self.scale(b)

    def conj(self) -> "CoeffFunction":
        """Complex conjugate; t₄ and the rates are real."""
        return CoeffFunction.of((key, c.conjugate()) for key, c in self.terms.items())

    def chop(self, tol: float) -> "CoeffFunction":
        """Drop every term with |c| ≤ tol."""
        return CoeffFunction.of((key, c) for key, c in self.terms.items() if abs(c) > tol)

    def evaluate(self, t4: float) -> complex:
        """Value at t₄."""
        return complex(
            sum(
                (c * t4**k * np.exp(2 * pi * m * t4) for (k, m), c in self.terms.items()),
                0j,
            )
        )
