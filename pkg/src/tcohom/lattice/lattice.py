"""the lattice Λ generated by (0,1), (1,p), (τ,q), its real coordinates and mode multipliers."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Final, NamedTuple, final

import mpmath
import numpy as np
import sympy

from tcohom.errors import TcohomError

from .realexpr import QuadraticIrrational, Rational, RealExpr

# spellchecker:words mpf mpc workprec eigvalsh


class InvalidLatticeError(TcohomError, ValueError):
    """Raised when lattice parameters do not describe a lattice."""


DEFAULT_PRECISION: Final = 128
"""default working precision in bits"""


@final
@dataclass(frozen=True, order=True)
class Mode:
    """The frequency triple σ of the character exp(2πi(σ₁t₁ + σ₂t₂ + σ₃t₃))."""

    s1: int
    s2: int
    s3: int

    @classmethod
    def zero(cls) -> "Mode":
        """The trivial mode."""
        return cls(0, 0, 0)

    @property
    def is_zero(self) -> bool:
        """Check if this is the trivial mode."""
        return self.s1 == 0 and self.s2 == 0 and self.s3 == 0

    @property
    def radius(self) -> int:
        """The sup norm max |σᵢ|."""
        return max(abs(self.s1), abs(self.s2), abs(self.s3))

    def __add__(self, other: "Mode") -> "Mode":
        """Add two modes componentwise."""
        return Mode(self.s1 + other.s1, self.s2 + other.s2, self.s3 + other.s3)

    def __neg__(self) -> "Mode":
        """Negate a mode."""
        return Mode(-self.s1, -self.s2, -self.s3)

    def as_tuple(self) -> tuple[int, int, int]:
        """Return (σ₁, σ₂, σ₃)."""
        return (self.s1, self.s2, self.s3)


def shell(n: int) -> tuple[Mode, ...]:
    """Return every mode with max |σᵢ| ≤ n in lexicographic order."""
    r = range(-n, n + 1)
    return tuple(Mode(a, b, c) for a in r for b in r for c in r)


class RealCoords(NamedTuple):
    """Real coordinates (t₁, t₂, t₃, t₄) on C²."""

    t1: float
    t2: float
    t3: float
    t4: float


@final
@dataclass(frozen=True)
class Lattice:
    """The lattice generated by (0,1), (1,p) and (τ,q) in C²."""

    tau_re: RealExpr
    tau_im: RealExpr
    p: RealExpr
    q: RealExpr
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        """Check that τ lies in the upper half plane."""
        if self.precision < 53:  # noqa: PLR2004
            msg = f"precision must be at least 53 bits, got {self.precision}"
            raise InvalidLatticeError(msg)
        if self.tau_im.evaluate(self.precision) <= 0:
            msg = "Im τ must be positive"
            raise InvalidLatticeError(msg)

    @classmethod
    def default(cls) -> "Lattice":
        """The lattice τ = i, p = √2, q = 0."""
        return cls(
            tau_re=Rational(0),
            tau_im=Rational(1),
            p=QuadraticIrrational(a=Fraction(0), b=Fraction(1), d=2),
            q=Rational(0),
        )

    def with_precision(self, precision: int) -> "Lattice":
        """Return the same lattice evaluated with a different precision."""
        return Lattice(self.tau_re, self.tau_im, self.p, self.q, precision)

    @property
    def is_toroidal(self) -> bool:
        """p or q is irrational."""
        return not (self.p.is_rational().rational and self.q.is_rational().rational)

    @property
    def exact(self) -> bool:
        """All four parameters are exact expressions with an exact sympy form."""
        return all(
            x.to_sympy() is not None for x in (self.tau_re, self.tau_im, self.p, self.q)
        )

    def values(self) -> tuple[float, float, float, float]:
        """Return (Re τ, Im τ, p, q) as doubles."""
        return _values(self)

    def generators(self) -> tuple[tuple[complex, complex], ...]:
        """Return the three generators (0,1), (1,p), (τ,q)."""
        re, im, p, q = self.values()
        return ((0j, 1 + 0j), (1 + 0j, complex(p)), (complex(re, im), complex(q)))


def to_real_coords(lattice: Lattice, z1: complex, z2: complex) -> RealCoords:
    """Solve z₁ = t₁ + t₃τ and z₂ = p t₁ + t₂ + q t₃ + i t₄ for the real coordinates."""
    re, im, p, q = lattice.values()
    t3 = z1.imag / im
    t1 = z1.real - re * t3
    t2 = z2.real - p * t1 - q * t3
    return RealCoords(t1, t2, t3, z2.imag)


def from_real_coords(lattice: Lattice, t: RealCoords) -> tuple[complex, complex]:
    """Inverse of to_real_coords."""
    re, im, p, q = lattice.values()
    z1 = complex(t.t1 + t.t3 * re, t.t3 * im)
    z2 = complex(p * t.t1 + t.t2 + q * t.t3, t.t4)
    return z1, z2


def mode_multiplier_a(lattice: Lattice, mode: Mode) -> complex:
    """Return A^σ, the multiplier of ∂̄_{z₁} on the character of mode σ."""
    return complex(_multiplier_a_mp(lattice, mode))


def mode_multiplier_b(mode: Mode) -> complex:
    """Return B^σ = iπσ₂."""
    return complex(0.0, np.pi * mode.s2)


@cache
def _multiplier_a_mp(lattice: Lattice, mode: Mode) -> mpmath.mpc:
    with mpmath.workprec(lattice.precision):
        re = lattice.tau_re.evaluate(lattice.precision)
        im = lattice.tau_im.evaluate(lattice.precision)
        p = lattice.p.evaluate(lattice.precision)
        q = lattice.q.evaluate(lattice.precision)
        u = mode.s1 - p * mode.s2
        v = mode.s3 - q * mode.s2
        return (mpmath.pi * 1j / im) * (u * mpmath.mpc(im, -re) + 1j * v)


def multiplier_a_exact(lattice: Lattice, mode: Mode) -> sympy.Expr:
    """Return A^σ/π as an exact sympy expression.

    Only defined for exact lattices.
    """
    re, im, p, q = (
        x.to_sympy() for x in (lattice.tau_re, lattice.tau_im, lattice.p, lattice.q)
    )
    if re is None or im is None or p is None or q is None:
        msg = "lattice has inexact parameters"
        raise InvalidLatticeError(msg)
    u = mode.s1 - p * mode.s2
    v = mode.s3 - q * mode.s2
    return sympy.expand((sympy.I / im) * (u * (im - sympy.I * re) + sympy.I * v))


def divisor_constant(lattice: Lattice) -> float:
    """Return D with dist((σ₂p, σ₂q), Z²) ≤ D·|A^σ| for every mode σ."""
    re, im, _, _ = lattice.values()
    # |A^σ|² = (π/Im τ)² · (u, v) Q (u, v)ᵀ with u = σ₁ - pσ₂, v = σ₃ - qσ₂
    form = np.array([[im * im + re * re, -re], [-re, 1.0]])
    smallest = float(np.linalg.eigvalsh(form)[0])
    return im / (np.pi * np.sqrt(smallest))


@cache
def _values(lattice: Lattice) -> tuple[float, float, float, float]:
    prec = lattice.precision
    return (
        float(lattice.tau_re.evaluate(prec)),
        float(lattice.tau_im.evaluate(prec)),
        float(lattice.p.evaluate(prec)),
        float(lattice.q.evaluate(prec)),
    )
