"""seeded random forms for property checks."""

import numpy as np

from tcohom.lattice import Lattice, Mode

from .coeff import CoeffFunction, CoeffLimits
from .form import Bidegree, SpectralForm
from .frame import Frame, Leg, frames, frames_of_degree
from .membership import FunctionSheaf, g_sheaf_for


def random_mode(rng: np.random.Generator, radius: int, *, nonzero: bool = False) -> Mode:
    """A uniformly random mode with max |σᵢ| ≤ radius."""
    while True:
        mode = Mode(*(int(x) for x in rng.integers(-radius, radius + 1, size=3)))
        if not (nonzero and mode.is_zero):
            return mode


def random_coeff(
    rng: np.random.Generator, k_max: int, m_max: int, terms: int = 2
) -> CoeffFunction:
    """A random coefficient with up to terms nonzero terms."""
    ks = rng.integers(0, k_max + 1, size=terms)
    ms = rng.integers(-m_max, m_max + 1, size=terms)
    cs = rng.normal(size=terms) + 1j * rng.normal(size=terms)
    return CoeffFunction.of(
        ((int(k), int(m)), complex(c)) for k, m, c in zip(ks, ms, cs, strict=True)
    )


def random_form(
    lattice: Lattice,
    rng: np.random.Generator,
    bidegree: Bidegree | None = None,
    *,
    degree: int | None = None,
    radius: int = 2,
    entries: int = 3,
    k_max: int = 2,
    m_max: int = 2,
    limits: CoeffLimits | None = None,
) -> SpectralForm:
    """A random form of the given bidegree, or mixed of the given degree.

    Modes are drawn with max |σᵢ| ≤ radius, coefficients with K ≤ k_max and |m| ≤ m_max.
    """
    basis: tuple[Frame, ...]
    if bidegree is not None:
        basis = frames(*bidegree)
        degree = sum(bidegree)
    elif degree is not None:
        basis = frames_of_degree(degree)
    else:
        msg = "random_form needs a bidegree or a degree"
        raise ValueError(msg)

    items = [
        (
            random_mode(rng, radius),
            basis[int(rng.integers(len(basis)))],
            random_coeff(rng, k_max, m_max),
        )
        for _ in range(entries if basis else 0)
    ]
    return SpectralForm.build(
        lattice, items, bidegree=bidegree, degree=degree, limits=limits
    )


def _sheaf_coeff(rng: np.random.Generator, sheaf: FunctionSheaf, mode: Mode) -> CoeffFunction:
    c1, c2 = rng.normal(size=2) + 1j * rng.normal(size=2)
    s2 = mode.s2
    match sheaf:
        case FunctionSheaf.F:
            return CoeffFunction.monomial(complex(c1), 0, -s2)
        case FunctionSheaf.F_BAR:
            return CoeffFunction.monomial(complex(c1), 0, s2)
        case FunctionSheaf.G if s2 == 0:
            return CoeffFunction.of({(0, 0): complex(c1), (1, 0): complex(c2)})
        case FunctionSheaf.G:
            return CoeffFunction.of({(0, s2): complex(c1), (0, -s2): complex(c2)})
    msg = f"unknown sheaf {sheaf}"
    raise ValueError(msg)


def random_g_form(
    lattice: Lattice,
    rng: np.random.Generator,
    bidegree: Bidegree,
    *,
    radius: int = 1,
    entries: int = 3,
    limits: CoeffLimits | None = None,
) -> SpectralForm:
    """A random form in G^{p,q} for p, q ≤ 1.

    Coefficients are e^{-2πσ₂t₄} on F frames, e^{2πσ₂t₄} on F̄ frames and the general solution of
    ∂_{z₂}∂̄_{z₂}a = 0 on G frames.
    """
    basis = [(f, s) for f in frames(*bidegree) if (s := g_sheaf_for(f)) is not None]
    if not basis:
        msg = f"G^{bidegree} is zero"
        raise ValueError(msg)

    items = []
    for _ in range(entries):
        mode = random_mode(rng, radius)
        frame, sheaf = basis[int(rng.integers(len(basis)))]
        items.append((mode, frame, _sheaf_coeff(rng, sheaf, mode)))
    return SpectralForm.build(lattice, items, bidegree=bidegree, limits=limits)


def random_f_form(
    lattice: Lattice,
    rng: np.random.Generator,
    bidegree: Bidegree,
    *,
    radius: int = 1,
    entries: int = 3,
    limits: CoeffLimits | None = None,
) -> SpectralForm:
    """A random form in F^{p,q}: frames without dz̄₂ and coefficients e^{-2πσ₂t₄}."""
    basis = [f for f in frames(*bidegree) if Leg.DZB2 not in f.legs]
    if not basis:
        msg = f"F^{bidegree} is zero"
        raise ValueError(msg)

    items = []
    for _ in range(entries):
        mode = random_mode(rng, radius)
        frame = basis[int(rng.integers(len(basis)))]
        items.append((mode, frame, _sheaf_coeff(rng, FunctionSheaf.F, mode)))
    return SpectralForm.build(lattice, items, bidegree=bidegree, limits=limits)
