"""test the solvers module on the default lattice."""

from logging import getLogger

import numpy as np
import pytest

from tcohom.calculus import OperatorKind, apply
from tcohom.cohomo import AeppliConvention, Truncation
from tcohom.errors import PreconditionError
from tcohom.lattice import Lattice, Mode, mode_multiplier_a
from tcohom.primitives import (
    BoundKind,
    CoverFlag,
    InconsistentModeError,
    PrimitiveSolver,
    aeppli11_primitive,
    dolbeault_primitive,
    umeno_decompose,
)
from tcohom.specform import (
    CoeffFunction,
    Frame,
    Leg,
    SpectralForm,
    random_f_form,
    random_form,
    random_g_form,
)

# spellchecker:words deldelbar umeno

LATTICE = Lattice.default()
LOGGER = getLogger("tcohom.test")

DZ1 = Frame((Leg.DZ1,))
DZB1 = Frame((Leg.DZB1,))
DZ1_DZB1 = Frame((Leg.DZ1, Leg.DZB1))
T4 = CoeffFunction.monomial(1, 1)


@pytest.fixture
def solver() -> PrimitiveSolver:
    """A solver over the default truncation."""
    return PrimitiveSolver(LATTICE, Truncation(), LOGGER, tol=1e-7)


def test_umeno_keeps_a_constant_class() -> None:
    """Test that dz₁∧dz₂∧dz̄₁ is its own residual."""
    phi = SpectralForm.monomial(LATTICE, Frame((Leg.DZ1, Leg.DZ2, Leg.DZB1)))
    got = umeno_decompose(phi, logger=LOGGER)
    assert got.residual_coefficients() == {"dz1^dz2^dzb1": pytest.approx(1)}
    (psi,) = got.primitives
    assert psi.max_abs() <= 1e-9
    assert got.recomposition_error() <= 1e-9


def test_umeno_on_an_exact_form(solver: PrimitiveSolver) -> None:
    """Test that dψ has no residual."""
    psi = random_form(LATTICE, np.random.default_rng(3), (1, 1), radius=1, k_max=1, m_max=1)
    phi = apply(OperatorKind.D, psi)
    got = solver.umeno_decompose(phi)
    assert got.residual.max_abs() <= 1e-7
    assert apply(OperatorKind.D, got.primitives[0]).combine(-phi).max_abs() <= 1e-7


def test_umeno_needs_a_closed_form(solver: PrimitiveSolver) -> None:
    """Test the d-closed precondition."""
    phi = SpectralForm.monomial(LATTICE, DZ1, T4)
    with pytest.raises(PreconditionError) as info:
        solver.umeno_decompose(phi)
    assert info.value.predicate == "d-closed"


def test_deldelbar_primitive(solver: PrimitiveSolver) -> None:
    """Test η with ∂∂̄η = φ for φ = ∂∂̄e_σ."""
    phi = apply(OperatorKind.DELDELBAR, SpectralForm.monomial(LATTICE, Frame(), 1, Mode(1, 1, 0)))
    got = solver.deldelbar_primitive(phi)
    (eta,) = got.primitives
    assert eta.bidegree == (0, 0)
    assert apply(OperatorKind.DELDELBAR, eta).combine(-phi).max_abs() <= 1e-7
    assert got.certificate.kind is BoundKind.FINITE_INPUT


def test_deldelbar_refuses_a_class(solver: PrimitiveSolver) -> None:
    """Test that dz₁∧dz̄₁ is not d-exact."""
    with pytest.raises(PreconditionError, match="not d-exact") as info:
        solver.deldelbar_primitive(SpectralForm.monomial(LATTICE, DZ1_DZB1))
    assert info.value.predicate == "d-exact"


def test_deldelbar_bidegree(solver: PrimitiveSolver) -> None:
    """Test the bidegree precondition."""
    with pytest.raises(PreconditionError) as info:
        solver.deldelbar_primitive(SpectralForm.monomial(LATTICE, DZ1))
    assert info.value.predicate == "bidegree"


def test_dolbeault_primitive() -> None:
    """Test that dz̄₁ is its own Dolbeault residual."""
    got = dolbeault_primitive(SpectralForm.monomial(LATTICE, DZB1), logger=LOGGER)
    assert got.residual_coefficients() == {"dzb1": pytest.approx(1)}


def test_dolbeault_needs_f(solver: PrimitiveSolver) -> None:
    """Test the in-F precondition."""
    w = SpectralForm.monomial(LATTICE, DZB1, CoeffFunction.monomial(1, 0, 1), Mode(0, 1, 0))
    with pytest.raises(PreconditionError) as info:
        solver.dolbeault_primitive(w)
    assert info.value.predicate == "in-F"


def test_aeppli00_reduce(solver: PrimitiveSolver) -> None:
    """Test the split of 2 + t₄ into a constant and C₂t₄."""
    w = SpectralForm.monomial(LATTICE, Frame(), CoeffFunction.of({(0, 0): 2, (1, 0): 1}))
    got = solver.aeppli00_reduce(w)
    assert got.residual_coefficients() == {"t4": pytest.approx(1)}
    (absorbed,) = got.primitives
    assert absorbed.coefficient(Frame()).terms[0, 0] == pytest.approx(2)


def test_aeppli00_refuses_nonzero_modes(solver: PrimitiveSolver) -> None:
    """Test that a nonzero mode is inconsistent with a ∂∂̄-closed function in G."""
    w = SpectralForm.monomial(LATTICE, Frame(), 1, Mode(1, 0, 0))
    with pytest.raises(InconsistentModeError):
        solver.aeppli00_reduce(w)


def test_aeppli01_primitive(solver: PrimitiveSolver) -> None:
    """Test the t₄dz̄₁ residual of aeppli01."""
    w = SpectralForm.monomial(LATTICE, DZB1, T4)
    got = solver.aeppli01_primitive(w)
    assert got.residual_coefficients() == {"t4 dzb1": pytest.approx(1)}


def test_aeppli10_primitive(solver: PrimitiveSolver) -> None:
    """Test the t₄dz₁ residual of aeppli10."""
    w = SpectralForm.monomial(LATTICE, DZ1, T4.scale(3))
    got = solver.aeppli10_primitive(w)
    assert got.residual_coefficients() == {"t4 dz1": pytest.approx(3)}


def test_aeppli11_residual() -> None:
    """Test the residual of t₄dz₁∧dz̄₁."""
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1, T4)
    got = aeppli11_primitive(w, logger=LOGGER)
    assert got.coefficients == pytest.approx((0, 1, 0, 0))
    assert got.residual_basis == ("dz1^dzb1", "t4 dz1^dzb1", "dz1^dzb2", "dz2^dzb1")
    assert got.cover_flag is CoverFlag.PERIODIC


def test_aeppli11_full_convention() -> None:
    """Test that FULL admits σ = 0 primitives for the constant class."""
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1)
    formal = aeppli11_primitive(w, logger=LOGGER)
    full = aeppli11_primitive(w, logger=LOGGER, convention=AeppliConvention.FULL)
    assert formal.coefficients[0] == pytest.approx(1)
    assert full.recomposition_error() <= 1e-9


@pytest.mark.parametrize(
    ("coeff", "flag"),
    [
        (CoeffFunction.constant(1), CoverFlag.PERIODIC),
        (T4, CoverFlag.UNIVERSAL_COVER_ONLY),
    ],
)
def test_aeppli11_cover(solver: PrimitiveSolver, coeff: CoeffFunction, flag: CoverFlag) -> None:
    """Test the closed-form primitives at a mode with σ₂ = 0."""
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1, coeff, Mode(1, 0, 0))
    got = solver.aeppli11_primitive(w, cover=True)
    assert got.cover_flag is flag
    assert got.residual.is_zero
    assert got.recomposition_error() <= 1e-7
    psi1, psi2 = got.cover_primitives
    assert psi1.is_periodic is psi2.is_periodic is (flag is CoverFlag.PERIODIC)


def test_aeppli11_cover_matches_periodic(solver: PrimitiveSolver) -> None:
    """Test that both paths recompose a form with σ₂ ≠ 0."""
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1, CoeffFunction.monomial(1, 0, 1), Mode(0, 1, 1))
    periodic = solver.aeppli11_primitive(w)
    cover = solver.aeppli11_primitive(w, cover=True)
    assert cover.cover_flag is CoverFlag.PERIODIC
    assert periodic.recomposition_error() <= 1e-7
    assert cover.recomposition_error() <= 1e-7


def test_aeppli_needs_g(solver: PrimitiveSolver) -> None:
    """Test the in-G precondition."""
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1, CoeffFunction.monomial(1, 0, 2), Mode(0, 1, 0))
    with pytest.raises(PreconditionError) as info:
        solver.aeppli11_primitive(w)
    assert info.value.predicate == "in-G"


def _nonzero_modes(form: SpectralForm) -> SpectralForm:
    return form.restrict(lambda mode: not mode.is_zero)


def _class_input(rng: np.random.Generator, op: OperatorKind, leg: Leg) -> tuple[SpectralForm, complex]:
    """op of a random G-function at nonzero modes, plus C·t₄ on leg."""
    psi = _nonzero_modes(random_g_form(LATTICE, rng, (0, 0)))
    c = complex(rng.normal() + 1j * rng.normal())
    t4 = SpectralForm.monomial(LATTICE, Frame((leg,)), CoeffFunction.monomial(c, 1))
    return apply(op, psi).chop(1e-12).combine(t4), c


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("p", [0, 1, 2])
def test_dolbeault_recomposes_random_inputs(solver: PrimitiveSolver, p: int, seed: int) -> None:
    """Test that ∂̄η + c·dz₁..∧dz̄₁ for a random η in F keeps c·dz₁..∧dz̄₁ as its residual."""
    rng = np.random.default_rng(seed)
    eta = random_f_form(LATTICE, rng, (p, 0))
    c = complex(rng.normal() + 1j * rng.normal())
    legs = (Leg.DZ1, Leg.DZ2)[:p]
    known = SpectralForm.monomial(LATTICE, Frame((*legs, Leg.DZB1)), c)
    w = apply(OperatorKind.DELBAR, eta).chop(1e-12).add(known)
    got = solver.dolbeault_primitive(w)
    assert (got.residual - known).max_abs() <= 1e-7
    assert got.recomposition_error() <= 1e-7


@pytest.mark.parametrize("seed", range(4))
def test_aeppli00_recomposes_random_inputs(solver: PrimitiveSolver, seed: int) -> None:
    """Test that C₁ + C₂t₄ keeps C₂ as its class."""
    rng = np.random.default_rng(seed)
    c1, c2 = (complex(x) for x in rng.normal(size=2) + 1j * rng.normal(size=2))
    w = SpectralForm.monomial(LATTICE, Frame(), CoeffFunction.of({(0, 0): c1, (1, 0): c2}))
    got = solver.aeppli00_reduce(w)
    assert got.coefficients == pytest.approx((c2,))
    assert got.recomposition_error() <= 1e-7


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize(
    ("op", "leg"), [(OperatorKind.DELBAR, Leg.DZB1), (OperatorKind.DEL, Leg.DZ1)]
)
def test_aeppli_first_recomposes_random_inputs(
    solver: PrimitiveSolver, op: OperatorKind, leg: Leg, seed: int
) -> None:
    """Test that aeppli01 and aeppli10 keep C·t₄ as the class of random inputs."""
    w, c = _class_input(np.random.default_rng(seed), op, leg)
    if leg is Leg.DZB1:
        got = solver.aeppli01_primitive(w)
    else:
        got = solver.aeppli10_primitive(w)
    assert got.coefficients == pytest.approx((c,), abs=1e-7)
    assert got.recomposition_error() <= 1e-7


def test_aeppli01_nonzero_mode_is_divided(solver: PrimitiveSolver) -> None:
    """Test ψ̃ = (a₁/A)·e_σ for w = a₁e_σdz̄₁ with σ₂ = 0."""
    mode = Mode(1, 0, 0)
    w = SpectralForm.monomial(LATTICE, DZB1, 2, mode)
    got = solver.aeppli01_primitive(w)
    psi, eta = got.primitives
    assert psi.coefficient(Frame(), mode).terms[0, 0] == pytest.approx(2 / mode_multiplier_a(LATTICE, mode))
    assert eta.max_abs() == 0
    assert got.residual.max_abs() <= 1e-12


def test_aeppli01_of_dzb2(solver: PrimitiveSolver) -> None:
    """Test that dz̄₂ is all η̃ and has no class."""
    w = SpectralForm.monomial(LATTICE, Frame((Leg.DZB2,)))
    got = solver.aeppli01_primitive(w)
    psi, eta = got.primitives
    assert got.coefficients == pytest.approx((0,), abs=1e-9)
    assert psi.max_abs() <= 1e-9
    assert eta.coefficient(Frame((Leg.DZB2,))).terms[0, 0] == pytest.approx(1)


def test_umeno_of_dz1_dzb2(solver: PrimitiveSolver) -> None:
    """Test that dz₁∧dz̄₂ = dz₁∧dz₂ + d(2i·t₄dz₁) leaves the class dz₁∧dz₂."""
    phi = SpectralForm.monomial(LATTICE, Frame((Leg.DZ1, Leg.DZB2)))
    got = solver.umeno_decompose(phi)
    assert got.residual_coefficients() == pytest.approx(
        {"dz1^dz2": 1, "dz1^dzb1": 0, "dz2^dzb1": 0}, abs=1e-9
    )
    assert got.recomposition_error() <= 1e-7


@pytest.mark.parametrize(
    ("mode", "coeff"),
    [
        (Mode(1, 0, 0), CoeffFunction.constant(1)),
        (Mode(0, 0, 1), CoeffFunction.constant(1j)),
        (Mode(0, 1, 1), CoeffFunction.monomial(1, 0, -1)),
    ],
)
def test_dolbeault_nonzero_mode(solver: PrimitiveSolver, mode: Mode, coeff: CoeffFunction) -> None:
    """Test η = a/A·e_σ and no residual for a ∂̄-closed a·e_σ·dz̄₁ in F."""
    w = SpectralForm.monomial(LATTICE, DZB1, coeff, mode)
    got = solver.dolbeault_primitive(w)
    (eta,) = got.primitives
    a = mode_multiplier_a(LATTICE, mode)
    for key, value in coeff.terms.items():
        assert eta.coefficient(Frame(), mode).terms[key] == pytest.approx(value / a)
    assert got.residual.max_abs() <= 1e-9


def test_umeno_residual_is_gauge_independent(solver: PrimitiveSolver) -> None:
    """Test that adding dψ changes the primitive but not the residual."""
    rng = np.random.default_rng(11)
    phi = SpectralForm.monomial(LATTICE, Frame((Leg.DZ1, Leg.DZB2)), 3)
    gauge = apply(OperatorKind.D, random_form(LATTICE, rng, (1, 0), radius=1, k_max=1, m_max=1))
    plain = solver.umeno_decompose(phi)
    shifted = solver.umeno_decompose(phi.combine(gauge))
    assert shifted.coefficients == pytest.approx(plain.coefficients, abs=1e-7)
    assert solver.umeno_decompose(phi).coefficients == plain.coefficients


def test_aeppli11_residual_is_gauge_independent(solver: PrimitiveSolver) -> None:
    """Test that adding ∂̄ψ₁ + ∂ψ₂ with ψ₁, ψ₂ in G keeps the coefficients C₁..C₄."""
    rng = np.random.default_rng(12)
    w = SpectralForm.monomial(LATTICE, DZ1_DZB1, T4)
    psi1 = _nonzero_modes(random_g_form(LATTICE, rng, (1, 0)))
    psi2 = _nonzero_modes(random_g_form(LATTICE, rng, (0, 1)))
    gauge = apply(OperatorKind.DELBAR, psi1).combine(apply(OperatorKind.DEL, psi2)).chop(1e-12)
    plain = solver.aeppli11_primitive(w)
    shifted = solver.aeppli11_primitive(w.combine(gauge))
    assert shifted.coefficients == pytest.approx(plain.coefficients, abs=1e-7)
    assert solver.aeppli11_primitive(w).coefficients == plain.coefficients


@pytest.mark.parametrize(("noise", "accepted"), [(1e-10, True), (1e-3, False)])
def test_closedness_uses_the_solver_tolerance(solver: PrimitiveSolver, noise: float, accepted: bool) -> None:
    """Test that d-closedness is judged at the solver's tolerance."""
    phi = SpectralForm.monomial(LATTICE, Frame((Leg.DZ1, Leg.DZ2))).combine(
        SpectralForm.monomial(LATTICE, DZ1_DZB1, T4.scale(noise))
    )
    if accepted:
        got = solver.umeno_decompose(phi)
        assert got.residual_coefficients()["dz1^dz2"] == pytest.approx(1, abs=1e-6)
    else:
        with pytest.raises(PreconditionError, match="d-closed"):
            solver.umeno_decompose(phi)
