"""seeded randomized suites for the invariants of the calculus, the solvers and the tables."""

from collections.abc import Callable
from dataclasses import dataclass, field
from logging import Logger
from math import pi
from typing import Final, final

import numpy as np

from tcohom.calculus import OperatorKind, apply, finite_difference
from tcohom.cohomo import ComplexEngine, Theory, Truncation, stability_scan
from tcohom.errors import TcohomError
from tcohom.lattice import Classification, Lattice, Mode, classify_theta, mode_multiplier_a
from tcohom.primitives import PrimitiveSolution, PrimitiveSolver
from tcohom.specform import (
    CoeffFunction,
    Frame,
    Leg,
    SpectralForm,
    random_f_form,
    random_form,
    random_g_form,
)

# spellchecker:words deldelbar

DEL: Final = OperatorKind.DEL
DELBAR: Final = OperatorKind.DELBAR
D: Final = OperatorKind.D

RADIUS: Final = 1
"""mode radius of the random forms"""

CHOP: Final = 1e-12
"""rounding left by operators on terms that cancel exactly"""

ACYCLIC_MODES: Final = 200
"""nonzero modes the acyclicity suite checks at most"""

ORACLE_TOLERANCE: Final = 1e-6
"""relative agreement of apply with central differences"""


@final
@dataclass(frozen=True)
class CheckContext:
    """Everything a suite needs."""

    lattice: Lattice
    trunc: Truncation
    seed: int
    logger: Logger
    samples: int = 8
    tol: float = 1e-9

    def rng(self, name: str) -> np.random.Generator:
        """A generator seeded by the run seed and the suite name."""
        return np.random.default_rng([self.seed, *name.encode()])

    @property
    def scale(self) -> float:
        """A bound on the size of a single-variable multiplier on the random forms."""
        units = (Mode(1, 0, 0), Mode(0, 1, 0), Mode(0, 0, 1))
        a_max = RADIUS * sum(abs(mode_multiplier_a(self.lattice, m)) for m in units)
        return 1 + a_max + pi * RADIUS + 2 * pi * (2 * RADIUS + 2) + 4

    def small(self, form: SpectralForm, reference: float, order: int = 1) -> bool:
        """form vanishes up to rounding of terms of size reference·scale^order."""
        return form.max_abs() <= self.tol * (1 + reference) * self.scale**order


@final
@dataclass(frozen=True)
class SuiteResult:
    """Outcome of a suite."""

    name: str
    passed: bool
    cases: int = 0
    skipped: bool = False
    failures: tuple[str, ...] = field(default=())

    @property
    def status(self) -> str:
        """PASS, FAIL or SKIP."""
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


def _result(name: str, cases: int, failures: list[str]) -> SuiteResult:
    return SuiteResult(name, not failures, cases, failures=tuple(failures))


def _random(ctx: CheckContext, rng: np.random.Generator, bidegree: tuple[int, int]) -> SpectralForm:
    return random_form(ctx.lattice, rng, bidegree, radius=RADIUS, k_max=1, m_max=1)


def _bidegrees() -> list[tuple[int, int]]:
    return [(p, q) for p in range(3) for q in range(3)]


def d_squared(ctx: CheckContext) -> SuiteResult:
    """d² = ∂² = ∂̄² = 0 and ∂∂̄ = -∂̄∂."""
    rng = ctx.rng("d_squared")
    failures: list[str] = []
    cases = 0
    for _ in range(ctx.samples):
        for bidegree in _bidegrees():
            phi = _random(ctx, rng, bidegree)
            size = phi.max_abs()
            for op in (D, DEL, DELBAR):
                cases += 1
                if not ctx.small(apply(op, apply(op, phi)), size, 2):
                    failures.append(f"{op}² ≠ 0 on a form of bidegree {bidegree}")
            cases += 1
            anti = apply(DEL, apply(DELBAR, phi)).combine(apply(DELBAR, apply(DEL, phi)))
            if not ctx.small(anti, size, 2):
                failures.append(f"∂∂̄ ≠ -∂̄∂ on a form of bidegree {bidegree}")
    return _result("d_squared", cases, failures)


def conjugation(ctx: CheckContext) -> SuiteResult:
    """conj is an involution and intertwines ∂ with ∂̄."""
    rng = ctx.rng("conjugation")
    failures: list[str] = []
    cases = 0
    for _ in range(ctx.samples):
        for bidegree in _bidegrees():
            phi = _random(ctx, rng, bidegree)
            cases += 2
            if phi.conjugate().conjugate() != phi:
                failures.append(f"conj∘conj ≠ id on bidegree {bidegree}")
            swapped = apply(DELBAR, phi).conjugate().combine(-apply(DEL, phi.conjugate()))
            if not ctx.small(swapped, phi.max_abs()):
                failures.append(f"conj ∂̄ ≠ ∂ conj on bidegree {bidegree}")
    return _result("conjugation", cases, failures)


def oracle(ctx: CheckContext) -> SuiteResult:
    """apply agrees with central differences of evaluate at random points."""
    rng = ctx.rng("oracle")
    failures: list[str] = []
    cases = 0
    for _ in range(ctx.samples):
        for bidegree in _bidegrees():
            phi = _random(ctx, rng, bidegree)
            z = (complex(*rng.uniform(-0.5, 0.5, size=2)), complex(*rng.uniform(-0.1, 0.1, size=2)))
            for op in (D, DEL, DELBAR):
                cases += 1
                got = apply(op, phi).evaluate(*z)
                want = finite_difference(op, phi, z)
                error = max(
                    (abs(got.get(f, 0j) - want.get(f, 0j)) for f in set(got) | set(want)),
                    default=0.0,
                )
                scale = max((abs(v) for v in want.values()), default=0.0)
                if error > ORACLE_TOLERANCE * (1 + scale):
                    failures.append(f"{op} differs from finite differences by {error:.3e} on bidegree {bidegree}")
    return _result("oracle", cases, failures)


def leibniz(ctx: CheckContext) -> SuiteResult:
    """d(α∧β) = dα∧β + (-1)^{deg α} α∧dβ."""
    rng = ctx.rng("leibniz")
    failures: list[str] = []
    cases = 0
    # products stay below bidegree (2, 2) after one more leg
    pairs = [(a, b) for a in _bidegrees() for b in _bidegrees() if a[0] + b[0] <= 1 and a[1] + b[1] <= 1]
    for _ in range(ctx.samples):
        a_deg, b_deg = pairs[int(rng.integers(len(pairs)))]
        alpha = random_form(ctx.lattice, rng, a_deg, radius=RADIUS, entries=2, k_max=1, m_max=1)
        beta = random_form(ctx.lattice, rng, b_deg, radius=RADIUS, entries=2, k_max=1, m_max=1)
        for op in (D, DEL, DELBAR):
            cases += 1
            left = apply(op, alpha.wedge(beta))
            right = apply(op, alpha).wedge(beta).combine(
                alpha.wedge(apply(op, beta)).scale((-1) ** alpha.degree)
            )
            size = alpha.max_abs() * beta.max_abs()
            if not ctx.small(left.combine(-right), size):
                failures.append(f"Leibniz rule fails for {op} on {a_deg} ∧ {b_deg}")
    return _result("leibniz", cases, failures)


def _class_input(
    ctx: CheckContext, rng: np.random.Generator, op: OperatorKind, leg: Leg
) -> tuple[SpectralForm, complex]:
    """op applied to a random G-function at nonzero modes, plus C·t₄ on leg."""
    psi = random_g_form(ctx.lattice, rng, (0, 0), radius=RADIUS)
    c = complex(rng.normal() + 1j * rng.normal())
    t4 = SpectralForm.monomial(ctx.lattice, Frame((leg,)), CoeffFunction.monomial(c, 1))
    exact = apply(op, psi.restrict(lambda mode: not mode.is_zero)).chop(CHOP)
    return exact.combine(t4), c


def recomposition(ctx: CheckContext) -> SuiteResult:
    """Every solver recomposes its input; exact inputs have no residual, class inputs keep their class."""
    rng = ctx.rng("recomposition")
    solver = PrimitiveSolver(ctx.lattice, ctx.trunc, ctx.logger, tol=ctx.tol * 100)
    failures: list[str] = []
    cases = 0

    def attempt(name: str, run: Callable[[], float]) -> None:
        nonlocal cases
        cases += 1
        try:
            leftover = run()
        except TcohomError as err:
            failures.append(f"{name}: {err}")
            return
        if leftover > solver.tol:
            failures.append(f"{name}: residual off by {leftover:.3e}")

    def off(solution: PrimitiveSolution, *expected: complex) -> float:
        if not expected:
            return solution.residual.max_abs()
        return max(abs(got - want) for got, want in zip(solution.coefficients, expected, strict=True))

    for _ in range(max(1, ctx.samples // 4)):
        psi = random_form(ctx.lattice, rng, (1, 1), radius=RADIUS, entries=2, k_max=1, m_max=1)
        phi = apply(D, psi)
        attempt("umeno", lambda phi=phi: off(solver.umeno_decompose(phi)))

        eta = random_form(ctx.lattice, rng, (0, 0), radius=RADIUS, entries=2, k_max=1, m_max=1)
        exact = apply(OperatorKind.DELDELBAR, eta)
        attempt("deldelbar", lambda exact=exact: off(solver.deldelbar_primitive(exact)))

        f = random_f_form(ctx.lattice, rng, (1, 0), radius=RADIUS)
        w = apply(DELBAR, f).chop(CHOP)
        attempt("dolbeault", lambda w=w: off(solver.dolbeault_primitive(w)))

        c0, c1 = (complex(x) for x in rng.normal(size=2) + 1j * rng.normal(size=2))
        fn = SpectralForm.monomial(ctx.lattice, Frame(), CoeffFunction.of({(0, 0): c0, (1, 0): c1}))
        attempt("aeppli00", lambda fn=fn, c1=c1: off(solver.aeppli00_reduce(fn), c1))

        w01, c = _class_input(ctx, rng, DELBAR, Leg.DZB1)
        attempt("aeppli01", lambda w=w01, c=c: off(solver.aeppli01_primitive(w), c))

        w10, c = _class_input(ctx, rng, DEL, Leg.DZ1)
        attempt("aeppli10", lambda w=w10, c=c: off(solver.aeppli10_primitive(w), c))

        w = random_g_form(ctx.lattice, rng, (1, 1), radius=RADIUS)
        nonzero = w.restrict(lambda mode: not mode.is_zero)
        attempt("aeppli11", lambda w=nonzero: off(solver.aeppli11_primitive(w)))
        attempt("aeppli11 cover", lambda w=nonzero: off(solver.aeppli11_primitive(w, cover=True)))
    return _result("recomposition", cases, failures)


def acyclicity(ctx: CheckContext) -> SuiteResult:
    """Every nonzero mode block within the truncation radius has vanishing cohomology for every theory.

    Beyond ACYCLIC_MODES nonzero modes a seeded sample of that many is checked.
    """
    certificate = classify_theta(ctx.lattice)
    if certificate.classification is not Classification.THETA:
        ctx.logger.warning(
            "acyclicity skipped: lattice classified %s", certificate.classification
        )
        return SuiteResult("acyclicity", passed=True, skipped=True)

    modes = [mode for mode in ctx.trunc.modes() if not mode.is_zero]
    if len(modes) > ACYCLIC_MODES:
        picked = ctx.rng("acyclicity").choice(len(modes), size=ACYCLIC_MODES, replace=False)
        modes = [modes[int(i)] for i in sorted(picked)]

    engine = ComplexEngine(ctx.lattice, ctx.trunc, ctx.logger)
    failures: list[str] = []
    cases = 0
    for mode in modes:
        for theory in Theory:
            cases += 1
            dims = engine.mode_dims(theory, mode)
            if any(dims.values()):
                failures.append(f"{theory} is not acyclic at mode {mode.as_tuple()}: {dims}")
    return _result("acyclicity", cases, failures)


def stability(ctx: CheckContext) -> SuiteResult:
    """Tables do not change between two truncations."""
    truncations = [Truncation(1, 2, 1, ctx.trunc.tol), ctx.trunc]
    failures: list[str] = []
    for theory in (Theory.BOTT_CHERN, Theory.DERHAM):
        report = stability_scan(theory, ctx.lattice, truncations, logger=ctx.logger)
        failures.extend(f"{theory}: {item}" for item in report.discrepancies)
    return _result("stability", 2, failures)


SUITES: Final[dict[str, Callable[[CheckContext], SuiteResult]]] = {
    "d_squared": d_squared,
    "conjugation": conjugation,
    "leibniz": leibniz,
    "oracle": oracle,
    "recomposition": recomposition,
    "acyclicity": acyclicity,
    "stability": stability,
}


def run_checks(ctx: CheckContext, names: list[str] | None = None) -> list[SuiteResult]:
    """Run the named suites, or all of them, in a fixed order."""
    selected = names or list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        msg = f"unknown suites: {', '.join(unknown)}"
        raise ValueError(msg)

    results = []
    for name in SUITES:
        if name not in selected:
            continue
        ctx.logger.info("running suite %s", name)
        result = SUITES[name](ctx)
        for failure in result.failures:
            ctx.logger.error("%s: %s", name, failure)
        results.append(result)
    return results
