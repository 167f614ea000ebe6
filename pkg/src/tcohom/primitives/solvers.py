"""per-mode linear solvers for d-, ∂∂̄- and ∂̄-primitives and the Aeppli reductions."""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from functools import cached_property
from logging import Logger, getLogger
from typing import Final, final

import numpy as np
import numpy.typing as npt

from tcohom.calculus import OperatorKind, apply, is_closed
from tcohom.cohomo import (
    AeppliConvention,
    BlockMatrix,
    ComplexEngine,
    ModeBlock,
    NumericBackend,
    RankMethod,
    Truncation,
    degree_block_basis,
)
from tcohom.errors import PreconditionError
from tcohom.lattice import (
    DiophantineCertificate,
    Lattice,
    Mode,
    classify_theta,
    mode_multiplier_a,
)
from tcohom.specform import (
    Bidegree,
    CoeffFunction,
    CoeffLimits,
    Frame,
    Leg,
    SpectralForm,
    TermKey,
    f_sheaf_for,
    frames,
    frames_of_degree,
    sheaf_membership,
)

from .certify import certify_convergence
from .cover import apply_cover, closed_form_primitives
from .solution import (
    CoverFlag,
    InconsistentModeError,
    PrimitiveSolution,
    SingularBlockError,
)

# spellchecker:words deldelbar lstsq rcond umeno

DEL: Final = OperatorKind.DEL
DELBAR: Final = OperatorKind.DELBAR
DELDELBAR: Final = OperatorKind.DELDELBAR

DEFAULT_TOLERANCE: Final = 1e-9
"""relative tolerance of the closedness and recomposition checks"""


@final
@dataclass(frozen=True)
class _Unknown:
    """A primitive: columns of a domain block and the operator into the target block."""

    name: str
    domain: ModeBlock
    basis: BlockMatrix
    operator: BlockMatrix


@final
@dataclass(frozen=True)
class _Residual:
    """A σ = 0 basis vector t₄^k·frame the residual may use."""

    frame: Frame
    k: int = 0

    @property
    def key(self) -> TermKey:
        return (self.k, 0)

    @property
    def label(self) -> str:
        if self.k == 0:
            return str(self.frame)
        if self.frame.legs:
            return f"t4 {self.frame}"
        return "t4"


type _Unknowns = Callable[[ComplexEngine, Mode], list[_Unknown]]


def _lstsq(matrix: BlockMatrix, rhs: npt.NDArray[np.complex128], rcond: float) -> npt.NDArray[np.complex128]:
    if matrix.shape[1] == 0:
        return np.zeros(0, dtype=np.complex128)
    solution, *_ = np.linalg.lstsq(matrix, rhs, rcond=rcond)
    return np.asarray(solution, dtype=np.complex128)


@final
class PrimitiveSolver:
    """Solves operator equations on the truncated complex, one mode block at a time.

    Each block system is underdetermined; the primitives are the minimum-norm solutions.
    Residuals only live on the σ = 0 block and are unique.
    """

    lattice: Lattice
    trunc: Truncation
    convention: AeppliConvention
    tol: float
    _logger: Logger

    def __init__(
        self,
        lattice: Lattice,
        trunc: Truncation,
        logger: Logger,
        convention: AeppliConvention = AeppliConvention.FORMAL,
        tol: float = DEFAULT_TOLERANCE,
    ) -> None:
        """Create a new solver."""
        self.lattice = lattice
        self.trunc = trunc
        self.convention = convention
        self.tol = tol
        self._logger = logger

    @cached_property
    def theta(self) -> DiophantineCertificate:
        """Diophantine certificate of the lattice."""
        return classify_theta(self.lattice)

    # region helpers

    def _engine(self, form: SpectralForm, headroom: int) -> ComplexEngine:
        """An engine whose blocks hold form with headroom extra powers of t₄."""
        radius = max((mode.radius for mode in form.modes()), default=0)
        trunc = replace(
            self.trunc,
            n=max(self.trunc.n, radius),
            k=max(self.trunc.k, form.k_max + 2) + headroom,
            m=max(self.trunc.m, form.m_max),
        )
        return ComplexEngine(self.lattice, trunc, self._logger, RankMethod.NUMERIC, self.convention)

    def _check_lattice(self, form: SpectralForm) -> None:
        if form.lattice != self.lattice:
            msg = "the form lives on a different lattice than the solver"
            raise PreconditionError("same-lattice", msg)

    def _check_bidegree(self, form: SpectralForm, bidegree: Bidegree) -> None:
        if form.bidegree != bidegree:
            msg = f"expected a form of bidegree {bidegree}, got {form.bidegree}"
            raise PreconditionError("bidegree", msg)

    def _check_closed(self, op: OperatorKind, form: SpectralForm, predicate: str) -> None:
        if not is_closed(op, form, self.tol):
            msg = f"the form is not {predicate}"
            raise PreconditionError(predicate, msg)

    def _amplitudes(self, form: SpectralForm) -> dict[Mode, float]:
        """max |a^σ| of every nonzero mode of form."""
        return {
            mode: max(c.max_abs() for c in entries.values())
            for mode, entries in form.by_mode().items()
            if not mode.is_zero
        }

    def _solve(
        self,
        form: SpectralForm,
        engine: ComplexEngine,
        target: Callable[[Mode], ModeBlock],
        unknowns: _Unknowns,
        residuals: Sequence[_Residual],
        names: Sequence[str],
        primitive_degree: Callable[[str], Bidegree | int],
    ) -> tuple[dict[str, SpectralForm], SpectralForm, tuple[complex, ...]]:
        """Solve form = Σ operator(primitive) + residual block by block."""
        lattice = self.lattice
        backend = NumericBackend(engine.threshold_scale)
        limits = engine.trunc.limits
        chop = self.tol * 1e-4 * (1 + form.max_abs())

        def empty(name: str) -> SpectralForm:
            shape = primitive_degree(name)
            if isinstance(shape, int):
                return SpectralForm.mixed_zero(lattice, shape, limits)
            return SpectralForm.zero(lattice, shape, limits)

        primitives = {name: empty(name) for name in names}
        residual: SpectralForm | None = None
        coefficients = [0j] * len(residuals)

        for mode in form.modes():
            block = target(mode)
            rhs = block.vector(form)
            parts = unknowns(engine, mode)
            ops = [u.operator @ u.basis for u in parts]
            lhs = backend.hstack(*ops) if ops else np.zeros((block.dim, 0), dtype=np.complex128)

            columns: list[int] = []
            if mode.is_zero:
                for r in residuals:
                    index = block.position(r.frame, r.key)
                    if index is None:
                        msg = f"residual {r.label} is outside the truncated block"
                        raise SingularBlockError(mode, msg)
                    columns.append(index)
            basis = np.zeros((block.dim, len(columns)), dtype=np.complex128)
            for j, index in enumerate(columns):
                basis[index, j] = 1

            # split off the residual modulo the image, then solve for the primitives
            q = backend.orth(lhs)

            def project(v: npt.NDArray[np.complex128], q: BlockMatrix = q) -> npt.NDArray[np.complex128]:
                return v - q @ (q.conj().T @ v)

            projected = project(basis)
            kept: list[int] = []
            for j in range(len(columns)):
                if backend.rank(projected[:, [*kept, j]]) > len(kept):
                    kept.append(j)
            c = _lstsq(projected[:, kept], project(rhs), self.tol)
            remainder = rhs - basis[:, kept] @ c
            x = _lstsq(lhs, remainder, self.tol)

            error = float(np.linalg.norm(lhs @ x - remainder)) if rhs.size else 0.0
            if error > self.tol * (1 + float(np.linalg.norm(rhs))):
                msg = f"mode {mode.as_tuple()} has no solution (error {error:.3e})"
                raise SingularBlockError(mode, msg)

            for j, value in zip(kept, c.tolist(), strict=True):
                coefficients[j] = complex(value)
            if kept:
                part = block.to_form(lattice, basis[:, kept] @ c, limits=limits, chop=chop)
                residual = part if residual is None else residual.combine(part)

            offset = 0
            for unknown, op in zip(parts, ops, strict=True):
                width = op.shape[1]
                vector = unknown.basis @ x[offset : offset + width]
                offset += width
                piece = unknown.domain.to_form(lattice, vector, limits=limits, chop=chop)
                primitives[unknown.name] = primitives[unknown.name].combine(piece)

            self._logger.debug(
                "mode %s: block %d, image rank %d, residual %d",
                mode.as_tuple(),
                block.dim,
                q.shape[1],
                len(kept),
            )

        if residual is None:
            residual = form.scale(0).with_limits(limits)
        return primitives, residual, tuple(coefficients)

    def _solution(
        self,
        form: SpectralForm,
        primitives: tuple[SpectralForm, ...],
        image: SpectralForm,
        residual: SpectralForm,
        residuals: Sequence[_Residual],
        coefficients: tuple[complex, ...],
    ) -> PrimitiveSolution:
        solution = PrimitiveSolution(
            input=form,
            primitives=primitives,
            image=image,
            residual=residual,
            residual_basis=tuple(r.label for r in residuals),
            coefficients=coefficients,
            certificate=certify_convergence(
                self._amplitudes(form), self.lattice, self.theta
            ),
        )
        error = solution.recomposition_error()
        if error > self.tol * (1 + form.max_abs()):
            msg = f"recomposition error {error:.3e} exceeds the tolerance"
            raise SingularBlockError(Mode.zero(), msg)
        return solution

    # endregion

    # region bott-chern side

    def umeno_decompose(self, phi: SpectralForm) -> PrimitiveSolution:
        """Write a d-closed φ as χ + dψ with χ constant on wedges of dz₁, dz₂, dz̄₁."""
        self._check_lattice(phi)
        self._check_closed(OperatorKind.D, phi, "d-closed")

        k = phi.degree
        engine = self._engine(phi, 1)
        residuals = [_Residual(f) for f in frames_of_degree(k) if Leg.DZB2 not in f.legs]

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            if k == 0:
                return []
            domain = degree_block_basis(mode, k - 1, engine.trunc)
            return [_Unknown("psi", domain, np.eye(domain.dim), engine.d(mode, k - 1))]

        found, residual, coefficients = self._solve(
            phi,
            engine,
            lambda mode: degree_block_basis(mode, k, engine.trunc),
            unknowns,
            residuals,
            ["psi"] if k else [],
            lambda _: k - 1,
        )
        if k == 0:
            image = phi.scale(0)
            return self._solution(phi, (), image, residual, residuals, coefficients)
        psi = found["psi"]
        return self._solution(
            phi, (psi,), apply(OperatorKind.D, psi), residual, residuals, coefficients
        )

    def deldelbar_primitive(self, phi: SpectralForm) -> PrimitiveSolution:
        """Find η with φ = ∂∂̄η for a d-exact φ of bidegree (k, l), k, l ≥ 1."""
        self._check_lattice(phi)
        if phi.bidegree is None or min(phi.bidegree) < 1:
            msg = f"expected a bidegree (k, l) with k, l ≥ 1, got {phi.bidegree}"
            raise PreconditionError("bidegree", msg)
        p, q = phi.bidegree

        umeno = self.umeno_decompose(phi)
        if umeno.residual.max_abs() > self.tol * (1 + phi.max_abs()):
            classes = ", ".join(
                f"{c:.6g}·{label}" for label, c in umeno.residual_coefficients().items() if c
            )
            msg = f"the form is not d-exact: residual {classes}"
            raise PreconditionError("d-exact", msg)

        engine = self._engine(phi, 2)

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            domain = engine.block(mode, (p - 1, q - 1))
            return [_Unknown("eta", domain, np.eye(domain.dim), engine.op(DELDELBAR, mode, (p - 1, q - 1)))]

        found, residual, coefficients = self._solve(
            phi,
            engine,
            lambda mode: engine.block(mode, (p, q)),
            unknowns,
            [],
            ["eta"],
            lambda _: (p - 1, q - 1),
        )
        eta = found["eta"]
        return self._solution(phi, (eta,), apply(DELDELBAR, eta), residual, [], coefficients)

    def dolbeault_primitive(self, w: SpectralForm) -> PrimitiveSolution:
        """Write a ∂̄-closed w in F^{p,q} as ∂̄η + a constant form on Λ^p{dz₁, dz₂} ∧ Λ^q{dz̄₁}."""
        self._check_lattice(w)
        if w.bidegree is None:
            msg = "expected a form of pure bidegree"
            raise PreconditionError("bidegree", msg)
        if not sheaf_membership(w, self.tol).in_f:
            msg = "the form is not in F^{p,q}"
            raise PreconditionError("in-F", msg)
        self._check_closed(DELBAR, w, "∂̄-closed")
        p, q = w.bidegree

        engine = self._engine(w, 0)
        residuals = [_Residual(f) for f in frames(p, q) if Leg.DZB2 not in f.legs]

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            if q == 0:
                return []
            domain = engine.block(mode, (p, q - 1))
            basis = engine.sheaf_basis(mode, (p, q - 1), f_sheaf_for)
            return [_Unknown("eta", domain, basis, engine.op(DELBAR, mode, (p, q - 1)))]

        found, residual, coefficients = self._solve(
            w,
            engine,
            lambda mode: engine.block(mode, (p, q)),
            unknowns,
            residuals,
            ["eta"] if q else [],
            lambda _: (p, q - 1),
        )
        if q == 0:
            return self._solution(w, (), w.scale(0), residual, residuals, coefficients)
        eta = found["eta"]
        return self._solution(w, (eta,), apply(DELBAR, eta), residual, residuals, coefficients)

    # endregion

    # region aeppli side

    def _check_aeppli(self, w: SpectralForm, bidegree: Bidegree) -> None:
        self._check_lattice(w)
        self._check_bidegree(w, bidegree)
        if not sheaf_membership(w, self.tol).in_g:
            msg = f"the form is not in G^{bidegree}"
            raise PreconditionError("in-G", msg)

    def _admits_primitives(self, mode: Mode) -> bool:
        return not (mode.is_zero and self.convention is AeppliConvention.FORMAL)

    def aeppli00_reduce(self, w: SpectralForm) -> PrimitiveSolution:
        """Split a ∂∂̄-closed function w in G into O + Ō plus C₂·t₄."""
        self._check_aeppli(w, (0, 0))
        for mode in w.modes():
            if not mode.is_zero:
                msg = (
                    f"mode {mode.as_tuple()} is nonzero but a ∂∂̄-closed function in G "
                    "has no nonzero modes"
                )
                raise InconsistentModeError(mode, msg)
        self._check_closed(DELDELBAR, w, "∂∂̄-closed")

        engine = self._engine(w, 0)
        empty = Frame(())
        residuals = [_Residual(empty, 1)]

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            domain = engine.block(mode, (0, 0))
            functions = engine.backend.hstack(
                engine.backend.null_space(engine.op(DELBAR, mode, (0, 0))),
                engine.backend.null_space(engine.op(DEL, mode, (0, 0))),
            )
            return [_Unknown("absorbed", domain, functions, np.eye(domain.dim))]

        found, residual, coefficients = self._solve(
            w,
            engine,
            lambda mode: engine.block(mode, (0, 0)),
            unknowns,
            residuals,
            ["absorbed"],
            lambda _: (0, 0),
        )
        absorbed = found["absorbed"]
        return self._solution(w, (absorbed,), absorbed, residual, residuals, coefficients)

    def _aeppli_first(self, w: SpectralForm, holomorphic: bool) -> PrimitiveSolution:
        """aeppli01 (holomorphic False) and its conjugate aeppli10."""
        bidegree = (1, 0) if holomorphic else (0, 1)
        self._check_aeppli(w, bidegree)
        self._check_closed(DELDELBAR, w, "∂∂̄-closed")

        # ψ̃ enters through op; η̃ lies in the kernel of the other operator
        op, other = (DEL, DELBAR) if holomorphic else (DELBAR, DEL)
        leg = Leg.DZ1 if holomorphic else Leg.DZB1
        engine = self._engine(w, 1)
        residuals = [_Residual(Frame((leg,)), 1)]

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            target = engine.block(mode, bidegree)
            out = []
            if self._admits_primitives(mode):
                out.append(
                    _Unknown(
                        "psi",
                        engine.block(mode, (0, 0)),
                        engine.g_basis(mode, (0, 0)),
                        engine.op(op, mode, (0, 0)),
                    )
                )
            kernel = engine.backend.null_space(engine.op(other, mode, bidegree))
            out.append(_Unknown("eta", target, kernel, np.eye(target.dim)))
            return out

        # nonzero modes have closed-form primitives; only σ = 0 goes through the block solve
        found, residual, coefficients = self._solve(
            w.restrict(lambda mode: mode.is_zero),
            engine,
            lambda mode: engine.block(mode, bidegree),
            unknowns,
            residuals,
            ["psi", "eta"],
            lambda name: (0, 0) if name == "psi" else bidegree,
        )
        psi = found["psi"].combine(self._divide_leg(w, leg, engine.trunc.limits))
        eta = found["eta"]
        image = apply(op, psi).combine(eta)
        return self._solution(w, (psi, eta), image, residual, residuals, coefficients)

    def _divide_leg(self, w: SpectralForm, leg: Leg, limits: CoeffLimits) -> SpectralForm:
        """ψ̃ with ψ̃^σ = a^σ/λ^σ for σ ≠ 0.

        a^σ is the coefficient of leg and λ^σ the multiplier of the z₁ operator adding it:
        A^σ for dz̄₁ and -conj(A^σ) for dz₁. ∂∂̄w = 0 forces the remaining η̃^σ to vanish.
        """
        frame = Frame((leg,))
        items: list[tuple[Mode, Frame, CoeffFunction]] = []
        for mode, entries in w.by_mode().items():
            if mode.is_zero or frame not in entries:
                continue
            a = mode_multiplier_a(self.lattice, mode)
            factor = -a.conjugate() if leg.holomorphic else a
            if abs(factor) <= self.tol:
                msg = f"mode {mode.as_tuple()} has a vanishing multiplier"
                raise SingularBlockError(mode, msg)
            items.append((mode, Frame(()), entries[frame].scale(1 / factor)))
        return SpectralForm.build(self.lattice, items, bidegree=(0, 0), limits=limits)

    def aeppli01_primitive(self, w: SpectralForm) -> PrimitiveSolution:
        """Write w in G^{0,1} ∩ Ker ∂∂̄ as ∂̄ψ̃ + η̃ + C·t₄dz̄₁ with ∂η̃ = 0."""
        return self._aeppli_first(w, holomorphic=False)

    def aeppli10_primitive(self, w: SpectralForm) -> PrimitiveSolution:
        """Write w in G^{1,0} ∩ Ker ∂∂̄ as ∂ψ̃ + η̃ + C·t₄dz₁ with ∂̄η̃ = 0."""
        return self._aeppli_first(w, holomorphic=True)

    def aeppli11_primitive(self, w: SpectralForm, *, cover: bool = False) -> PrimitiveSolution:
        """Write w in G^{1,1} as ∂̄ψ̃₁ + ∂ψ̃₂ + (C₂t₄ + C₁)dz₁∧dz̄₁ + C₃dz₁∧dz̄₂ + C₄dz₂∧dz̄₁.

        With cover the primitives follow the closed-form expressions and may only exist on the universal cover.
        """
        self._check_aeppli(w, (1, 1))
        dz11 = Frame((Leg.DZ1, Leg.DZB1))
        residuals = [
            _Residual(dz11),
            _Residual(dz11, 1),
            _Residual(Frame((Leg.DZ1, Leg.DZB2))),
            _Residual(Frame((Leg.DZ2, Leg.DZB1))),
        ]
        if cover:
            return self._aeppli11_cover(w, residuals)

        engine = self._engine(w, 1)

        def unknowns(engine: ComplexEngine, mode: Mode) -> list[_Unknown]:
            if not self._admits_primitives(mode):
                return []
            return [
                _Unknown(
                    "psi1",
                    engine.block(mode, (1, 0)),
                    engine.g_basis(mode, (1, 0)),
                    engine.op(DELBAR, mode, (1, 0)),
                ),
                _Unknown(
                    "psi2",
                    engine.block(mode, (0, 1)),
                    engine.g_basis(mode, (0, 1)),
                    engine.op(DEL, mode, (0, 1)),
                ),
            ]

        found, residual, coefficients = self._solve(
            w,
            engine,
            lambda mode: engine.block(mode, (1, 1)),
            unknowns,
            residuals,
            ["psi1", "psi2"],
            lambda name: (1, 0) if name == "psi1" else (0, 1),
        )
        psi1, psi2 = found["psi1"], found["psi2"]
        image = apply(DELBAR, psi1).combine(apply(DEL, psi2))
        return self._solution(w, (psi1, psi2), image, residual, residuals, coefficients)

    def _aeppli11_cover(self, w: SpectralForm, residuals: Sequence[_Residual]) -> PrimitiveSolution:
        psi1, psi2, residual = closed_form_primitives(w)
        image = apply_cover(DELBAR, psi1) + apply_cover(DEL, psi2)
        if image.linear.max_abs() > self.tol * (1 + w.max_abs()):
            msg = "the closed-form primitives leave a term in Re z₂"
            raise SingularBlockError(Mode.zero(), msg)

        # σ = 0 coefficients in the order of residuals
        coefficients = tuple(
            residual.coefficient(r.frame, Mode.zero()).terms.get(r.key, 0j) for r in residuals
        )
        solution = PrimitiveSolution(
            input=w,
            primitives=(psi1.periodic, psi2.periodic),
            image=image.periodic,
            residual=residual,
            residual_basis=tuple(r.label for r in residuals),
            coefficients=coefficients,
            certificate=certify_convergence(self._amplitudes(w), self.lattice, self.theta),
            cover_flag=CoverFlag.PERIODIC
            if psi1.is_periodic and psi2.is_periodic
            else CoverFlag.UNIVERSAL_COVER_ONLY,
            cover_primitives=(psi1, psi2),
        )
        error = solution.recomposition_error()
        if error > self.tol * (1 + w.max_abs()):
            msg = f"recomposition error {error:.3e} exceeds the tolerance"
            raise SingularBlockError(Mode.zero(), msg)
        return solution

    # endregion


def _solver(
    lattice: Lattice,
    trunc: Truncation | None,
    logger: Logger | None,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> PrimitiveSolver:
    return PrimitiveSolver(
        lattice, trunc or Truncation(), logger or getLogger("tcohom"), convention
    )


def umeno_decompose(
    phi: SpectralForm, trunc: Truncation | None = None, *, logger: Logger | None = None
) -> PrimitiveSolution:
    """φ = χ + dψ with χ constant."""
    return _solver(phi.lattice, trunc, logger).umeno_decompose(phi)


def deldelbar_primitive(
    phi: SpectralForm, trunc: Truncation | None = None, *, logger: Logger | None = None
) -> PrimitiveSolution:
    """φ = ∂∂̄η for d-exact φ."""
    return _solver(phi.lattice, trunc, logger).deldelbar_primitive(phi)


def dolbeault_primitive(
    w: SpectralForm, trunc: Truncation | None = None, *, logger: Logger | None = None
) -> PrimitiveSolution:
    """w = ∂̄η + constant residual."""
    return _solver(w.lattice, trunc, logger).dolbeault_primitive(w)


def aeppli00_reduce(
    w: SpectralForm,
    trunc: Truncation | None = None,
    *,
    logger: Logger | None = None,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> PrimitiveSolution:
    """w = (O + Ō part) + C₂t₄."""
    return _solver(w.lattice, trunc, logger, convention).aeppli00_reduce(w)


def aeppli01_primitive(
    w: SpectralForm,
    trunc: Truncation | None = None,
    *,
    logger: Logger | None = None,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> PrimitiveSolution:
    """w = ∂̄ψ̃ + η̃ + C·t₄dz̄₁."""
    return _solver(w.lattice, trunc, logger, convention).aeppli01_primitive(w)


def aeppli10_primitive(
    w: SpectralForm,
    trunc: Truncation | None = None,
    *,
    logger: Logger | None = None,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> PrimitiveSolution:
    """w = ∂ψ̃ + η̃ + C·t₄dz₁."""
    return _solver(w.lattice, trunc, logger, convention).aeppli10_primitive(w)


def aeppli11_primitive(
    w: SpectralForm,
    trunc: Truncation | None = None,
    *,
    logger: Logger | None = None,
    convention: AeppliConvention = AeppliConvention.FORMAL,
    cover: bool = False,
) -> PrimitiveSolution:
    """w = ∂̄ψ̃₁ + ∂ψ̃₂ + residual in span{dz₁∧dz̄₁, t₄dz₁∧dz̄₁, dz₁∧dz̄₂, dz₂∧dz̄₁}."""
    return _solver(w.lattice, trunc, logger, convention).aeppli11_primitive(w, cover=cover)
