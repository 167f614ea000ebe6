"""the rank engine behind every cohomology table."""

from collections.abc import Callable
from functools import cached_property
from logging import Logger, getLogger
from typing import Final, final

import numpy as np

from tcohom.calculus import OperatorKind
from tcohom.errors import NotExactError
from tcohom.lattice import (
    Classification,
    Lattice,
    Mode,
    classify_theta,
    divisor_decay_profile,
)
from tcohom.specform import Bidegree, Frame, FunctionSheaf, SpectralForm, g_sheaf_for
from tcohom.utils import FrozenDict

from .blocks import (
    BlockMatrix,
    ModeBlock,
    RankMethod,
    block_operator,
    coeff_keys,
    coefficient_operator,
    degree_block_basis,
    mode_block_basis,
)
from .linalg import Backend, ExactBackend, NumericBackend, as_complex, rref
from .tables import (
    AeppliConvention,
    CohomologyTable,
    DimKey,
    Theory,
    nondeldelbar_from_tables,
)
from .truncation import Truncation

# spellchecker:words deldelbar delconj

DEL: Final = OperatorKind.DEL
DELBAR: Final = OperatorKind.DELBAR
DELDELBAR: Final = OperatorKind.DELDELBAR

type SheafRule = Callable[[Frame], FunctionSheaf | None]
"""picks the function sheaf of the coefficient at a frame"""

type Quotient = tuple[ModeBlock, BlockMatrix, BlockMatrix]
"""the ambient block, numerator columns and denominator columns of a quotient"""

G_ROUTE_KEYS: Final[tuple[Bidegree, ...]] = ((0, 0), (1, 0), (0, 1), (1, 1))
"""bidegrees where the Aeppli groups have a G-complex description"""


@final
class ComplexEngine:
    """Computes cohomology of the truncated complex one mode block at a time.

    Every operator preserves the mode, so each quotient is a direct sum over the shell.
    """

    lattice: Lattice
    trunc: Truncation
    method: RankMethod
    convention: AeppliConvention
    _logger: Logger
    _ops: dict[tuple[OperatorKind, Mode, Bidegree], BlockMatrix]
    _g: dict[tuple[Mode, Bidegree, SheafRule], BlockMatrix]

    def __init__(
        self,
        lattice: Lattice,
        trunc: Truncation,
        logger: Logger,
        method: RankMethod = RankMethod.NUMERIC,
        convention: AeppliConvention = AeppliConvention.FORMAL,
    ) -> None:
        """Create a new engine."""
        if method is RankMethod.EXACT and not lattice.exact:
            msg = "exact ranks need every lattice parameter to be rational or quadratic"
            raise NotExactError(msg)
        self.lattice = lattice
        self.trunc = trunc
        self.method = method
        self.convention = convention
        self._logger = logger
        self._ops = {}
        self._g = {}

    # region backends

    @cached_property
    def threshold_scale(self) -> float:
        """Relative rank threshold tol·min(1, min |A^σ|) over the nonzero modes of the shell."""
        rows = divisor_decay_profile(self.lattice, self.trunc.n).rows
        a_min = rows[-1][1] if rows else 1.0
        return self.trunc.tol * min(1.0, a_min)

    @cached_property
    def backend(self) -> Backend:
        """The backend ranking the blocks."""
        if self.method is RankMethod.EXACT:
            return ExactBackend()
        return NumericBackend(self.threshold_scale)

    @cached_property
    def numeric(self) -> NumericBackend:
        """A numeric backend, also used for representatives of exact computations."""
        return NumericBackend(self.threshold_scale)

    @cached_property
    def formal_only(self) -> bool:
        """The lattice is not certified theta."""
        certificate = classify_theta(self.lattice)
        if certificate.classification is not Classification.THETA:
            self._logger.warning(
                "lattice classified %s (%s): tables are formal/truncated only",
                certificate.classification,
                certificate.diagnostic,
            )
            return True
        return False

    # endregion

    # region blocks and operators

    def block(self, mode: Mode, bidegree: Bidegree) -> ModeBlock:
        """The (p, q) block of mode; empty out of range."""
        return mode_block_basis(mode, bidegree, self.trunc)

    def op(self, kind: OperatorKind, mode: Mode, bidegree: Bidegree) -> BlockMatrix:
        """Matrix of ∂, ∂̄ or ∂∂̄ on the (p, q) block of mode."""
        key = (kind, mode, bidegree)
        if key not in self._ops:
            p, q = bidegree
            target = {DEL: (p + 1, q), DELBAR: (p, q + 1), DELDELBAR: (p + 1, q + 1)}[kind]
            self._ops[key] = block_operator(
                kind,
                self.lattice,
                self.block(mode, bidegree),
                self.block(mode, target),
                self.trunc,
                self.method,
            )
        return self._ops[key]

    def d(self, mode: Mode, degree: int) -> BlockMatrix:
        """Matrix of d from the degree k block of mode to the degree k + 1 block."""
        return block_operator(
            OperatorKind.D,
            self.lattice,
            degree_block_basis(mode, degree, self.trunc),
            degree_block_basis(mode, degree + 1, self.trunc),
            self.trunc,
            self.method,
        )

    def g_basis(self, mode: Mode, bidegree: Bidegree) -> BlockMatrix:
        """Columns spanning G^{p,q} inside the (p, q) block of mode."""
        return self.sheaf_basis(mode, bidegree, g_sheaf_for)

    def sheaf_basis(self, mode: Mode, bidegree: Bidegree, rule: SheafRule) -> BlockMatrix:
        """Columns spanning the forms whose coefficient at each frame lies in the sheaf rule asks for.

        A coefficient in F is killed by ∂̄_{z₂}, one in F̄ by ∂_{z₂} and one in G by both composed.
        Frames the rule maps to None are forced to vanish.
        """
        key = (mode, bidegree, rule)
        if key in self._g:
            return self._g[key]

        block = self.block(mode, bidegree)
        keys = coeff_keys(self.trunc)
        key_index = {k: i for i, k in enumerate(keys)}
        exact = self.method is RankMethod.EXACT

        def coefficient(kind: OperatorKind) -> BlockMatrix:
            return coefficient_operator(kind, self.lattice, mode, self.trunc, self.method)

        parts: list[BlockMatrix] = []
        for frame in block.frames:
            cols = block.indices(frame)
            src = [key_index[block.elements[j].key] for j in cols]
            local: BlockMatrix = np.zeros(
                (len(keys), block.dim), dtype=object if exact else np.complex128
            )
            match rule(frame):
                case FunctionSheaf.F:
                    matrix = coefficient(OperatorKind.DELBAR_Z2)
                case FunctionSheaf.F_BAR:
                    matrix = coefficient(OperatorKind.DEL_Z2)
                case FunctionSheaf.G:
                    matrix = coefficient(OperatorKind.DEL_Z2) @ coefficient(
                        OperatorKind.DELBAR_Z2
                    )
                case None:
                    matrix = np.eye(len(keys), dtype=local.dtype)
            local[:, cols] = matrix[:, src]
            parts.append(local)

        if not parts:
            self._g[key] = np.zeros((0, 0), dtype=object if exact else np.complex128)
        else:
            self._g[key] = self.backend.null_space(self.backend.vstack(*parts))
        return self._g[key]

    # endregion

    # region quotients

    def quotient(self, theory: Theory, mode: Mode, key: DimKey) -> Quotient:
        """Numerator and denominator of a theory at one mode block."""
        if theory is Theory.DERHAM:
            (k,) = key
            block = degree_block_basis(mode, k, self.trunc)
            return block, self._null(self.d(mode, k)), self.d(mode, k - 1)

        p, q = key
        match theory:
            case Theory.DOLBEAULT:
                return self._simple(DELBAR, mode, (p, q), (p, q - 1))
            case Theory.DEL_CONJUGATE:
                return self._simple(DEL, mode, (p, q), (p - 1, q))
            case Theory.BOTT_CHERN:
                return self._bott_chern(mode, p, q)
            case Theory.AEPPLI:
                return self._aeppli(mode, p, q)
            case Theory.THIRD:
                return self._third(mode, p, q)
        msg = f"unknown theory {theory}"
        raise ValueError(msg)

    def _null(self, matrix: BlockMatrix) -> BlockMatrix:
        return self.backend.null_space(matrix)

    def _simple(
        self, kind: OperatorKind, mode: Mode, bidegree: Bidegree, source: Bidegree
    ) -> Quotient:
        block = self.block(mode, bidegree)
        return block, self._null(self.op(kind, mode, bidegree)), self.op(kind, mode, source)

    def _bott_chern(self, mode: Mode, p: int, q: int) -> Quotient:
        block = self.block(mode, (p, q))
        stack = self.backend.vstack(self.op(DEL, mode, (p, q)), self.op(DELBAR, mode, (p, q)))
        num = self._null(stack)

        if p >= 1 and q >= 1:
            den = self.op(DELDELBAR, mode, (p - 1, q - 1))
        elif p >= 1:
            # ∂ of holomorphic (p-1)-forms
            den = self.op(DEL, mode, (p - 1, 0)) @ self._null(self.op(DELBAR, mode, (p - 1, 0)))
        elif q >= 1:
            den = self.op(DELBAR, mode, (0, q - 1)) @ self._null(self.op(DEL, mode, (0, q - 1)))
        else:
            den = self._empty(block)
        return block, num, den

    def _aeppli(self, mode: Mode, p: int, q: int) -> Quotient:
        if (
            self.convention is AeppliConvention.FORMAL
            and mode.is_zero
            and (p, q) in G_ROUTE_KEYS
        ):
            return self._aeppli_formal(mode, p, q)
        return self._aeppli_full(mode, p, q)

    def _aeppli_full(self, mode: Mode, p: int, q: int) -> Quotient:
        block = self.block(mode, (p, q))
        num = self._null(self.op(DELDELBAR, mode, (p, q)))
        hstack = self.backend.hstack

        if p >= 1 and q >= 1:
            den = hstack(self.op(DEL, mode, (p - 1, q)), self.op(DELBAR, mode, (p, q - 1)))
        elif p >= 1:
            den = hstack(self.op(DEL, mode, (p - 1, 0)), self._null(self.op(DELBAR, mode, (p, 0))))
        elif q >= 1:
            den = hstack(self.op(DELBAR, mode, (0, q - 1)), self._null(self.op(DEL, mode, (0, q))))
        else:
            den = self._functions(mode)
        return block, num, den

    def _aeppli_formal(self, mode: Mode, p: int, q: int) -> Quotient:
        """Aeppli at σ = 0 without primitives on the σ = 0 block, through G^{p,q}."""
        block = self.block(mode, (p, q))
        g = self.g_basis(mode, (p, q))
        num = g @ self._null(self.op(DELDELBAR, mode, (p, q)) @ g)

        match (p, q):
            case (0, 0):
                den = self._functions(mode)
            case (1, 0):
                den = self._null(self.op(DELBAR, mode, (1, 0)))
            case (0, 1):
                den = self._null(self.op(DEL, mode, (0, 1)))
            case _:
                den = self._empty(block)
        return block, num, den

    def _third(self, mode: Mode, p: int, q: int) -> Quotient:
        block = ModeBlock.of(mode, ((p + 1, q), (p, q + 1)), self.trunc)
        total = self.backend.hstack(
            self.op(DELBAR, mode, (p + 1, q)), self.op(DEL, mode, (p, q + 1))
        )
        num = self._null(total)
        den = self.backend.vstack(self.op(DEL, mode, (p, q)), self.op(DELBAR, mode, (p, q)))
        return block, num, den

    def _functions(self, mode: Mode) -> BlockMatrix:
        """Holomorphic plus antiholomorphic functions, O + Ō."""
        return self.backend.hstack(
            self._null(self.op(DELBAR, mode, (0, 0))), self._null(self.op(DEL, mode, (0, 0)))
        )

    def _empty(self, block: ModeBlock) -> BlockMatrix:
        dtype = object if self.method is RankMethod.EXACT else np.complex128
        return np.zeros((block.dim, 0), dtype=dtype)

    def g_route(self, mode: Mode, key: Bidegree) -> Quotient:
        """Aeppli (p, q) ≤ (1, 1) through the G-complex.

        Primitives are admitted as the convention allows: under FORMAL the σ = 0 block takes none.
        """
        if mode.is_zero and self.convention is AeppliConvention.FORMAL and key in G_ROUTE_KEYS:
            return self._aeppli_formal(mode, *key)
        block = self.block(mode, key)
        g = self.g_basis(mode, key)
        hstack = self.backend.hstack
        match key:
            case (0, 0):
                return self._aeppli_formal(mode, 0, 0)
            case (0, 1):
                num = g @ self._null(self.op(DELDELBAR, mode, (0, 1)) @ g)
                den = hstack(
                    self.op(DELBAR, mode, (0, 0)) @ self.g_basis(mode, (0, 0)),
                    self._null(self.op(DEL, mode, (0, 1))),
                )
            case (1, 0):
                num = g @ self._null(self.op(DELDELBAR, mode, (1, 0)) @ g)
                den = hstack(
                    self.op(DEL, mode, (0, 0)) @ self.g_basis(mode, (0, 0)),
                    self._null(self.op(DELBAR, mode, (1, 0))),
                )
            case (1, 1):
                num = g
                den = hstack(
                    self.op(DELBAR, mode, (1, 0)) @ self.g_basis(mode, (1, 0)),
                    self.op(DEL, mode, (0, 1)) @ self.g_basis(mode, (0, 1)),
                )
            case _:
                msg = f"no G-complex description of bidegree {key}"
                raise ValueError(msg)
        return block, num, den

    # endregion

    # region dimensions

    def mode_dims(self, theory: Theory, mode: Mode) -> dict[DimKey, int]:
        """Dimensions of the quotients of a single mode block."""
        dims: dict[DimKey, int] = {}
        for key in theory.keys():
            _, num, den = self.quotient(theory, mode, key)
            dims[key] = self.backend.quotient_dim(num, den)
        return dims

    def table(self, theory: Theory, *, with_representatives: bool = False) -> CohomologyTable:
        """Sum the mode blocks of the shell into a table."""
        totals: dict[DimKey, int] = dict.fromkeys(theory.keys(), 0)
        contributions: dict[Mode, FrozenDict[DimKey, int]] = {}

        for mode in self.trunc.modes():
            dims = self.mode_dims(theory, mode)
            if any(dims.values()):
                self._logger.debug("%s: mode %s contributes %r", theory, mode.as_tuple(), dims)
                contributions[mode] = FrozenDict((k, v) for k, v in dims.items() if v)
            for key, value in dims.items():
                totals[key] += value

        reps = None
        if with_representatives:
            reps = FrozenDict(
                (key, self.representatives(theory, key))
                for key in theory.keys()
                if totals[key]
            )

        table = CohomologyTable(
            theory=theory,
            dims=FrozenDict(totals.items()),
            truncation=self.trunc,
            hausdorff_completed=theory is Theory.AEPPLI,
            formal_only=self.formal_only,
            convention=self.convention if theory is Theory.AEPPLI else None,
            contributions=FrozenDict(contributions.items()),
            representatives=reps,
        )
        self._logger.info(
            "%s over N,K,M = %s: %s", theory, self.trunc.label, ",".join(map(str, table.by_degree()))
        )
        return table

    def aeppli_g_route(self) -> dict[Bidegree, int]:
        """Aeppli dimensions of the G-complex quotients, summed over the shell."""
        totals = dict.fromkeys(G_ROUTE_KEYS, 0)
        for mode in self.trunc.modes():
            for key in G_ROUTE_KEYS:
                _, num, den = self.g_route(mode, key)
                totals[key] += self.backend.quotient_dim(num, den)
        return totals

    def nondeldelbar_degrees(self) -> dict[int, int]:
        """Δ^k = h^k_BC + h^k_A - 2 b_k for k = 0..4."""
        return nondeldelbar_from_tables(
            self.table(Theory.BOTT_CHERN), self.table(Theory.AEPPLI), self.table(Theory.DERHAM)
        )

    # endregion

    # region representatives

    def representatives(self, theory: Theory, key: DimKey) -> tuple[SpectralForm, ...]:
        """A basis of the quotient at key, one reduced form per class.

        Each form is a combination of numerator vectors orthogonal to the denominator.
        """
        forms: list[SpectralForm] = []
        for mode in self.trunc.modes():
            block, num, den = self.quotient(theory, mode, key)
            if num.shape[1] == 0:
                continue
            q = self.numeric.orth(as_complex(num))
            p = self.numeric.orth(q.conj().T @ as_complex(den))
            complement = self.numeric.null_space(p.conj().T) if p.shape[1] else np.eye(q.shape[1])
            if complement.shape[1] == 0:
                continue
            vectors = rref(q @ complement)
            forms.extend(
                block.to_form(self.lattice, vectors[:, i], limits=self.trunc.limits, chop=1e-10)
                for i in range(vectors.shape[1])
            )
        return tuple(forms)

    # endregion


def _engine(
    lattice: Lattice,
    trunc: Truncation,
    logger: Logger | None,
    method: RankMethod,
    convention: AeppliConvention,
) -> ComplexEngine:
    return ComplexEngine(lattice, trunc, logger or getLogger("tcohom"), method, convention)


def cohomology_dims(
    theory: Theory,
    lattice: Lattice,
    trunc: Truncation,
    *,
    logger: Logger | None = None,
    method: RankMethod = RankMethod.NUMERIC,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> CohomologyTable:
    """Compute the table of a cohomology theory over a truncation."""
    return _engine(lattice, trunc, logger, method, convention).table(theory)


def representatives(
    theory: Theory,
    lattice: Lattice,
    trunc: Truncation,
    key: DimKey,
    *,
    logger: Logger | None = None,
    method: RankMethod = RankMethod.NUMERIC,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> tuple[SpectralForm, ...]:
    """Representatives of a basis of one cohomology group."""
    return _engine(lattice, trunc, logger, method, convention).representatives(theory, key)


def nondeldelbar_degrees(
    lattice: Lattice,
    trunc: Truncation,
    *,
    logger: Logger | None = None,
    method: RankMethod = RankMethod.NUMERIC,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> dict[int, int]:
    """The non-∂∂̄ degrees Δ^k."""
    return _engine(lattice, trunc, logger, method, convention).nondeldelbar_degrees()
