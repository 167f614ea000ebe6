"""cohomology tables and their text, CSV and JSON renderings."""

import json
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Final, final

from tcohom.lattice import Mode
from tcohom.specform import SpectralForm
from tcohom.utils import FrozenDict

from .truncation import Truncation

type DimKey = tuple[int, ...]
"""(p, q) for bigraded theories, (k,) for de Rham"""


class Theory(StrEnum):
    """A cohomology theory computed by the engine."""

    DERHAM = "derham"
    DOLBEAULT = "dolbeault"
    DEL_CONJUGATE = "delconj"
    BOTT_CHERN = "bott-chern"
    AEPPLI = "aeppli"
    THIRD = "third"

    @property
    def bigraded(self) -> bool:
        """Indexed by bidegree rather than total degree."""
        return self is not Theory.DERHAM

    def keys(self) -> tuple[DimKey, ...]:
        """Every index of a table of this theory."""
        if self.bigraded:
            return tuple((p, q) for p in range(3) for q in range(3))
        return tuple((k,) for k in range(5))


class AeppliConvention(StrEnum):
    """Which primitives the Aeppli quotients at σ = 0 admit."""

    FORMAL = "formal"
    """no primitives at σ = 0 in bidegrees (0,0), (1,0), (0,1), (1,1)"""

    FULL = "full"
    """every primitive of the truncated complex"""


DIAMOND_ROWS: Final = (
    ((0, 0),),
    ((1, 0), (0, 1)),
    ((2, 0), (1, 1), (0, 2)),
    ((2, 1), (1, 2)),
    ((2, 2),),
)


@final
@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions of a cohomology theory over a truncation."""

    theory: Theory
    dims: FrozenDict[DimKey, int]
    truncation: Truncation
    hausdorff_completed: bool = False
    formal_only: bool = False
    """the lattice is not certified theta; the numbers only describe the truncated complex"""

    convention: AeppliConvention | None = None
    contributions: FrozenDict[Mode, FrozenDict[DimKey, int]] = field(
        default=FrozenDict(), repr=False
    )
    """nonzero per-mode dimensions"""

    representatives: FrozenDict[DimKey, tuple[SpectralForm, ...]] | None = field(
        default=None, repr=False
    )

    def __getitem__(self, key: int | DimKey) -> int:
        """Dimension at a bidegree or total degree."""
        if isinstance(key, int):
            key = (key,)
        return self.dims.get(key, 0)

    def by_degree(self) -> tuple[int, ...]:
        """Total dimensions h^k = Σ_{p+q=k} h^{p,q} for k = 0..4."""
        if not self.theory.bigraded:
            return tuple(self[k] for k in range(5))
        return tuple(
            sum(self[p, k - p] for p in range(3) if 0 <= k - p <= 2)  # noqa: PLR2004
            for k in range(5)
        )

    @property
    def title(self) -> str:
        """Title line used by the renderings."""
        extra = f", {self.convention} convention" if self.convention else ""
        return f"{self.theory} (N,K,M = {self.truncation.label}{extra})"

    def notes(self) -> list[str]:
        """Footnotes of the renderings."""
        notes: list[str] = []
        if self.hausdorff_completed:
            notes.append("* dimensions of the Hausdorff completion")
        if self.formal_only:
            notes.append("* formal/truncated only: the lattice is not certified theta")
        return notes


def render_diamond(table: CohomologyTable) -> str:
    """Render as text; bigraded theories are drawn as a diamond with (0,0) on top."""
    lines = [table.title]
    if not table.theory.bigraded:
        lines.append("b = " + ",".join(str(v) for v in table.by_degree()))
    else:
        width = max(len(str(v)) for v in (table[key] for key in table.theory.keys()))
        blank = " " * width
        for row in DIAMOND_ROWS:
            cells = [blank] * 5
            for i, key in enumerate(row):
                cells[3 - len(row) + 2 * i] = str(table[key]).rjust(width)
            lines.append(" ".join(cells).rstrip())
    lines.extend(table.notes())
    return "\n".join(lines) + "\n"


CSV_HEADER: Final = "theory,p,q,dim,hausdorff,N,K,M"


def render_csv(*tables: CohomologyTable, header: bool = True) -> str:
    """Render as CSV rows theory,p,q,dim,hausdorff,N,K,M; de Rham rows leave q empty."""
    lines = [CSV_HEADER] if header else []
    for table in tables:
        trunc = table.truncation
        hausdorff = "true" if table.hausdorff_completed else "false"
        for key in table.theory.keys():
            p, q = (key[0], key[1]) if len(key) == 2 else (key[0], "")  # noqa: PLR2004
            lines.append(
                f"{table.theory},{p},{q},{table[key]},{hausdorff},{trunc.n},{trunc.k},{trunc.m}"
            )
    return "\n".join(lines) + "\n"


def table_to_json(table: CohomologyTable) -> dict[str, object]:
    """A JSON-ready description of a table."""
    trunc = table.truncation
    return {
        "theory": str(table.theory),
        "dims": {",".join(map(str, key)): table[key] for key in table.theory.keys()},
        "hausdorff_completed": table.hausdorff_completed,
        "formal_only": table.formal_only,
        "convention": None if table.convention is None else str(table.convention),
        "truncation": {"N": trunc.n, "K": trunc.k, "M": trunc.m, "tol": trunc.tol},
    }


def render_json(*tables: CohomologyTable, extra: dict[str, object] | None = None) -> str:
    """Render one or more tables as a JSON document."""
    data: dict[str, object] = {"tables": [table_to_json(t) for t in tables]}
    if extra:
        data.update(extra)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def nondeldelbar_from_tables(
    bott_chern: CohomologyTable, aeppli: CohomologyTable, derham: CohomologyTable
) -> dict[int, int]:
    """Δ^k = h^k_BC + h^k_A - 2 b_k for k = 0..4."""
    bc, ae, betti = bott_chern.by_degree(), aeppli.by_degree(), derham.by_degree()
    return {k: bc[k] + ae[k] - 2 * betti[k] for k in range(5)}
