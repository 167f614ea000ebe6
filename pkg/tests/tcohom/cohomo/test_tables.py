"""test the tables module."""

import json

from tcohom.cohomo import (
    CSV_HEADER,
    AeppliConvention,
    CohomologyTable,
    Theory,
    Truncation,
    nondeldelbar_from_tables,
    render_csv,
    render_diamond,
    render_json,
)
from tcohom.utils import FrozenDict


def _table(
    theory: Theory, values: str, convention: AeppliConvention | None = None
) -> CohomologyTable:
    """A table from the comma-separated values of theory.keys()."""
    dims = zip(theory.keys(), (int(v) for v in values.split(",")), strict=True)
    return CohomologyTable(
        theory,
        FrozenDict(dims),
        Truncation(),
        hausdorff_completed=convention is not None,
        convention=convention,
    )


# keys run (0,0), (0,1), (0,2), (1,0), ...
BOTT_CHERN = _table(Theory.BOTT_CHERN, "1,2,1,2,3,1,1,1,0")
AEPPLI = _table(
    Theory.AEPPLI, "1,1,0,1,4,0,0,0,0", AeppliConvention.FORMAL
)
DERHAM = _table(Theory.DERHAM, "1,3,3,1,0")


def test_getitem_and_by_degree() -> None:
    """Test lookups by bidegree and by total degree."""
    assert BOTT_CHERN[1, 1] == 3
    assert BOTT_CHERN[0, 1] == 2
    assert BOTT_CHERN.by_degree() == (1, 4, 5, 2, 0)
    assert DERHAM[2] == 3
    assert DERHAM.by_degree() == (1, 3, 3, 1, 0)


def test_render_diamond() -> None:
    """Test the text rendering of a diamond."""
    assert render_diamond(BOTT_CHERN) == (
        "bott-chern (N,K,M = 2,2,2)\n"
        "    1\n"
        "  2   2\n"
        "1   3   1\n"
        "  1   1\n"
        "    0\n"
    )


def test_render_diamond_notes() -> None:
    """Test the footnotes of a rendering."""
    got = render_diamond(AEPPLI).splitlines()
    assert got[0] == "aeppli (N,K,M = 2,2,2, formal convention)"
    assert got[-1] == "* dimensions of the Hausdorff completion"


def test_render_derham() -> None:
    """Test the rendering of total-degree tables."""
    assert render_diamond(DERHAM) == "derham (N,K,M = 2,2,2)\nb = 1,3,3,1,0\n"


def test_render_csv() -> None:
    """Test the CSV rendering."""
    lines = render_csv(DERHAM, AEPPLI).splitlines()
    assert lines[0] == CSV_HEADER
    assert lines[1] == "derham,0,,1,false,2,2,2"
    assert "aeppli,1,1,4,true,2,2,2" in lines
    assert len(lines) == 1 + 5 + 9
    assert render_csv(DERHAM, header=False).splitlines()[0] == "derham,0,,1,false,2,2,2"


def test_render_json() -> None:
    """Test the JSON rendering."""
    data = json.loads(render_json(BOTT_CHERN, extra={"delta": [0, 0, 3, 0, 0]}))
    assert data["delta"] == [0, 0, 3, 0, 0]
    (table,) = data["tables"]
    assert table["theory"] == "bott-chern"
    assert table["dims"]["1,1"] == 3
    assert table["truncation"] == {"N": 2, "K": 2, "M": 2, "tol": 1e-9}
    assert table["convention"] is None


def test_nondeldelbar_from_tables() -> None:
    """Test Δ^k from three tables."""
    assert nondeldelbar_from_tables(BOTT_CHERN, AEPPLI, DERHAM) == {0: 0, 1: 0, 2: 3, 3: 0, 4: 0}
