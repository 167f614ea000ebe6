"""test the theories module on the default lattice."""

from logging import getLogger

import pytest

from tcohom.cohomo import (
    AeppliConvention,
    ComplexEngine,
    DimKey,
    RankMethod,
    Theory,
    Truncation,
    cohomology_dims,
    nondeldelbar_from_tables,
    stability_scan,
)
from tcohom.errors import NotExactError
from tcohom.lattice import Decimal, Lattice, Mode, Rational

LATTICE = Lattice.default()
LOGGER = getLogger("tcohom.test")


def _dims(text: str) -> dict[DimKey, int]:
    """Parse a diamond written as "h00;h10,h01;h20,h11,h02;h21,h12;h22"."""
    dims: dict[DimKey, int] = {}
    for k, row in enumerate(text.split(";")):
        for i, value in enumerate(row.split(",")):
            p = min(k, 2) - i
            dims[p, k - p] = int(value)
    return dims


@pytest.fixture(scope="module")
def engine() -> ComplexEngine:
    """An engine over the default truncation, shared by the tests of this module."""
    return ComplexEngine(LATTICE, Truncation(), LOGGER)


@pytest.fixture(scope="module")
def full_engine() -> ComplexEngine:
    """An engine admitting every Aeppli primitive."""
    return ComplexEngine(LATTICE, Truncation(), LOGGER, convention=AeppliConvention.FULL)


@pytest.mark.parametrize(
    ("theory", "want"),
    [
        (Theory.BOTT_CHERN, "1;2,2;1,3,1;1,1;0"),
        (Theory.DOLBEAULT, "1;2,1;1,2,0;1,0;0"),
        (Theory.DEL_CONJUGATE, "1;1,2;0,2,1;0,1;0"),
        (Theory.AEPPLI, "1;1,1;0,4,0;0,0;0"),
    ],
)
def test_bigraded_tables(engine: ComplexEngine, theory: Theory, want: str) -> None:
    """Test the bigraded tables of the default lattice."""
    table = engine.table(theory)
    assert dict(table.dims) == _dims(want)
    assert not table.formal_only


def test_derham(engine: ComplexEngine) -> None:
    """Test the Betti numbers and the Hodge sum over the Dolbeault table."""
    derham = engine.table(Theory.DERHAM)
    assert derham.by_degree() == (1, 3, 3, 1, 0)
    assert engine.table(Theory.DOLBEAULT).by_degree() == derham.by_degree()


def test_zero_mode_carries_everything(engine: ComplexEngine) -> None:
    """Test that the nonzero modes of a theta lattice contribute nothing."""
    table = engine.table(Theory.BOTT_CHERN)
    assert set(table.contributions) == {Mode.zero()}


def test_third(engine: ComplexEngine) -> None:
    """Test the headline value of the third cohomology."""
    assert engine.table(Theory.THIRD)[1, 1] == 1


def test_nondeldelbar_degrees(engine: ComplexEngine) -> None:
    """Test Δ^k = h^k_BC + h^k_A - 2b_k."""
    assert engine.nondeldelbar_degrees() == {0: 0, 1: 0, 2: 3, 3: 0, 4: 0}
    got = nondeldelbar_from_tables(
        engine.table(Theory.BOTT_CHERN), engine.table(Theory.AEPPLI), engine.table(Theory.DERHAM)
    )
    assert got == engine.nondeldelbar_degrees()


def test_aeppli_full(full_engine: ComplexEngine) -> None:
    """Test the Aeppli table admitting every primitive."""
    table = full_engine.table(Theory.AEPPLI)
    assert table[1, 1] == 2
    assert table.convention is AeppliConvention.FULL
    assert table.hausdorff_completed


@pytest.mark.parametrize("convention", list(AeppliConvention))
def test_aeppli_two_routes(convention: AeppliConvention) -> None:
    """Test that the G-complex quotients reproduce the Aeppli table under either convention."""
    engine = ComplexEngine(LATTICE, Truncation(1, 2, 1), LOGGER, convention=convention)
    table = engine.table(Theory.AEPPLI)
    routed = engine.aeppli_g_route()
    for key in [(0, 0), (0, 1), (1, 1)]:
        assert routed[key] == table[key]


def test_aeppli_conventions_differ(engine: ComplexEngine, full_engine: ComplexEngine) -> None:
    """Test that only FULL absorbs the (1,1) classes of σ = 0 primitives."""
    assert engine.aeppli_g_route()[1, 1] == 4
    assert full_engine.aeppli_g_route()[1, 1] == 2


@pytest.mark.parametrize(
    ("theory", "key"),
    [(Theory.BOTT_CHERN, (1, 1)), (Theory.DOLBEAULT, (1, 0)), (Theory.DERHAM, (2,))],
)
def test_representatives(engine: ComplexEngine, theory: Theory, key: DimKey) -> None:
    """Test that there is one representative per class."""
    forms = engine.representatives(theory, key)
    assert len(forms) == engine.table(theory)[key]
    for form in forms:
        assert not form.is_zero
        assert form.modes() == (Mode.zero(),)


@pytest.mark.parametrize(
    "larger",
    [
        Truncation(),
        pytest.param(Truncation(3, 3, 3), marks=pytest.mark.slow),
    ],
)
def test_stability(larger: Truncation) -> None:
    """Test that the tables do not change when the truncation grows."""
    report = stability_scan(
        Theory.BOTT_CHERN, LATTICE, [Truncation(1, 2, 1), larger], logger=LOGGER
    )
    assert report.stable
    assert len(report.tables) == 2


def test_exact_matches_numeric() -> None:
    """Test exact ranks against numeric ranks on a small truncation."""
    trunc = Truncation(1, 2, 1)
    exact = cohomology_dims(Theory.DOLBEAULT, LATTICE, trunc, method=RankMethod.EXACT)
    numeric = cohomology_dims(Theory.DOLBEAULT, LATTICE, trunc)
    assert exact.dims == numeric.dims


def test_exact_needs_an_exact_lattice() -> None:
    """Test that decimal parameters rule out exact ranks."""
    lattice = Lattice(Rational(0), Rational(1), Decimal("1.41421356237", 12), Rational(0))
    with pytest.raises(NotExactError):
        ComplexEngine(lattice, Truncation(), LOGGER, method=RankMethod.EXACT)
