"""stability of tables under growing truncations."""

from collections.abc import Iterable
from dataclasses import dataclass
from logging import Logger, getLogger
from typing import final

from tcohom.lattice import Lattice, Mode

from .blocks import RankMethod
from .tables import AeppliConvention, CohomologyTable, DimKey, Theory
from .theories import ComplexEngine
from .truncation import Truncation


@final
@dataclass(frozen=True)
class Discrepancy:
    """A block whose dimension differs from the one of the first truncation."""

    truncation: Truncation
    mode: Mode
    key: DimKey
    expected: int
    found: int

    def __str__(self) -> str:
        """Describe the discrepancy on one line."""
        return (
            f"N,K,M = {self.truncation.label}: mode {self.mode.as_tuple()} "
            f"at {self.key} has dimension {self.found}, expected {self.expected}"
        )


@final
@dataclass(frozen=True)
class StabilityReport:
    """Tables computed over several truncations and their discrepancies."""

    theory: Theory
    tables: tuple[CohomologyTable, ...]
    discrepancies: tuple[Discrepancy, ...]

    @property
    def stable(self) -> bool:
        """Every table agrees with the first one."""
        return not self.discrepancies


def stability_scan(
    theory: Theory,
    lattice: Lattice,
    truncations: Iterable[Truncation],
    *,
    logger: Logger | None = None,
    method: RankMethod = RankMethod.NUMERIC,
    convention: AeppliConvention = AeppliConvention.FORMAL,
) -> StabilityReport:
    """Compute a theory for each truncation and compare every table with the first."""
    logger = logger or getLogger("tcohom")
    tables = tuple(
        ComplexEngine(lattice, trunc, logger, method, convention).table(theory)
        for trunc in truncations
    )
    if not tables:
        return StabilityReport(theory, (), ())

    reference = tables[0]
    discrepancies: list[Discrepancy] = []
    for table in tables[1:]:
        for key in theory.keys():
            if table[key] == reference[key]:
                continue
            modes = sorted(set(table.contributions) | set(reference.contributions))
            for mode in modes:
                expected = reference.contributions.get(mode, {}).get(key, 0)
                found = table.contributions.get(mode, {}).get(key, 0)
                if expected != found:
                    discrepancies.append(
                        Discrepancy(table.truncation, mode, key, expected, found)
                    )

    for item in discrepancies:
        logger.warning("%s: unstable block: %s", theory, item)
    return StabilityReport(theory, tables, tuple(discrepancies))
