"""randomized self-checks of the calculus, the solvers and the tables."""

from .suites import (
    ACYCLIC_MODES,
    SUITES,
    CheckContext,
    SuiteResult,
    acyclicity,
    conjugation,
    d_squared,
    leibniz,
    oracle,
    recomposition,
    run_checks,
    stability,
)

__all__ = [
    "ACYCLIC_MODES",
    "SUITES",
    "CheckContext",
    "SuiteResult",
    "acyclicity",
    "conjugation",
    "d_squared",
    "leibniz",
    "oracle",
    "recomposition",
    "run_checks",
    "stability",
]
