"""differential operators acting mode by mode on spectral forms."""

from .operators import (
    LEGS,
    CoeffMap,
    OperatorKind,
    apply,
    coefficient_map,
    is_closed,
    target_bidegree,
)
from .oracle import finite_difference, left_wedge, partial

__all__ = [
    "LEGS",
    "CoeffMap",
    "OperatorKind",
    "apply",
    "coefficient_map",
    "finite_difference",
    "is_closed",
    "left_wedge",
    "partial",
    "target_bidegree",
]
