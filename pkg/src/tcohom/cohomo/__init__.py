"""truncated mode complexes, their cohomology tables and the rank engine."""

from .blocks import (
    BasisElement,
    BlockMatrix,
    ModeBlock,
    RankMethod,
    allowed_keys,
    block_operator,
    codomain_block,
    coeff_keys,
    coefficient_operator,
    degree_block_basis,
    mode_block_basis,
    operator_matrix,
)
from .linalg import (
    Backend,
    ExactBackend,
    NumericBackend,
    RankToleranceError,
    as_complex,
    rref,
)
from .stability import Discrepancy, StabilityReport, stability_scan
from .tables import (
    CSV_HEADER,
    AeppliConvention,
    CohomologyTable,
    DimKey,
    Theory,
    nondeldelbar_from_tables,
    render_csv,
    render_diamond,
    render_json,
    table_to_json,
)
from .theories import (
    ComplexEngine,
    cohomology_dims,
    nondeldelbar_degrees,
    representatives,
)
from .truncation import InvalidTruncationError, Truncation

__all__ = [
    "CSV_HEADER",
    "AeppliConvention",
    "Backend",
    "BasisElement",
    "BlockMatrix",
    "CohomologyTable",
    "ComplexEngine",
    "DimKey",
    "Discrepancy",
    "ExactBackend",
    "InvalidTruncationError",
    "ModeBlock",
    "NumericBackend",
    "RankMethod",
    "RankToleranceError",
    "StabilityReport",
    "Theory",
    "Truncation",
    "allowed_keys",
    "as_complex",
    "block_operator",
    "codomain_block",
    "coeff_keys",
    "coefficient_operator",
    "cohomology_dims",
    "degree_block_basis",
    "mode_block_basis",
    "nondeldelbar_degrees",
    "nondeldelbar_from_tables",
    "operator_matrix",
    "render_csv",
    "render_diamond",
    "render_json",
    "representatives",
    "rref",
    "stability_scan",
    "table_to_json",
]
