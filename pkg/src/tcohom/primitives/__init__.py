"""constructive primitives: Umeno decompositions, ∂∂̄- and ∂̄-primitives and the Aeppli reductions."""

from .certify import BoundKind, ConvergenceCertificate, certify_convergence
from .cover import CoverForm, apply_cover, closed_form_primitives
from .solution import (
    CoverFlag,
    InconsistentModeError,
    PrimitiveSolution,
    SingularBlockError,
)
from .solvers import (
    PrimitiveSolver,
    aeppli00_reduce,
    aeppli01_primitive,
    aeppli10_primitive,
    aeppli11_primitive,
    deldelbar_primitive,
    dolbeault_primitive,
    umeno_decompose,
)

__all__ = [
    "BoundKind",
    "ConvergenceCertificate",
    "CoverFlag",
    "CoverForm",
    "InconsistentModeError",
    "PrimitiveSolution",
    "PrimitiveSolver",
    "SingularBlockError",
    "aeppli00_reduce",
    "aeppli01_primitive",
    "aeppli10_primitive",
    "aeppli11_primitive",
    "apply_cover",
    "certify_convergence",
    "closed_form_primitives",
    "deldelbar_primitive",
    "dolbeault_primitive",
    "umeno_decompose",
]
