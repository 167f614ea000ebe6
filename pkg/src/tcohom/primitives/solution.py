"""results and errors of the primitive solvers."""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import final

from tcohom.errors import PreconditionError, TcohomError
from tcohom.lattice import Mode
from tcohom.specform import SpectralForm

from .certify import ConvergenceCertificate
from .cover import CoverForm


class InconsistentModeError(PreconditionError):
    """Raised when a nonzero mode of the input cannot satisfy the closedness constraints."""

    mode: Mode

    def __init__(self, mode: Mode, msg: str) -> None:
        """Create a new InconsistentModeError."""
        super().__init__("mode-consistent", msg)
        self.mode = mode


class SingularBlockError(TcohomError, ArithmeticError):
    """Raised when a mode block has no solution although the preconditions hold."""

    mode: Mode

    def __init__(self, mode: Mode, msg: str) -> None:
        """Create a new SingularBlockError."""
        super().__init__(msg)
        self.mode = mode


class CoverFlag(StrEnum):
    """Where the primitives of a solution live."""

    PERIODIC = "Periodic"
    UNIVERSAL_COVER_ONLY = "UniversalCoverOnly"


@final
@dataclass(frozen=True)
class PrimitiveSolution:
    """input = image + residual, where image is the operator applied to the primitives.

    residual = Σ coefficients[i] · residual_basis[i].
    """

    input: SpectralForm
    primitives: tuple[SpectralForm, ...]
    image: SpectralForm
    residual: SpectralForm
    residual_basis: tuple[str, ...]
    coefficients: tuple[complex, ...]
    certificate: ConvergenceCertificate
    cover_flag: CoverFlag = CoverFlag.PERIODIC
    cover_primitives: tuple[CoverForm, ...] = field(default=(), repr=False)
    """the primitives of a UniversalCoverOnly solution"""

    def recomposition_error(self) -> float:
        """max |input - image - residual| over all coefficients."""
        return self.input.combine(-self.image).combine(-self.residual).max_abs()

    def residual_coefficients(self) -> dict[str, complex]:
        """Coefficients of the residual by basis label."""
        return dict(zip(self.residual_basis, self.coefficients, strict=True))
