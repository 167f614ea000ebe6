"""finite truncations of the mode decomposition."""

from dataclasses import dataclass, replace
from typing import final

from tcohom.errors import TcohomError
from tcohom.lattice import Mode, shell
from tcohom.specform import CoeffLimits


class InvalidTruncationError(TcohomError, ValueError):
    """Raised when a truncation is out of range."""


@final
@dataclass(frozen=True, order=True)
class Truncation:
    """Mode shell radius n, polynomial degree k and exponential index m kept per mode, plus the relative rank tolerance."""

    n: int = 2
    k: int = 2
    m: int = 2
    tol: float = 1e-9

    def __post_init__(self) -> None:
        """Validate the ranges."""
        if self.n < 1 or self.k < 2 or self.m < 1:  # noqa: PLR2004
            msg = f"truncation needs N ≥ 1, K ≥ 2, M ≥ 1; got {self.n},{self.k},{self.m}"
            raise InvalidTruncationError(msg)
        if not 0 < self.tol < 1e-3:  # noqa: PLR2004
            msg = f"tolerance must lie in (0, 1e-3), got {self.tol!r}"
            raise InvalidTruncationError(msg)

    @classmethod
    def parse(cls, value: str, tol: float | None = None) -> "Truncation":
        """Parse "N,K,M"."""
        parts = value.split(",")
        try:
            n, k, m = (int(p.strip()) for p in parts)
        except ValueError:
            msg = f"expected N,K,M, got {value!r}"
            raise InvalidTruncationError(msg) from None
        if tol is None:
            return cls(n, k, m)
        return cls(n, k, m, tol)

    @property
    def label(self) -> str:
        """N,K,M."""
        return f"{self.n},{self.k},{self.m}"

    @property
    def limits(self) -> CoeffLimits:
        """The coefficient limits matching this truncation."""
        return CoeffLimits(self.k, self.m)

    def modes(self) -> tuple[Mode, ...]:
        """Every mode of the shell."""
        return shell(self.n)

    def with_headroom(self, extra_k: int) -> "Truncation":
        """The same truncation with room for extra_k more powers of t₄."""
        return replace(self, k=self.k + extra_k)
