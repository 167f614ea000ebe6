"""ranks, null spaces and quotient dimensions of block matrices."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import final, override

import numpy as np
import numpy.typing as npt
import sympy
from sympy.polys.matrices import DomainMatrix

from tcohom.errors import TcohomError

from .blocks import BlockMatrix

# spellchecker:words nullspace


class RankToleranceError(TcohomError, ArithmeticError):
    """Raised when a singular value is too close to the rank threshold to decide the rank."""

    singular_value: float
    threshold: float

    def __init__(self, singular_value: float, threshold: float) -> None:
        """Create a new RankToleranceError."""
        super().__init__(
            f"singular value {singular_value:.3e} is within a factor 100 of the rank threshold "
            f"{threshold:.3e}; raise the precision or loosen the tolerance"
        )
        self.singular_value = singular_value
        self.threshold = threshold


class Backend(ABC):
    """Linear algebra on block matrices."""

    @abstractmethod
    def rank(self, matrix: BlockMatrix) -> int:
        """Rank of matrix."""

    @abstractmethod
    def null_space(self, matrix: BlockMatrix) -> BlockMatrix:
        """A basis of the kernel, as columns."""

    def quotient_dim(self, numerator: BlockMatrix, image: BlockMatrix) -> int:
        """dim span(numerator) / (image ∩ span(numerator))."""
        return self.rank(self.hstack(numerator, image)) - self.rank(image)

    @staticmethod
    def hstack(*matrices: BlockMatrix) -> BlockMatrix:
        """Concatenate columns."""
        return np.hstack(matrices)

    @staticmethod
    def vstack(*matrices: BlockMatrix) -> BlockMatrix:
        """Concatenate rows."""
        return np.vstack(matrices)


@final
@dataclass(frozen=True)
class NumericBackend(Backend):
    """Singular value thresholding.

    A singular value s counts when s > scale·max(1, s_max).
    Values within a factor band of that threshold are undecidable and raise RankToleranceError.
    """

    scale: float
    band: float = 100.0

    def _singular(self, matrix: BlockMatrix) -> tuple[npt.NDArray[np.float64], float]:
        s = np.linalg.svd(matrix, compute_uv=False)
        threshold = self.scale * max(1.0, float(s[0]) if s.size else 0.0)
        self._check(s, threshold)
        return s, threshold

    def _check(self, s: npt.NDArray[np.float64], threshold: float) -> None:
        close = s[(s > threshold / self.band) & (s < threshold * self.band)]
        if close.size:
            raise RankToleranceError(float(close[0]), threshold)

    @override
    def rank(self, matrix: BlockMatrix) -> int:
        if matrix.size == 0:
            return 0
        s, threshold = self._singular(matrix)
        return int(np.count_nonzero(s > threshold))

    @override
    def null_space(self, matrix: BlockMatrix) -> BlockMatrix:
        cols = matrix.shape[1]
        if matrix.size == 0:
            return np.eye(cols, dtype=np.complex128)
        _, s, vh = np.linalg.svd(matrix, full_matrices=True)
        threshold = self.scale * max(1.0, float(s[0]))
        self._check(s, threshold)
        rank = int(np.count_nonzero(s > threshold))
        return np.ascontiguousarray(vh[rank:].conj().T)

    @override
    def quotient_dim(self, numerator: BlockMatrix, image: BlockMatrix) -> int:
        # project the image onto an orthonormal basis of the numerator
        basis = self.orth(numerator)
        if basis.shape[1] == 0:
            return 0
        return int(basis.shape[1]) - self.rank(basis.conj().T @ image)

    def orth(self, matrix: BlockMatrix) -> BlockMatrix:
        """An orthonormal basis of the column space."""
        if matrix.size == 0:
            return np.zeros((matrix.shape[0], 0), dtype=np.complex128)
        u, s, _ = np.linalg.svd(matrix, full_matrices=False)
        threshold = self.scale * max(1.0, float(s[0]))
        self._check(s, threshold)
        return u[:, : int(np.count_nonzero(s > threshold))]


def _domain_matrix(matrix: BlockMatrix) -> DomainMatrix:
    rows = [[sympy.expand(sympy.sympify(x)) for x in row] for row in matrix.tolist()]
    return DomainMatrix.from_list_sympy(
        matrix.shape[0], matrix.shape[1], rows, extension=True
    ).to_field()


@final
@dataclass(frozen=True)
class ExactBackend(Backend):
    """Exact ranks over the algebraic number field generated by the entries."""

    @override
    def rank(self, matrix: BlockMatrix) -> int:
        if matrix.size == 0:
            return 0
        return int(_domain_matrix(matrix).rank())

    @override
    def null_space(self, matrix: BlockMatrix) -> BlockMatrix:
        cols = matrix.shape[1]
        if matrix.size == 0:
            return np.eye(cols, dtype=object)
        basis = _domain_matrix(matrix).nullspace().to_Matrix()
        out: BlockMatrix = np.zeros((cols, basis.rows), dtype=object)
        for i in range(basis.rows):
            for j in range(cols):
                out[j, i] = basis[i, j]
        return out


def as_complex(matrix: BlockMatrix) -> npt.NDArray[np.complex128]:
    """Evaluate a block matrix with sympy entries numerically."""
    if matrix.dtype != object:
        return matrix.astype(np.complex128)
    return np.vectorize(lambda x: complex(sympy.N(x)), otypes=[np.complex128])(matrix)


def rref(vectors: npt.NDArray[np.complex128], tol: float = 1e-10) -> npt.NDArray[np.complex128]:
    """Reduced row echelon form of the span of the columns, returned as columns."""
    m = vectors.T.copy()
    rows, cols = m.shape
    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        best = pivot_row + int(np.argmax(np.abs(m[pivot_row:, col])))
        if abs(m[best, col]) <= tol:
            continue
        m[[pivot_row, best]] = m[[best, pivot_row]]
        m[pivot_row] /= m[pivot_row, col]
        for r in range(rows):
            if r != pivot_row:
                m[r] -= m[r, col] * m[pivot_row]
        pivot_row += 1
    m[np.abs(m) <= tol] = 0
    return m[:pivot_row].T
