"""test the linalg module."""

import numpy as np
import pytest
import sympy

from tcohom.cohomo import ExactBackend, NumericBackend, RankToleranceError, as_complex, rref


def test_numeric_rank() -> None:
    """Test thresholded ranks."""
    backend = NumericBackend(1e-9)
    assert backend.rank(np.diag([1.0, 1e-3, 1e-20]).astype(np.complex128)) == 2
    assert backend.rank(np.zeros((0, 3), dtype=np.complex128)) == 0


def test_rank_tolerance_error() -> None:
    """Test that singular values near the threshold are refused."""
    backend = NumericBackend(1e-9)
    with pytest.raises(RankToleranceError) as info:
        backend.rank(np.diag([1.0, 5e-9]).astype(np.complex128))
    assert info.value.singular_value == pytest.approx(5e-9)
    assert info.value.threshold == pytest.approx(1e-9)


def test_null_space() -> None:
    """Test that null space columns are annihilated."""
    matrix = np.array([[1, 1j, 0], [0, 0, 1]], dtype=np.complex128)
    kernel = NumericBackend(1e-9).null_space(matrix)
    assert kernel.shape == (3, 1)
    assert np.allclose(matrix @ kernel, 0)


def test_quotient_dim() -> None:
    """Test dim span(numerator) / (image ∩ span(numerator))."""
    backend = NumericBackend(1e-9)
    numerator = np.eye(3, 2, dtype=np.complex128)
    image = np.array([[1], [0], [0]], dtype=np.complex128)
    assert backend.quotient_dim(numerator, image) == 1
    assert backend.quotient_dim(numerator, np.zeros((3, 0), dtype=np.complex128)) == 2


def test_exact_backend() -> None:
    """Test exact ranks over an algebraic extension."""
    r2 = sympy.sqrt(2)
    matrix = np.array([[1, r2, sympy.I], [r2, 2, sympy.I * r2]], dtype=object)
    backend = ExactBackend()
    assert backend.rank(matrix) == 1
    kernel = backend.null_space(matrix)
    assert kernel.shape == (3, 2)
    assert np.allclose(as_complex(matrix) @ as_complex(kernel), 0)


def test_rref() -> None:
    """Test the echelon basis of a span."""
    vectors = np.array([[2, 0], [4, 1], [0, 3]], dtype=np.complex128)
    got = rref(vectors)
    assert got.shape == (3, 2)
    assert np.allclose(got[0], [1, 0])
    assert np.allclose(got[1], [0, 1])
