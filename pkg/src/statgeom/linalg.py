"""Hermitian matrix kernel: eigendecomposition, matrix functions, the
positive-semidefinite order, and the Hilbert-Schmidt inner product.

Every matrix-valued routine accepts plain complex ``numpy`` arrays.
Inputs that are Hermitian up to floating-point noise are symmetrized with
:func:`hermitian_part` before use, so downstream code never sees a matrix
that is off-Hermitian by more than representation error.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .errors import DimensionMismatchError, DomainError, SingularError

__all__ = [
    "EigenSystem",
    "hermitian_part",
    "is_hermitian",
    "eig_hermitian",
    "matrix_function",
    "matrix_sqrt",
    "matrix_inv_sqrt",
    "psd_order_geq",
    "min_eigenvalue",
    "hs_inner",
    "hs_norm",
]


class EigenSystem(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and ascending; ``eigenvectors`` holds the
    matching orthonormal eigenvectors as columns, with the phase of each
    column fixed so its largest-modulus component is real and positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _as_square(a: np.ndarray, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {a.shape}")
    return a


def _require_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch: {a.shape} vs {b.shape}")


def hermitian_part(a: np.ndarray) -> np.ndarray:
    """Return (A + A†)/2."""
    a = _as_square(a)
    return (a + a.conj().T) / 2


def is_hermitian(a: np.ndarray, tol: float = 1e-10) -> bool:
    """True if A equals A† within ``tol`` relative to its HS norm."""
    a = _as_square(a)
    scale = max(hs_norm(a), 1.0)
    return hs_norm(a - a.conj().T) <= tol * scale


def fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column's phase so its largest-modulus entry is real > 0.

    Makes eigenvector output deterministic for a fixed input; ties between
    equal moduli resolve to the lowest row index.
    """
    out = np.array(vectors, dtype=complex, copy=True)
    for k in range(out.shape[1]):
        col = out[:, k]
        idx = int(np.argmax(np.abs(col)))
        pivot = col[idx]
        if np.abs(pivot) > 0:
            out[:, k] = col * (np.abs(pivot) / pivot)
    return out


def eig_hermitian(h: np.ndarray) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized first, eigenvalues come back ascending, and
    eigenvector phases are fixed per :func:`fix_phases`.
    """
    h = hermitian_part(h)
    w, v = np.linalg.eigh(h)
    return EigenSystem(eigenvalues=w, eigenvectors=fix_phases(v))


def matrix_function(
    h: np.ndarray,
    fn: Callable[[np.ndarray], np.ndarray],
    domain_floor: float = -math.inf,
) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    Returns V f(w) V† for the eigendecomposition h = V diag(w) V†.
    Eigenvalues below ``domain_floor`` by more than 1e-12 raise
    :class:`DomainError`; values within that band are clamped to the floor
    so that e.g. a square root never sees -1e-15.
    """
    w, v = eig_hermitian(h)
    if np.any(w < domain_floor - 1e-12):
        raise DomainError(
            f"eigenvalue {w.min():.3e} below domain floor {domain_floor:.3e}"
        )
    if domain_floor > -math.inf:
        w = np.maximum(w, domain_floor)
    fw = np.asarray(fn(w), dtype=complex)
    return hermitian_part((v * fw) @ v.conj().T)


def matrix_sqrt(h: np.ndarray) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix."""
    return matrix_function(h, np.sqrt, domain_floor=0.0)


def matrix_inv_sqrt(h: np.ndarray, rel_floor: float = 1e-12) -> np.ndarray:
    """Inverse square root of a positive-definite Hermitian matrix.

    Raises :class:`SingularError` when the smallest eigenvalue is below
    ``rel_floor`` times the largest eigenvalue magnitude.
    """
    w, v = eig_hermitian(h)
    scale = float(np.max(np.abs(w))) if w.size else 0.0
    if scale == 0.0 or float(w.min()) <= rel_floor * scale:
        raise SingularError(
            f"matrix not invertible: min eigenvalue {w.min():.3e} vs scale {scale:.3e}"
        )
    return hermitian_part((v * (1.0 / np.sqrt(w))) @ v.conj().T)


def min_eigenvalue(h: np.ndarray) -> float:
    """Smallest eigenvalue of the Hermitian part of ``h``."""
    return float(np.linalg.eigvalsh(hermitian_part(h))[0])


def psd_order_geq(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """True iff A >= B in the PSD order, i.e. min eig(A - B) >= -tol."""
    a = _as_square(a, "a")
    b = _as_square(b, "b")
    _require_same_shape(a, b)
    return min_eigenvalue(a - b) >= -tol


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product <A|B> = Tr(B A†).

    Antilinear in the first argument, so ``hs_inner(a, a)`` is real >= 0.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _require_same_shape(a, b)
    return complex(np.sum(np.conj(a) * b))


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm."""
    return float(np.linalg.norm(np.asarray(a)))
