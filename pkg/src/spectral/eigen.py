"""
Dense eigensolver kernel with residual certification
"""
from typing import List

import numpy as np
import scipy.linalg

from src.errors import EigenSolverError
from src.models.spectrum import EigenPair

DEFAULT_EIG_TOL = 1e-10
ORDER_DIGITS = 9


def order_key(value: complex):
    """Ascending by real part, then imaginary part, insensitive to round-off"""
    return (round(value.real, ORDER_DIGITS), round(value.imag, ORDER_DIGITS))


def frobenius_scale(matrix: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(matrix, "fro")))


def is_hermitian(matrix: np.ndarray) -> bool:
    """Hermitian up to round-off in the evaluated entries"""
    atol = 1e-13 * frobenius_scale(matrix)
    return bool(np.allclose(matrix, matrix.conj().T, rtol=0.0, atol=atol))


def eig(matrix: np.ndarray, eig_tol: float = DEFAULT_EIG_TOL) -> List[EigenPair]:
    """
    All n eigenpairs of a complex square matrix, with multiplicity

    Hermitian input goes through eigh, everything else through the general
    QR-based solver. Every pair is checked against
    ‖Mv - λv‖ / max(1, ‖M‖_F) ≤ eig_tol.

    Returns:
        EigenPairs with unit vectors, sorted by real part then imaginary part

    Raises:
        EigenSolverError: LAPACK exhausted its iteration budget or a residual
            exceeds eig_tol
    """
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"eig needs a nonempty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("eig needs finite entries")

    try:
        if is_hermitian(m):
            values, vectors = scipy.linalg.eigh(m)
        else:
            values, vectors = scipy.linalg.eig(m)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigenSolverError(m.shape, f"LAPACK iteration budget exhausted ({exc})") from exc

    scale = frobenius_scale(m)
    pairs = []
    for k in range(m.shape[0]):
        value = complex(values[k])
        vector = vectors[:, k] / np.linalg.norm(vectors[:, k])
        residual = float(np.linalg.norm(m @ vector - value * vector)) / scale
        if residual > eig_tol:
            raise EigenSolverError(m.shape, f"residual {residual:.2e} of eigenvalue {value:.6g} exceeds {eig_tol:.0e}")
        pairs.append(EigenPair(value=value, vector=vector, residual=residual))
    pairs.sort(key=lambda pair: order_key(pair.value))
    return pairs
