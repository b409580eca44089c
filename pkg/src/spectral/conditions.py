"""
Support condition: which coordinates of an eigenvector of B(ζ^r) may be nonzero
"""
from typing import List, Sequence

import numpy as np
import scipy.linalg

from src.cyclic.arithmetic import element_order
from src.models.base_graph import CombinedBaseGraph


def bad_vertices(base: CombinedBaseGraph, r: int) -> List[int]:
    """{i : o(r) does not divide d_i}, with o(0) = 1"""
    o_r = element_order(base.m, r)
    return [i for i, vertex in enumerate(base.vertices) if vertex.index % o_r != 0]


def constrained_eigenspace(matrix: np.ndarray, value: complex, bad: Sequence[int], tol: float) -> np.ndarray:
    """
    Orthonormal basis (as columns) of {f : Mf = λf and f_i = 0 for i in bad}

    Computed as the null space of the stacked matrix [M - λI ; S] where S
    selects the bad coordinates; singular values below tol count as zero.
    """
    m = np.asarray(matrix, dtype=complex)
    n = m.shape[0]
    selector = np.zeros((len(bad), n), dtype=complex)
    selector[np.arange(len(bad)), np.asarray(bad, dtype=int)] = 1.0
    stacked = np.vstack([m - value * np.eye(n), selector])
    _, singular, vh = scipy.linalg.svd(stacked)
    nullity = int(np.sum(singular < tol))
    return vh[n - nullity:].conj().T


def valid_multiplicity(matrix: np.ndarray, value: complex, bad: Sequence[int], tol: float) -> int:
    """Dimension of the support-constrained λ-eigenspace"""
    return int(constrained_eigenspace(matrix, value, bad, tol).shape[1])
