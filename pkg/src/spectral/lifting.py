"""
Eigenvector lifting: f ↦ v with v_(u_i, j) = f_i·ζ^{rj}
"""
import numpy as np

from src.cyclic.arithmetic import root_of_unity
from src.errors import ConditionViolationError
from src.models.base_graph import CombinedBaseGraph
from src.spectral.conditions import bad_vertices


def lift_eigenvector(f, r: int, base: CombinedBaseGraph, zero_tol: float = 1e-8) -> np.ndarray:
    """
    Lift an eigenvector of B(ζ^r) to an N-vector on the factored lift

    Args:
        f: eigenvector of B(ζ^r), one coordinate per base vertex
        r: exponent of ζ
        base: combined base graph
        zero_tol: coordinates on bad vertices must satisfy |f_i| ≤ zero_tol·‖f‖

    Raises:
        ConditionViolationError: a bad coordinate is not negligible
    """
    f = np.asarray(f, dtype=complex)
    m = base.m
    if f.shape != (base.n,):
        raise ValueError(f"expected a vector of length {base.n}, got shape {f.shape}")
    bound = zero_tol * float(np.linalg.norm(f))
    bad = set(bad_vertices(base, r))
    for i in sorted(bad):
        if abs(f[i]) > bound:
            raise ConditionViolationError(i, float(abs(f[i])), r)

    pieces = []
    for i, vertex in enumerate(base.vertices):
        if i in bad:
            # the phase pattern is ill-defined on the fibre; the coordinate is zero
            pieces.append(np.zeros(vertex.index, dtype=complex))
            continue
        phases = np.array([root_of_unity(m, (r * j) % m) for j in range(vertex.index)], dtype=complex)
        pieces.append(f[i] * phases)
    if not pieces:
        return np.zeros(0, dtype=complex)
    return np.concatenate(pieces)
