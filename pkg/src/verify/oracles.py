"""
Independent spectral oracles: dense eigendecomposition of the lift and the
token graph of a cycle built straight from its subset definition
"""
from itertools import combinations
from typing import List

import networkx as nx
import numpy as np
import scipy.linalg

from src.errors import EigenSolverError
from src.models.lift import FactoredLift

IMAGINARY_TOL = 1e-10


def adjacency_spectrum(adjacency: np.ndarray) -> List[complex]:
    """
    Eigenvalues of an adjacency matrix with multiplicity, descending

    Raises:
        EigenSolverError: LAPACK fails, or a symmetric matrix yields an
            eigenvalue with imaginary part above IMAGINARY_TOL
    """
    a = np.asarray(adjacency, dtype=float)
    if a.shape[0] == 0:
        return []
    try:
        if np.array_equal(a, a.T):
            values = scipy.linalg.eigvalsh(a).astype(complex)
        else:
            values = scipy.linalg.eigvals(a)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise EigenSolverError(a.shape, f"direct eigensolve failed ({exc})") from exc

    if np.array_equal(a, a.T):
        worst = float(np.max(np.abs(values.imag)))
        if worst > IMAGINARY_TOL:
            raise EigenSolverError(a.shape, f"symmetric adjacency gave imaginary part {worst:.2e}")
        values = values.real.astype(complex)
    return sorted((complex(v) for v in values), key=lambda v: (-round(v.real, 9), -round(v.imag, 9)))


def direct_spectrum(lift: FactoredLift) -> List[complex]:
    """Spectrum of the lift adjacency, computed without the base graph"""
    return adjacency_spectrum(lift.adjacency)


def token_graph(host: nx.Graph, k: int) -> nx.Graph:
    """
    k-token graph of host: k-subsets, adjacent when one token moves along a
    host edge onto an unoccupied vertex
    """
    tokens = nx.Graph()
    nodes = sorted(host.nodes())
    subsets = [frozenset(c) for c in combinations(nodes, k)]
    tokens.add_nodes_from(subsets)
    for subset in subsets:
        for i in subset:
            for j in host.neighbors(i):
                if j in subset:
                    continue
                tokens.add_edge(subset, (subset - {i}) | {j})
    return tokens


def token_graph_cycle(n: int, k: int) -> np.ndarray:
    """
    Adjacency of F_k(C_n), rows ordered by the sorted k-subsets of Z_n

    Raises:
        ValueError: unless 1 <= k < n
    """
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    if not 1 <= k < n:
        raise ValueError(f"token count must satisfy 1 <= k < n, got k={k}, n={n}")
    graph = token_graph(nx.cycle_graph(n), k)
    order = [frozenset(c) for c in combinations(range(n), k)]
    return nx.to_numpy_array(graph, nodelist=order, dtype=np.int64)
