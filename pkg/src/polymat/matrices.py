"""
Polynomial matrices of a combined base graph

B0(z) is the ordinary voltage matrix of (Γ, α). B(z) belongs to the
associated base graph (Γ, α⁺), in which every arc u -> v with voltage g is
replaced by the |ω(u)| arcs with voltages h + g, h ∈ ω(u). Equivalently
B(z) = W(z)·B0(z) with W(z) = diag(Σ_{h∈ω(u)} z^h).
"""
from typing import List

import numpy as np

from src.basegraph.validation import require_valid
from src.cyclic.arithmetic import (
    powers_of_root,
    ring_multiply,
    subgroup_elements,
    subgroup_weight,
)
from src.models.base_graph import CombinedBaseGraph
from src.models.group import GroupRingElement
from src.models.polymat import PolyMatrix


def _accumulate(base: CombinedBaseGraph, exponents_for_arc) -> PolyMatrix:
    m, n = base.m, base.n
    coeffs = [[[0] * m for _ in range(n)] for _ in range(n)]
    for arc in base.arcs:
        for e in exponents_for_arc(arc):
            coeffs[arc.tail][arc.head][e % m] += 1
    rows = [[GroupRingElement(m=m, coeffs=tuple(cell)) for cell in row] for row in coeffs]
    return PolyMatrix.from_rows(m, rows)


def ordinary_matrix(base: CombinedBaseGraph) -> PolyMatrix:
    """B0(z): entry (u, v) = Σ_{a: u->v} z^{α(a)}"""
    require_valid(base)
    return _accumulate(base, lambda arc: [arc.voltage])


def associated_matrix(base: CombinedBaseGraph) -> PolyMatrix:
    """B(z) by direct α⁺ expansion: entry (u, v) = Σ_a Σ_{h∈ω(u)} z^{h + α(a)}"""
    require_valid(base)
    m = base.m
    return _accumulate(
        base,
        lambda arc: [h + arc.voltage for h in subgroup_elements(m, base.vertices[arc.tail].index)],
    )


def vertex_weights(base: CombinedBaseGraph) -> List[GroupRingElement]:
    """Diagonal of W(z): Σ_{h∈ω(u_i)} z^h per base vertex"""
    return [subgroup_weight(base.m, vertex.index) for vertex in base.vertices]


def factored_associated_matrix(base: CombinedBaseGraph) -> PolyMatrix:
    """B(z) computed as W(z)·B0(z)"""
    b0 = ordinary_matrix(base)
    weights = vertex_weights(base)
    rows = [[ring_multiply(weights[i], entry) for entry in b0.row(i)] for i in range(b0.n)]
    return PolyMatrix.from_rows(base.m, rows)


def evaluate_matrix(matrix: PolyMatrix, r: int) -> np.ndarray:
    """Complex n x n matrix B(ζ^r)"""
    if not 0 <= r < matrix.m:
        raise ValueError(f"exponent r={r} outside [0, {matrix.m})")
    powers = powers_of_root(matrix.m, r)
    if matrix.n == 0:
        return np.zeros((0, 0), dtype=complex)
    coeffs = np.array(
        [[entry.coeffs for entry in row] for row in matrix.entries],
        dtype=float,
    )
    return coeffs @ powers


def vanishing_rows(matrix: PolyMatrix, r: int, tol: float = 1e-9) -> List[int]:
    """
    Rows of B(ζ^r) whose entries are all within tol of zero

    Row i of B(z) carries the factor Σ_{h∈ω(u_i)} z^h, which is 0 at ζ^r when
    o(r) does not divide d_i, so every bad vertex appears here. A good row
    vanishes only if the matching row of B0(ζ^r) does.
    """
    value = evaluate_matrix(matrix, r)
    if value.size == 0:
        return []
    return [int(i) for i in np.flatnonzero(np.max(np.abs(value), axis=1) <= tol)]


def row_sums_at_one(matrix: PolyMatrix) -> List[int]:
    return [sum(entry.total() for entry in row) for row in matrix.entries]

