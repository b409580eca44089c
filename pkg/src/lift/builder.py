"""
Factored lift construction

For a base arc a = u -> v with voltage g and a coset H = j + ω(u), the lift
has an arc (u, H) -> (v, K) for every coset K of ω(v) meeting H + g. In
multiplicity mode that arc is weighted by |(H + g) ∩ K|.
"""
import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.basegraph.validation import require_valid
from src.cyclic.arithmetic import coset_intersection_size, cosets_hit
from src.errors import DirectedLiftError, InvalidBaseGraphError
from src.models.base_graph import AdjacencyMode, ArcSpec, CombinedBaseGraph, Directedness, Violation
from src.models.lift import FactoredLift, LiftArc

logger = logging.getLogger(__name__)


def fibre_offsets(base: CombinedBaseGraph) -> Tuple[int, ...]:
    """offsets[i] = Σ_{k<i} d_k"""
    offsets = []
    total = 0
    for vertex in base.vertices:
        offsets.append(total)
        total += vertex.index
    return tuple(offsets)


def arc_contributions(base: CombinedBaseGraph, arc: ArcSpec, mode: AdjacencyMode) -> Iterator[Tuple[int, int, int]]:
    """(j, c, weight) for every lift arc (u, j) -> (v, c) above one base arc"""
    m = base.m
    d_u = base.vertices[arc.tail].index
    d_v = base.vertices[arc.head].index
    for j in range(d_u):
        shifted = (j + arc.voltage) % d_u
        for c in cosets_hit(m, d_u, j, arc.voltage, d_v):
            if mode == AdjacencyMode.SIMPLE:
                yield j, c, 1
            else:
                yield j, c, coset_intersection_size(m, d_u, shifted, d_v, c)


class LiftBuilder:
    """
    Builds the factored lift Γ^(α,ω) of a combined base graph

    Multiplicity mode is the default: it is the adjacency whose eigenvectors
    the polynomial-matrix method reproduces exactly. Simple mode keeps one
    arc per hit coset.
    """

    def __init__(self, mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY):
        self.mode = AdjacencyMode(mode)

    def build(self, base: CombinedBaseGraph, mode: Optional[AdjacencyMode] = None) -> FactoredLift:
        """
        Construct the lift

        Args:
            base: combined base graph; must validate
            mode: adjacency mode, defaults to the builder's mode

        Returns:
            FactoredLift with an N x N integer adjacency matrix

        Raises:
            InvalidBaseGraphError: base fails validation
        """
        require_valid(base)
        mode = AdjacencyMode(mode or self.mode)
        offsets = fibre_offsets(base)
        size = sum(base.indices)
        adjacency = np.zeros((size, size), dtype=np.int64)

        for arc in base.arcs:
            row0 = offsets[arc.tail]
            col0 = offsets[arc.head]
            for j, c, weight in arc_contributions(base, arc, mode):
                adjacency[row0 + j, col0 + c] += weight

        adjacency.setflags(write=False)
        logger.debug("built %s-mode lift: N=%d from %d base arcs", mode.value, size, len(base.arcs))
        return FactoredLift(base=base, mode=mode, offsets=offsets, adjacency=adjacency)


def build_lift(base: CombinedBaseGraph, mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY) -> FactoredLift:
    return LiftBuilder(mode).build(base)


def arc_fibre(lift: FactoredLift, arc_index: int) -> List[LiftArc]:
    """Lift arcs lying above the base arc with position arc_index"""
    base = lift.base
    arc = base.arcs[arc_index]
    return [
        LiftArc(
            source=lift.index_of(arc.tail, j),
            target=lift.index_of(arc.head, c),
            weight=weight,
        )
        for j, c, weight in arc_contributions(base, arc, lift.mode)
    ]


def translation_map(lift: FactoredLift, g: int) -> List[int]:
    """
    Vertex permutation induced by translation by g

    images[x] is the image of x; (u_i, j) goes to (u_i, (j + g) mod d_i).
    """
    m = lift.base.m
    g %= m
    images = []
    for i, vertex in enumerate(lift.base.vertices):
        for j in range(vertex.index):
            images.append(lift.index_of(i, (j + g) % vertex.index))
    return images


def permutation_matrix(images: List[int]) -> np.ndarray:
    """P with P[images[x], x] = 1, so (P A Pᵀ)[images[x], images[y]] = A[x, y]"""
    size = len(images)
    matrix = np.zeros((size, size), dtype=np.int64)
    matrix[images, np.arange(size)] = 1
    return matrix


def degree_sequence(lift: FactoredLift) -> List[int]:
    """Sorted row sums of the adjacency matrix"""
    return sorted(int(x) for x in lift.adjacency.sum(axis=1))


def arc_count(lift: FactoredLift) -> int:
    return int(lift.adjacency.sum())


def edge_count(lift: FactoredLift) -> int:
    """
    Number of undirected edges (loops counted once)

    Raises:
        DirectedLiftError: the base is digraph-mode
    """
    if lift.base.directedness != Directedness.GRAPH:
        raise DirectedLiftError(
            f"edge count undefined for a digraph-mode lift; it has {arc_count(lift)} arcs"
        )
    return arc_count(lift) // 2


def ordinary_lift_adjacency(base: CombinedBaseGraph) -> np.ndarray:
    """
    Ordinary voltage lift over Z_m: (u, j) -> (v, j + g)

    Only defined when every vertex has index m (trivial ω).
    """
    m = base.m
    if any(d != m for d in base.indices):
        raise InvalidBaseGraphError([Violation(kind="nontrivial-omega", message="ordinary lift needs every index = m")])
    n = base.n
    adjacency = np.zeros((n * m, n * m), dtype=np.int64)
    for arc in base.arcs:
        for j in range(m):
            adjacency[arc.tail * m + j, arc.head * m + (j + arc.voltage) % m] += 1
    return adjacency


def reduced_ordinary_lift(base: CombinedBaseGraph) -> np.ndarray:
    """
    Ordinary lift over Z_d for a base whose vertices all carry index d

    Voltages are reduced mod d. The simple-mode factored lift equals this
    matrix and the multiplicity-mode lift equals m/d times it.
    """
    indices = set(base.indices)
    if len(indices) != 1:
        raise InvalidBaseGraphError([Violation(kind="mixed-indices", message="vertices carry different indices")])
    d = indices.pop()
    n = base.n
    adjacency = np.zeros((n * d, n * d), dtype=np.int64)
    for arc in base.arcs:
        for j in range(d):
            adjacency[arc.tail * d + j, arc.head * d + (j + arc.voltage) % d] += 1
    return adjacency
