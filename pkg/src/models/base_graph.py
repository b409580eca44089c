"""
Combined base graph models: vertices with subgroup indices, arcs with Z_m voltages
"""
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Directedness(str, Enum):
    """Whether arcs come in inverse pairs (graph) or not (digraph/mixed)"""
    GRAPH = "graph"
    DIGRAPH = "digraph"


class AdjacencyMode(str, Enum):
    """How a base arc contributes to the lift adjacency"""
    SIMPLE = "simple"              # 1 per target coset hit
    MULTIPLICITY = "multiplicity"  # |H+g ∩ K| per target coset


class VertexSpec(BaseModel):
    """Base vertex v with the index d of its subgroup ω(v)"""
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., min_length=1, description="Vertex identifier")
    index: int = Field(..., ge=1, description="Index of ω(v) in Z_m (fibre size)")


class ArcSpec(BaseModel):
    """Base arc tail -> head carrying voltage α(a)"""
    model_config = ConfigDict(frozen=True)

    tail: int = Field(..., ge=0, description="Position of the tail vertex")
    head: int = Field(..., ge=0, description="Position of the head vertex")
    voltage: int = Field(..., ge=0, description="Voltage reduced mod m")
    paired: bool = Field(False, description="Member of an undirected edge pair")


class Violation(BaseModel):
    """One broken invariant of a base graph"""
    model_config = ConfigDict(frozen=True)

    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


class CombinedBaseGraph(BaseModel):
    """
    The combined base graph (Γ, (α, ω)) over Z_m

    Paired arcs are stored consecutively as (forward, reverse); vertex order
    fixes the row order of every matrix built from the graph.
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Group order")
    vertices: Tuple[VertexSpec, ...] = Field(default_factory=tuple)
    arcs: Tuple[ArcSpec, ...] = Field(default_factory=tuple)
    directedness: Directedness = Directedness.GRAPH

    @classmethod
    def from_edges(
        cls,
        m: int,
        vertices: Sequence[Tuple[str, int]],
        edges: Sequence[Tuple[str, str, int]] = (),
        arcs: Sequence[Tuple[str, str, int]] = (),
        directedness: Optional[Directedness] = None,
    ) -> "CombinedBaseGraph":
        """
        Assemble a base graph from named vertices, undirected edges and arcs

        Each edge (u, v, g) expands to the pair u->v with g and v->u with m-g.
        Unknown names raise KeyError.
        """
        specs = tuple(VertexSpec(name=name, index=index) for name, index in vertices)
        position: Dict[str, int] = {spec.name: i for i, spec in enumerate(specs)}
        arc_specs: List[ArcSpec] = []
        for u, v, g in edges:
            g = g % m
            arc_specs.append(ArcSpec(tail=position[u], head=position[v], voltage=g, paired=True))
            arc_specs.append(ArcSpec(tail=position[v], head=position[u], voltage=(m - g) % m, paired=True))
        for u, v, g in arcs:
            arc_specs.append(ArcSpec(tail=position[u], head=position[v], voltage=g % m, paired=False))
        if directedness is None:
            directedness = Directedness.DIGRAPH if arcs else Directedness.GRAPH
        return cls(m=m, vertices=specs, arcs=tuple(arc_specs), directedness=directedness)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def indices(self) -> List[int]:
        return [v.index for v in self.vertices]

    @property
    def names(self) -> List[str]:
        return [v.name for v in self.vertices]

    def position(self, name: str) -> int:
        for i, vertex in enumerate(self.vertices):
            if vertex.name == name:
                return i
        raise KeyError(name)

    def out_degree(self, i: int) -> int:
        """Number of arcs leaving vertex i, parallel arcs counted"""
        return sum(1 for arc in self.arcs if arc.tail == i)
