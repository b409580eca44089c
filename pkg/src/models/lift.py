"""
Factored lift models
"""
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.models.base_graph import AdjacencyMode, CombinedBaseGraph


class LiftVertex(BaseModel):
    """Lift vertex (u_i, H) with H the coset coset_rep + ω(u_i)"""
    model_config = ConfigDict(frozen=True)

    base_index: int = Field(..., ge=0, description="Position of u_i in the base vertex list")
    coset_rep: int = Field(..., ge=0, description="Coset rep j in [0, d_i)")


class LiftArc(BaseModel):
    """One weighted arc of the lift lying above a base arc"""
    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    weight: int = Field(..., ge=1)


class FactoredLift(BaseModel):
    """
    The factored lift Γ^(α,ω) with its dense integer adjacency matrix

    Vertices are enumerated by base vertex order, then coset rep ascending,
    so (u_i, j) has linear index offsets[i] + j.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: CombinedBaseGraph
    mode: AdjacencyMode
    offsets: Tuple[int, ...]
    adjacency: np.ndarray

    @property
    def N(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def vertices(self) -> List[LiftVertex]:
        return [
            LiftVertex(base_index=i, coset_rep=j)
            for i, spec in enumerate(self.base.vertices)
            for j in range(spec.index)
        ]

    def index_of(self, base_index: int, coset_rep: int) -> int:
        return self.offsets[base_index] + coset_rep

    def labels(self) -> List[str]:
        return [
            f"{spec.name}:{j}"
            for spec in self.base.vertices
            for j in range(spec.index)
        ]
