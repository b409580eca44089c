"""
Eigenpair, per-r block and assembled spectrum reports
"""
from typing import Any, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from src.models.base_graph import AdjacencyMode

JSON_DIGITS = 10


def complex_pair(value: complex, digits: int = JSON_DIGITS) -> List[float]:
    """[re, im] rounded for stable JSON output (no negative zeros)"""
    return [round(float(value.real), digits) + 0.0, round(float(value.imag), digits) + 0.0]


class EigenPair(BaseModel):
    """λ and a unit eigenvector f of a complex matrix"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: complex
    vector: np.ndarray
    residual: float = Field(..., ge=0.0)


class EigenCluster(BaseModel):
    """Eigenvalues of B(ζ^r) grouped within cluster_tol"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: complex
    algebraic: int = Field(..., ge=1, description="Multiplicity in B(ζ^r)")
    valid: int = Field(..., ge=0, description="Dimension of the support-constrained eigenspace")

    @property
    def rejected(self) -> int:
        return self.algebraic - self.valid


class RBlockReport(BaseModel):
    """Eigen data of B(ζ^r) for one exponent r"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: int
    o_r: int = Field(..., ge=1, description="Order of ζ^r")
    bad_vertices: Tuple[int, ...] = Field(default_factory=tuple)
    clusters: List[EigenCluster] = Field(default_factory=list)

    @property
    def valid_count(self) -> int:
        return sum(c.valid for c in self.clusters)

    @property
    def algebraic_count(self) -> int:
        return sum(c.algebraic for c in self.clusters)

    def to_json_document(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "o": self.o_r,
            "bad": list(self.bad_vertices),
            "clusters": [
                {"value": complex_pair(c.value), "alg": c.algebraic, "valid": c.valid}
                for c in self.clusters
            ],
        }


class LiftedEigenvector(BaseModel):
    """Eigenvector of the lift adjacency obtained from an eigenvector of B(ζ^r)"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: complex
    vector: np.ndarray
    source_r: int
    residual: float = Field(..., ge=0.0, description="‖Av - λv‖ / (‖A‖_F ‖v‖)")
    residual_ok: bool = True


class SpectrumReport(BaseModel):
    """Lift spectrum assembled from the per-r blocks"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    N: int
    mode: AdjacencyMode
    per_r: List[RBlockReport] = Field(default_factory=list)
    spectrum: List[complex] = Field(default_factory=list)
    eigvectors: List[LiftedEigenvector] = Field(default_factory=list)

    @property
    def complete(self) -> bool:
        return len(self.spectrum) == self.N

    @property
    def residual_failures(self) -> int:
        return sum(1 for v in self.eigvectors if not v.residual_ok)

    def valid_counts(self) -> List[int]:
        return [block.valid_count for block in self.per_r]

    def to_json_document(self) -> Dict[str, Any]:
        return {
            "N": self.N,
            "per_r": [block.to_json_document() for block in self.per_r],
            "spectrum": [complex_pair(value) for value in self.spectrum],
            "complete": self.complete,
        }
