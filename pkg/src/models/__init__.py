"""Initialize models package"""
from src.models.group import (
    CyclicGroup,
    Subgroup,
    Coset,
    GroupRingElement
)
from src.models.base_graph import (
    AdjacencyMode,
    ArcSpec,
    CombinedBaseGraph,
    Directedness,
    VertexSpec,
    Violation
)
from src.models.lift import FactoredLift, LiftArc, LiftVertex
from src.models.polymat import PolyMatrix
from src.models.spectrum import (
    EigenCluster,
    EigenPair,
    LiftedEigenvector,
    RBlockReport,
    SpectrumReport
)
from src.models.verification import (
    CheckResult,
    ComparisonReport,
    MatchedPair,
    SweepReport,
    SweepTrial,
    TrialOutcome,
    Verdict,
    VerificationReport
)

__all__ = [
    "CyclicGroup",
    "Subgroup",
    "Coset",
    "GroupRingElement",
    "AdjacencyMode",
    "ArcSpec",
    "CombinedBaseGraph",
    "Directedness",
    "VertexSpec",
    "Violation",
    "FactoredLift",
    "LiftArc",
    "LiftVertex",
    "PolyMatrix",
    "EigenCluster",
    "EigenPair",
    "LiftedEigenvector",
    "RBlockReport",
    "SpectrumReport",
    "CheckResult",
    "ComparisonReport",
    "MatchedPair",
    "SweepReport",
    "SweepTrial",
    "TrialOutcome",
    "Verdict",
    "VerificationReport",
]
