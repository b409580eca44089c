"""
Lift export: edge-list text and JSON document
"""
from collections import Counter
from typing import Any, Dict

from src.lift.builder import arc_count, degree_sequence, edge_count
from src.models.base_graph import Directedness
from src.models.lift import FactoredLift


def to_edge_list(lift: FactoredLift) -> str:
    """One 'u:j v:k weight' line per nonzero adjacency entry, row-major"""
    labels = lift.labels()
    lines = []
    rows, cols = lift.adjacency.nonzero()
    for x, y in zip(rows.tolist(), cols.tolist()):
        lines.append(f"{labels[x]} {labels[y]} {int(lift.adjacency[x, y])}")
    return "\n".join(lines) + ("\n" if lines else "")


def to_json_document(lift: FactoredLift) -> Dict[str, Any]:
    return {
        "N": lift.N,
        "mode": lift.mode.value,
        "vertices": lift.labels(),
        "degrees": [int(x) for x in lift.adjacency.sum(axis=1)],
        "degree_sequence": degree_sequence(lift),
        "adjacency": lift.adjacency.tolist(),
    }


def _counted(count: int, noun: str) -> str:
    return f"{count} {noun}" if count == 1 else f"{count} {noun}s"


def summary_line(lift: FactoredLift) -> str:
    """
    One-line description such as 'N=6, 4-regular, 12 edges' or
    'N=20, degrees 2^6 4^12 6^2, 36 edges'; digraph lifts report arcs
    """
    degrees = Counter(degree_sequence(lift))
    if len(degrees) == 1:
        shape = f"{next(iter(degrees))}-regular"
    else:
        shape = "degrees " + " ".join(f"{d}^{count}" for d, count in sorted(degrees.items()))
    if lift.base.directedness == Directedness.GRAPH:
        size = _counted(edge_count(lift), "edge")
    else:
        size = _counted(arc_count(lift), "arc")
    if lift.N == 0:
        return f"N=0, {size}"
    return f"N={lift.N}, {shape}, {size}"
