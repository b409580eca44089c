"""
Invariant checks for combined base graphs
"""
from collections import Counter
from typing import List

from src.errors import InvalidBaseGraphError
from src.models.base_graph import CombinedBaseGraph, Directedness, Violation


def validate(graph: CombinedBaseGraph) -> List[Violation]:
    """
    Collect every broken invariant of a base graph

    Returns:
        Empty list iff the graph is valid; violations are never raised here
    """
    violations: List[Violation] = []
    m, n = graph.m, graph.n

    seen = set()
    for vertex in graph.vertices:
        if vertex.name in seen:
            violations.append(Violation(kind="duplicate-vertex", message=f"vertex name {vertex.name!r} repeated"))
        seen.add(vertex.name)
        if m % vertex.index != 0:
            violations.append(Violation(
                kind="index-divisibility",
                message=f"index {vertex.index} of vertex {vertex.name!r} does not divide m={m}",
            ))

    for position, arc in enumerate(graph.arcs):
        if arc.tail >= n or arc.head >= n:
            violations.append(Violation(
                kind="arc-endpoint",
                message=f"arc {position} references vertex outside [0, {n})",
            ))
        if arc.voltage >= m:
            violations.append(Violation(
                kind="voltage-range",
                message=f"arc {position} has voltage {arc.voltage} not reduced mod {m}",
            ))

    violations.extend(_pair_layout_violations(graph))
    if graph.directedness == Directedness.GRAPH:
        violations.extend(_reverse_closure_violations(graph))
    return violations


def require_valid(graph: CombinedBaseGraph) -> None:
    """Raise InvalidBaseGraphError carrying the report if graph is invalid"""
    violations = validate(graph)
    if violations:
        raise InvalidBaseGraphError(violations)


def _pair_layout_violations(graph: CombinedBaseGraph) -> List[Violation]:
    # paired arcs sit next to their reverse: (u, v, g) then (v, u, -g)
    m = graph.m
    violations = []
    i = 0
    while i < len(graph.arcs):
        arc = graph.arcs[i]
        if not arc.paired:
            i += 1
            continue
        partner = graph.arcs[i + 1] if i + 1 < len(graph.arcs) else None
        if (
            partner is None
            or not partner.paired
            or partner.tail != arc.head
            or partner.head != arc.tail
            or partner.voltage != (m - arc.voltage) % m
        ):
            violations.append(Violation(
                kind="broken-pair",
                message=f"paired arc {i} is not followed by its reverse",
            ))
            i += 1
        else:
            i += 2
    return violations


def _reverse_closure_violations(graph: CombinedBaseGraph) -> List[Violation]:
    m = graph.m
    counts = Counter((arc.tail, arc.head, arc.voltage) for arc in graph.arcs)
    names = graph.names
    violations = []
    for key in sorted(counts):
        tail, head, g = key
        reverse = (head, tail, (m - g) % m)
        if reverse == key:
            unmatched = counts[key] % 2
        elif key < reverse:
            unmatched = abs(counts[key] - counts.get(reverse, 0))
        else:
            if reverse in counts:
                continue
            unmatched = counts[key]
        if unmatched:
            tail_name = names[tail] if tail < len(names) else tail
            head_name = names[head] if head < len(names) else head
            violations.append(Violation(
                kind="unpaired-arc",
                message=f"{unmatched} arc(s) {tail_name}->{head_name} with voltage {g} lack an inverse partner",
            ))
    return violations
