"""Factored lift construction, automorphisms and export"""
from src.lift.builder import (
    LiftBuilder,
    arc_count,
    arc_fibre,
    build_lift,
    degree_sequence,
    edge_count,
    ordinary_lift_adjacency,
    permutation_matrix,
    reduced_ordinary_lift,
    translation_map,
)
from src.lift.export import summary_line, to_edge_list, to_json_document

__all__ = [
    "LiftBuilder",
    "arc_count",
    "arc_fibre",
    "build_lift",
    "degree_sequence",
    "edge_count",
    "ordinary_lift_adjacency",
    "permutation_matrix",
    "reduced_ordinary_lift",
    "summary_line",
    "to_edge_list",
    "to_json_document",
    "translation_map",
]
