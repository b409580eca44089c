"""Oracles, comparisons, tables and randomized sweeps"""
from src.verify.checks import (
    VerificationSuite,
    automorphism_check,
    frobenius_identity,
    trace_identity,
)
from src.verify.comparison import compare_multisets
from src.verify.oracles import adjacency_spectrum, direct_spectrum, token_graph, token_graph_cycle
from src.verify.sweep import RESTRICTIONS, SweepRunner, random_base_graph, random_sweep
from src.verify.table import render_rows, rows_from_report, table_report, table_rows

__all__ = [
    "RESTRICTIONS",
    "SweepRunner",
    "VerificationSuite",
    "adjacency_spectrum",
    "automorphism_check",
    "compare_multisets",
    "direct_spectrum",
    "frobenius_identity",
    "random_base_graph",
    "random_sweep",
    "render_rows",
    "rows_from_report",
    "table_report",
    "table_rows",
    "token_graph",
    "token_graph_cycle",
    "trace_identity",
]
