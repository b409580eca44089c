"""Combined base graphs: model helpers, text format, validation and corpus"""
from src.basegraph.corpus import BUILTINS, builtin_cycle, builtin_f3c6, builtin_j42, resolve_input
from src.basegraph.text_format import load_base_graph, parse_base_graph, serialize_base_graph
from src.basegraph.validation import require_valid, validate

__all__ = [
    "BUILTINS",
    "builtin_cycle",
    "builtin_f3c6",
    "builtin_j42",
    "load_base_graph",
    "parse_base_graph",
    "require_valid",
    "resolve_input",
    "serialize_base_graph",
    "validate",
]
