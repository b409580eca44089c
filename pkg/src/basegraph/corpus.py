"""
Compiled-in base graphs for the worked examples
"""
import re
from pathlib import Path
from typing import Callable, Dict, Union

from src.basegraph.text_format import load_base_graph
from src.models.base_graph import CombinedBaseGraph


def builtin_f3c6() -> CombinedBaseGraph:
    """
    Base of the 3-token graph F3(C6) over Z_6

    Orbit representatives u=012, v=013, y=014 (trivial ω) and x=024
    (ω(x) = 2·Z_6). Voltages read off the token moves.
    """
    return CombinedBaseGraph.from_edges(
        m=6,
        vertices=[("u", 6), ("v", 6), ("y", 6), ("x", 2)],
        edges=[
            ("u", "v", 0),
            ("u", "y", 1),
            ("v", "y", 0),
            ("v", "y", 2),
            ("v", "x", 1),
            ("y", "x", 0),
        ],
    )


def builtin_j42() -> CombinedBaseGraph:
    """
    Base of the Johnson graph J(4,2) (the octahedron) over Z_4

    u has trivial ω and v has ω(v) = 2·Z_4. The loop at u lifts to a 4-cycle
    and the two u-v edges join every u-vertex to both v-vertices.
    """
    return CombinedBaseGraph.from_edges(
        m=4,
        vertices=[("u", 4), ("v", 2)],
        edges=[("u", "u", 1), ("u", "v", 0), ("u", "v", 1)],
    )


def builtin_cycle(m: int) -> CombinedBaseGraph:
    """Single-vertex Cayley base of the cycle C_m"""
    return CombinedBaseGraph.from_edges(m=m, vertices=[("a", m)], edges=[("a", "a", 1)])


BUILTINS: Dict[str, Callable[[], CombinedBaseGraph]] = {
    "f3c6": builtin_f3c6,
    "j42": builtin_j42,
}

_CYCLE_NAME = re.compile(r"^c(\d+)$")


def is_builtin(name: str) -> bool:
    match = _CYCLE_NAME.match(name)
    return name in BUILTINS or (match is not None and int(match.group(1)) >= 1)


def resolve_input(source: Union[str, Path]) -> CombinedBaseGraph:
    """
    Load a builtin by name (f3c6, j42, c<m>) or parse a .cvg file

    Raises:
        FileNotFoundError: source is neither a builtin nor an existing file
        BaseGraphParseError: the file does not parse
    """
    name = str(source)
    if name in BUILTINS:
        return BUILTINS[name]()
    match = _CYCLE_NAME.match(name)
    if match and int(match.group(1)) >= 1:
        return builtin_cycle(int(match.group(1)))
    path = Path(name)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {name}")
    return load_base_graph(path)
