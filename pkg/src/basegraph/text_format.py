"""
Line-oriented text format for combined base graphs (.cvg)

    group <m>
    mode graph|digraph          (optional)
    vertex <name> index <d>
    edge <name> <name> <g>      (undirected, expands to an inverse arc pair)
    arc <name> <name> <g>       (directed)

'#' starts a comment. Voltages are reduced mod m on read.
"""
from pathlib import Path
from typing import Dict, List, Optional, Union

from src.errors import BaseGraphParseError
from src.models.base_graph import ArcSpec, CombinedBaseGraph, Directedness, VertexSpec


def _parse_int(token: str, what: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise BaseGraphParseError(f"{what} must be an integer, got {token!r}", line_no) from None


def parse_base_graph(text: str) -> CombinedBaseGraph:
    """
    Parse and validate a base graph

    Args:
        text: file content in the .cvg line format

    Returns:
        CombinedBaseGraph with edges expanded into reverse arc pairs

    Raises:
        BaseGraphParseError: with the offending line number
    """
    m: Optional[int] = None
    declared_mode: Optional[Directedness] = None
    vertices: List[VertexSpec] = []
    positions: Dict[str, int] = {}
    arcs: List[ArcSpec] = []
    saw_arc_line = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if m is None:
            if keyword != "group" or len(args) != 1:
                raise BaseGraphParseError("first statement must be 'group <m>'", line_no)
            m = _parse_int(args[0], "group order", line_no)
            if m < 1:
                raise BaseGraphParseError(f"group order must be positive, got {m}", line_no)
            continue

        if keyword == "group":
            raise BaseGraphParseError("duplicate 'group' statement", line_no)

        elif keyword == "mode":
            if len(args) != 1 or args[0] not in ("graph", "digraph"):
                raise BaseGraphParseError("expected 'mode graph' or 'mode digraph'", line_no)
            mode = Directedness(args[0])
            if declared_mode is not None and declared_mode != mode:
                raise BaseGraphParseError(f"mode redeclared as {mode.value}", line_no)
            if mode == Directedness.GRAPH and saw_arc_line:
                raise BaseGraphParseError("'mode graph' declared after an 'arc' line", line_no)
            declared_mode = mode

        elif keyword == "vertex":
            if len(args) != 3 or args[1] != "index":
                raise BaseGraphParseError("expected 'vertex <name> index <d>'", line_no)
            name = args[0]
            d = _parse_int(args[2], "index", line_no)
            if name in positions:
                raise BaseGraphParseError(f"duplicate vertex name {name!r}", line_no)
            if d < 1 or m % d != 0:
                raise BaseGraphParseError(f"index {d} of vertex {name!r} does not divide m={m}", line_no)
            positions[name] = len(vertices)
            vertices.append(VertexSpec(name=name, index=d))

        elif keyword in ("edge", "arc"):
            if len(args) != 3:
                raise BaseGraphParseError(f"expected '{keyword} <name> <name> <g>'", line_no)
            for name in args[:2]:
                if name not in positions:
                    raise BaseGraphParseError(f"unknown vertex {name!r}", line_no)
            tail, head = positions[args[0]], positions[args[1]]
            g = _parse_int(args[2], "voltage", line_no) % m
            if keyword == "edge":
                arcs.append(ArcSpec(tail=tail, head=head, voltage=g, paired=True))
                arcs.append(ArcSpec(tail=head, head=tail, voltage=(m - g) % m, paired=True))
            else:
                if declared_mode == Directedness.GRAPH:
                    raise BaseGraphParseError("'arc' line in a file declared 'mode graph'", line_no)
                saw_arc_line = True
                arcs.append(ArcSpec(tail=tail, head=head, voltage=g, paired=False))

        else:
            raise BaseGraphParseError(f"unknown statement {keyword!r}", line_no)

    if m is None:
        raise BaseGraphParseError("missing 'group <m>' statement")

    if declared_mode is not None:
        directedness = declared_mode
    else:
        directedness = Directedness.DIGRAPH if saw_arc_line else Directedness.GRAPH

    return CombinedBaseGraph(m=m, vertices=tuple(vertices), arcs=tuple(arcs), directedness=directedness)


def serialize_base_graph(graph: CombinedBaseGraph, comment: Optional[str] = None) -> str:
    """Render a base graph in the .cvg format (inverse of parse_base_graph)"""
    names = graph.names
    lines: List[str] = []
    if comment:
        lines.extend(f"# {text}" for text in comment.splitlines())
    lines.append(f"group {graph.m}")
    has_unpaired = any(not arc.paired for arc in graph.arcs)
    if graph.directedness == Directedness.DIGRAPH and not has_unpaired:
        lines.append("mode digraph")
    for vertex in graph.vertices:
        lines.append(f"vertex {vertex.name} index {vertex.index}")

    i = 0
    while i < len(graph.arcs):
        arc = graph.arcs[i]
        keyword = "edge" if arc.paired else "arc"
        lines.append(f"{keyword} {names[arc.tail]} {names[arc.head]} {arc.voltage}")
        i += 2 if arc.paired else 1
    return "\n".join(lines) + "\n"


def load_base_graph(path: Union[str, Path]) -> CombinedBaseGraph:
    """Read and parse a .cvg file"""
    return parse_base_graph(Path(path).read_text(encoding="utf-8"))
