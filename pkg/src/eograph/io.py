"""EOG v1 text format, DOT export and vertex-map files.

EOG v1::

    eog 1
    point a
    edge a b      # a->b is the least edge out of a
    edge a c

``#`` starts a comment, blank lines are ignored. A ``vertex <v>`` line may
declare a vertex with no incident edges; :func:`emit_eog` writes one only for
such vertices.
"""

from __future__ import annotations

from collections.abc import Mapping

from .errors import DuplicateEdge, EOGSyntaxError, MissingPoint, SelfLoop
from .graph import EdgeOrderedGraph, VertexId

HEADER = "eog 1"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_eog(text: str) -> EdgeOrderedGraph:
    lines = _lines(text)
    first = next(lines, None)
    if first is None:
        raise EOGSyntaxError("empty input, expected header 'eog 1'", 1)
    lineno, words = first
    if words != ["eog", "1"]:
        raise EOGSyntaxError(f"expected header 'eog 1', got {' '.join(words)!r}", lineno)
    point: VertexId | None = None
    names: dict[VertexId, None] = {}
    succ: dict[VertexId, list[VertexId]] = {}
    seen: set[tuple[VertexId, VertexId]] = set()
    for lineno, words in lines:
        verb, args = words[0], words[1:]
        if verb == "point":
            if point is not None:
                raise EOGSyntaxError("second 'point' line", lineno)
            if len(args) != 1:
                raise EOGSyntaxError("'point' takes exactly one vertex", lineno)
            point = args[0]
            names.setdefault(point)
        elif verb in ("edge", "vertex"):
            if point is None:
                raise EOGSyntaxError(f"'{verb}' before 'point' line", lineno)
            if verb == "vertex":
                if len(args) != 1:
                    raise EOGSyntaxError("'vertex' takes exactly one vertex", lineno)
                names.setdefault(args[0])
                continue
            if len(args) != 2:
                raise EOGSyntaxError("'edge' takes exactly two vertices", lineno)
            u, v = args
            if u == v:
                raise SelfLoop(f"line {lineno}: self-loop at {u!r}")
            if (u, v) in seen:
                raise DuplicateEdge(f"line {lineno}: duplicate edge {u} -> {v}")
            seen.add((u, v))
            names.setdefault(u)
            names.setdefault(v)
            succ.setdefault(u, []).append(v)
        else:
            raise EOGSyntaxError(f"unknown directive {verb!r}", lineno)
    if point is None:
        raise MissingPoint("no 'point' line")
    return EdgeOrderedGraph(point, succ, names)


def emit_eog(g: EdgeOrderedGraph) -> str:
    out = [HEADER, f"point {g.point}"]
    for v in g.vertices:
        if v != g.point and not g.successors(v) and not g.predecessors(v):
            out.append(f"vertex {v}")
    out.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: EdgeOrderedGraph, name: str = "eog") -> str:
    """Graphviz digraph; edge labels are 1-based neighbourhood ranks, the point is double-circled."""
    out = [f"digraph {name} {{"]
    for v in g.vertices:
        shape = "doublecircle" if v == g.point else "circle"
        out.append(f"  {_dot_id(v)} [shape={shape}];")
    for u, v in g.edges:
        out.append(f'  {_dot_id(u)} -> {_dot_id(v)} [label="{g.rank(u, v)}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def parse_map(text: str) -> dict[VertexId, VertexId]:
    """Read ``<source> <target>`` lines; each source vertex may appear once."""
    mapping: dict[VertexId, VertexId] = {}
    for lineno, words in _lines(text):
        if len(words) != 2:
            raise EOGSyntaxError("expected '<source-vertex> <target-vertex>'", lineno)
        src, dst = words
        if src in mapping:
            raise EOGSyntaxError(f"vertex {src!r} mapped twice", lineno)
        mapping[src] = dst
    return mapping


def emit_map(mapping: Mapping[VertexId, VertexId]) -> str:
    return "".join(f"{u} {v}\n" for u, v in mapping.items())
