"""Object classes of the categories of edge-ordered graphs."""

from __future__ import annotations

import enum

from .graph import EdgeOrderedGraph, is_connected
from .paths import _lex, PathComparison, longest_path, min_path


class CategoryKind(enum.Enum):
    FIN_GRAPH_EO = "fingrapheo"
    FIN_GRAPH_LEX = "fingraphlex"
    FIN_GRAPH_SHORTLEX = "fingraphshortlex"
    LEX_GRAPH = "lexgraph"
    FIN_ARB = "finarb"
    T_LEX_GRAPH = "tlexgraph"
    T_ARB = "tarb"
    FIN_LOSET = "finloset"

    @classmethod
    def parse(cls, name: str) -> CategoryKind:
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown category {name!r} (choose from {choices})") from None


def _connectivity(g: EdgeOrderedGraph) -> str | None:
    if is_connected(g):
        return None
    missing = [v for v in g.vertices if v not in g.reachable(g.point)]
    return f"vertex {missing[0]} is not reachable from the point {g.point}"


def _lex_violation(g: EdgeOrderedGraph) -> str | None:
    for u in g.vertices:
        succ = g.successors(u)
        for v1, v2 in zip(succ, succ[1:]):
            if _lex(g, min_path(g, u, v1), min_path(g, u, v2)) is not PathComparison.LESS:
                return (
                    f"at {u}: edge {u}->{v1} precedes {u}->{v2} but the least path to {v2} "
                    f"is smaller than the least path to {v1}"
                )
    return None


def _arborescence_violation(g: EdgeOrderedGraph) -> str | None:
    for v in g.vertices:
        d = len(g.predecessors(v))
        if v == g.point and d:
            return f"the point {v} has in-degree {d}"
        if v != g.point and d != 1:
            return f"vertex {v} has in-degree {d}"
    return _connectivity(g)


def _transitivity_violation(g: EdgeOrderedGraph) -> str | None:
    for u, v in g.edges:
        for w in g.successors(v):
            if not g.has_edge(u, w):
                return f"not transitive: {u}->{v} and {v}->{w} but no edge {u}->{w}"
    return None


def _tarb_violation(g: EdgeOrderedGraph) -> str | None:
    from .functors import gamma_closure

    if not g.is_acyclic:
        return "graph has a cycle"
    tree: dict[str, list[str]] = {v: [] for v in g.vertices}
    for v in g.vertices:
        if v != g.point:
            p = longest_path(g, g.point, v)
            tree[p[-2]].append(v)
    # children in inherited order so the witness carries g's neighbourhood order
    t = EdgeOrderedGraph(g.point, {u: [w for w in g.successors(u) if w in tree[u]] for u in tree}, g.vertices)
    bad = _arborescence_violation(t)
    if bad:
        return f"longest-path edges do not form an arborescence: {bad}"
    closed = gamma_closure(t)
    if closed.edge_set != g.edge_set:
        extra = sorted(closed.edge_set ^ g.edge_set)[0]
        return f"edge set is not the transitive closure of its longest-path tree (differs at {extra[0]}->{extra[1]})"
    for u in g.vertices:
        if closed.successors(u) != g.successors(u):
            return f"at {u}: neighbourhood order is not the shortlex order of tree paths"
    return None


def _star_violation(g: EdgeOrderedGraph) -> str | None:
    others = [v for v in g.vertices if v != g.point]
    if set(g.successors(g.point)) != set(others) or len(g.edges) != len(others):
        return "not a star from the point onto every other vertex"
    return None


def object_violation(g: EdgeOrderedGraph, kind: CategoryKind) -> str | None:
    """First violated defining condition of ``kind``, or ``None`` if ``g`` is an object of it."""
    if kind is CategoryKind.FIN_LOSET:
        return _star_violation(g)
    if kind is CategoryKind.FIN_ARB:
        return _arborescence_violation(g)
    bad = _connectivity(g)
    if bad or kind in (CategoryKind.FIN_GRAPH_EO, CategoryKind.FIN_GRAPH_LEX, CategoryKind.FIN_GRAPH_SHORTLEX):
        return bad
    if kind is CategoryKind.T_ARB:
        return _tarb_violation(g)
    bad = _lex_violation(g)
    if bad or kind is CategoryKind.LEX_GRAPH:
        return bad
    return _transitivity_violation(g)


def is_object_of(g: EdgeOrderedGraph, kind: CategoryKind) -> bool:
    return object_violation(g, kind) is None
