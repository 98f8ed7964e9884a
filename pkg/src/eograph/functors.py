"""Least-path trees, ordered transitive closures and the traversal pipeline built from them."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

from .categories import CategoryKind, object_violation
from .errors import CyclicClosure, EmptyOrder, NotALexGraph, NotAnArborescence, NotConnected, NotTArb
from .graph import EdgeOrderedGraph, VertexId, is_connected
from .paths import least_paths, lex_key, longest_path, min_path, shortlex_key
from .traversals import LinearOrder


def _require_connected(g: EdgeOrderedGraph) -> None:
    if not is_connected(g):
        raise NotConnected(f"not every vertex is reachable from {g.point!r}")


def _restrict(g: EdgeOrderedGraph, keep: set[tuple[VertexId, VertexId]]) -> EdgeOrderedGraph:
    # subgraph on the same vertices; neighbourhood order inherited from g
    succ = {u: [v for v in g.successors(u) if (u, v) in keep] for u in g.vertices}
    return EdgeOrderedGraph(g.point, succ, g.vertices)


def _path_edges(paths) -> set[tuple[VertexId, VertexId]]:
    return {(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1)}


def theta(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Keep exactly the edges lying on least paths from the point."""
    _require_connected(g)
    return _restrict(g, _path_edges(least_paths(g, g.point).values()))


def s_tree(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Keep exactly the edges lying on least shortest paths from the point."""
    _require_connected(g)
    return _restrict(g, _path_edges(least_paths(g, g.point, shortlex=True).values()))


def f_closure(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Transitive closure of a lex-graph, each neighbourhood ordered by least paths in ``g``.

    A cyclic input has no closure without self-loops and is rejected.
    """
    bad = object_violation(g, CategoryKind.LEX_GRAPH)
    if bad:
        raise NotALexGraph(bad)
    if not g.is_acyclic:
        raise CyclicClosure("transitive closure of a cyclic graph contains self-loops")
    key = lex_key(g)
    succ = {}
    for u in g.vertices:
        targets = [v for v in g.reachable(u) if v != u]
        succ[u] = sorted(targets, key=lambda v: key(min_path(g, u, v)))
    return EdgeOrderedGraph(g.point, succ, g.vertices)


def _tree_paths(t: EdgeOrderedGraph) -> dict[VertexId, tuple[VertexId, ...]]:
    paths = {t.point: (t.point,)}
    todo = [t.point]
    while todo:
        u = todo.pop()
        for v in t.successors(u):
            paths[v] = paths[u] + (v,)
            todo.append(v)
    return paths


def gamma_closure(t: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Transitive closure of an arborescence, neighbourhoods ordered shortlex by tree paths from the point."""
    bad = object_violation(t, CategoryKind.FIN_ARB)
    if bad:
        raise NotAnArborescence(bad)
    paths = _tree_paths(t)
    key = shortlex_key(t)
    succ = {}
    for u in t.vertices:
        below = [v for v in t.reachable(u) if v != u]
        succ[u] = sorted(below, key=lambda v: key(paths[v]))
    return EdgeOrderedGraph(t.point, succ, t.vertices)


def l_tree(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    """Keep the edges lying on the longest path from the point to their target."""
    bad = object_violation(g, CategoryKind.T_ARB)
    if bad:
        raise NotTArb(bad)
    keep = _path_edges(longest_path(g, g.point, v) for v in g.vertices)
    return _restrict(g, keep)


def e_order(g: EdgeOrderedGraph) -> LinearOrder:
    """The point followed by its out-neighbours in neighbourhood order."""
    return LinearOrder((g.point,) + g.successors(g.point))


def loset_to_star(order: Sequence[VertexId]) -> EdgeOrderedGraph:
    """Star from the least element to every other element, ordered as the input."""
    if not order:
        raise EmptyOrder("cannot build a star from an empty order")
    order = LinearOrder(order)
    return EdgeOrderedGraph(order[0], {order[0]: order[1:]}, order)


STAGE_LABELS = ("input", "least-path-tree", "transitive-closure", "neighborhood-order")


@dataclass(frozen=True)
class StagePipeline:
    """Snapshots of a traversal construction, first the input, last the ordered star."""

    mode: str
    stages: tuple[tuple[str, EdgeOrderedGraph], ...]

    @property
    def order(self) -> LinearOrder:
        return e_order(self.stages[-1][1])

    def __getitem__(self, label: str) -> EdgeOrderedGraph:
        for name, graph in self.stages:
            if name == label:
                return graph
        raise KeyError(label)


def run_pipeline(g: EdgeOrderedGraph, mode: Literal["dfs", "bfs"]) -> StagePipeline:
    """Tree, closure and point-neighbourhood stages whose final order is the lexicographic traversal."""
    _require_connected(g)
    if mode == "dfs":
        tree = theta(g)
        closure = f_closure(tree)
    elif mode == "bfs":
        tree = s_tree(g)
        closure = gamma_closure(tree)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    star = loset_to_star(e_order(closure))
    return StagePipeline(mode, tuple(zip(STAGE_LABELS, (g, tree, closure, star))))
