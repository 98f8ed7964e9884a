"""Lexicographic depth-first and breadth-first search and their predecessor structure."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from typing import Literal

from ._backend import kernels
from .errors import NotATraversal, NotConnected
from .graph import EdgeOrderedGraph, VertexId

Mode = Literal["df", "bf"]
PredecessorMap = dict[VertexId, VertexId]


class LinearOrder(tuple):
    """A duplicate-free sequence of vertices, read as a strict linear order (earlier is less)."""

    def __new__(cls, items: Iterable[VertexId] = ()) -> LinearOrder:
        self = super().__new__(cls, items)
        if len(set(self)) != len(self):
            raise ValueError(f"linear order has repeated elements: {tuple(self)!r}")
        return self

    @property
    def positions(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self)}

    def less(self, u: VertexId, v: VertexId) -> bool:
        return self.index(u) < self.index(v)

    def __repr__(self) -> str:
        return f"LinearOrder({tuple(self)!r})"


def search_from(g: EdgeOrderedGraph, root: VertexId, mode: Mode) -> LinearOrder:
    """Visit order of lexicographic search from ``root``; covers only what ``root`` reaches."""
    offsets, targets = g.csr
    order = kernels.lex_search(offsets, targets, g.index[root], mode == "df")
    names = g.vertices
    return LinearOrder(names[i] for i in order)


def _full_search(g: EdgeOrderedGraph, mode: Mode) -> LinearOrder:
    order = search_from(g, g.point, mode)
    if len(order) != len(g):
        missing = sorted(set(g.vertices) - set(order))
        raise NotConnected(f"vertices not reachable from {g.point!r}: {missing}")
    return order


def lex_dfs(g: EdgeOrderedGraph) -> LinearOrder:
    """The lexicographic depth-first traversal of a connected graph."""
    return _full_search(g, "df")


def lex_bfs(g: EdgeOrderedGraph) -> LinearOrder:
    """The lexicographic breadth-first traversal of a connected graph."""
    return _full_search(g, "bf")


def _predecessors(g: EdgeOrderedGraph, order: Sequence[VertexId], mode: Mode) -> PredecessorMap:
    # order[0] is the root; every later vertex needs an earlier in-neighbour
    pos = {v: i for i, v in enumerate(order)}
    pred: PredecessorMap = {order[0]: order[0]}
    for v in order[1:]:
        earlier = [pos[u] for u in g.predecessors(v) if u in pos and pos[u] < pos[v]]
        if not earlier:
            raise NotATraversal(f"{v!r} has no earlier in-neighbour")
        pred[v] = order[max(earlier) if mode == "df" else min(earlier)]
    return pred


def _check_listing(g: EdgeOrderedGraph, order: Sequence[VertexId]) -> None:
    if len(order) != len(g) or set(order) != set(g.vertices) or len(set(order)) != len(order):
        raise NotATraversal("order must list every vertex exactly once")
    if order[0] != g.point:
        raise NotATraversal(f"order must start at the point {g.point!r}")


def predecessor_map(g: EdgeOrderedGraph, order: Sequence[VertexId], mode: Mode) -> PredecessorMap:
    """Depth-first (greatest earlier in-neighbour) or breadth-first (least) predecessors.

    The point maps to itself.
    """
    _check_listing(g, order)
    return _predecessors(g, order, mode)


def _orbit_path(pred: PredecessorMap, v: VertexId) -> tuple[VertexId, ...]:
    path = [v]
    while pred[path[-1]] != path[-1]:
        path.append(pred[path[-1]])
    return tuple(reversed(path))


def canonical_path(
    g: EdgeOrderedGraph, order: Sequence[VertexId], mode: Mode, v: VertexId
) -> tuple[VertexId, ...]:
    """Reversed predecessor orbit of ``v``: a path from the point to ``v``."""
    return _orbit_path(predecessor_map(g, order, mode), v)


def canonical_paths_from(g: EdgeOrderedGraph, root: VertexId, mode: Mode) -> dict[VertexId, tuple[VertexId, ...]]:
    """Canonical paths from ``root`` to everything it reaches, via a search rooted there."""
    order = search_from(g, root, mode)
    pred = _predecessors(g, order, mode)
    paths: dict[VertexId, tuple[VertexId, ...]] = {root: (root,)}
    for v in order[1:]:
        paths[v] = paths[pred[v]] + (v,)
    return paths


def _fo_check(g: EdgeOrderedGraph, order: Sequence[VertexId], depth_first: bool) -> bool:
    n = len(order)
    if n != len(g) or set(order) != set(g.vertices) or order[0] != g.point:
        return False
    pos = {v: i for i, v in enumerate(order)}
    # a vertex without an earlier in-neighbour can never be reached by a search
    for v in order[1:]:
        if not any(pos[u] < pos[v] for u in g.predecessors(v)):
            return False
    for i, u in enumerate(order):
        for w in g.successors(u):
            k = pos[w]
            for j in range(i + 1, k):
                v = order[j]
                lo, hi = (i, j) if depth_first else (0, i + 1)
                if not any(lo <= pos[x] < hi for x in g.predecessors(v)):
                    return False
    return True


def check_fo_dft(g: EdgeOrderedGraph, order: Sequence[VertexId]) -> bool:
    """For all ``u < v < w`` with ``u -> w``, some ``v'`` with ``u <= v' < v`` has ``v' -> v``."""
    return _fo_check(g, order, True)


def check_fo_bft(g: EdgeOrderedGraph, order: Sequence[VertexId]) -> bool:
    """For all ``u < v < w`` with ``u -> w``, some ``v'`` with ``v' <= u < v`` has ``v' -> v``."""
    return _fo_check(g, order, False)


def _search_with_stages(g: EdgeOrderedGraph, mode: Mode) -> tuple[LinearOrder, PredecessorMap]:
    """Plain-Python search tagging every stack/queue entry with the stage that pushed it.

    Returns the visit order and, for each vertex, the vertex whose stage pushed
    the copy that was eventually popped. Debug instrumentation only.
    """
    pending: deque[tuple[VertexId, int]] = deque([(g.point, 0)])
    order: list[VertexId] = []
    pusher: PredecessorMap = {}
    visited: set[VertexId] = set()
    while pending:
        v, stage = pending.pop() if mode == "df" else pending.popleft()
        if v in visited:
            continue
        pusher[v] = order[stage] if order else v
        visited.add(v)
        order.append(v)
        stage = len(order) - 1
        fresh = [w for w in g.successors(v) if w not in visited]
        if mode == "df":
            fresh.reverse()
        pending.extend((w, stage) for w in fresh)
    return LinearOrder(order), pusher
