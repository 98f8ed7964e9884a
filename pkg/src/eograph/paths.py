"""Lexicographic and shortlex orders on co-initial proper paths, and least paths."""

from __future__ import annotations

import enum
from collections.abc import Iterator, Sequence
from functools import cmp_to_key
from typing import Literal

from ._backend import kernels
from .errors import EnumerationBoundExceeded, ImproperPath, InvalidPath, NotCoInitial, Unreachable
from .graph import EdgeOrderedGraph, VertexId
from .traversals import canonical_paths_from

Path = tuple[VertexId, ...]

ORACLE_MAX_VERTICES = 10


class PathComparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def is_path(g: EdgeOrderedGraph, p: Sequence[VertexId]) -> bool:
    return bool(p) and all(v in g for v in p) and all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


def is_proper(p: Sequence[VertexId]) -> bool:
    return len(set(p)) == len(p)


def _check(g: EdgeOrderedGraph, p: Sequence[VertexId]) -> None:
    if not is_path(g, p):
        raise InvalidPath(f"{tuple(p)!r} is not a path in the graph")
    if not is_proper(p):
        raise ImproperPath(f"{tuple(p)!r} repeats a vertex")


def longest_common_prefix(p: Sequence[VertexId], q: Sequence[VertexId]) -> Path:
    if not p or not q or p[0] != q[0]:
        raise NotCoInitial(f"{tuple(p)!r} and {tuple(q)!r} do not share a source")
    k = 1
    while k < len(p) and k < len(q) and p[k] == q[k]:
        k += 1
    return tuple(p[:k])


def _lex(g: EdgeOrderedGraph, p: Sequence[VertexId], q: Sequence[VertexId]) -> PathComparison:
    if p[0] != q[0]:
        return PathComparison.INCOMPARABLE
    k = len(longest_common_prefix(p, q))
    if k == len(p) == len(q):
        return PathComparison.EQUAL
    if k == len(p):
        return PathComparison.LESS
    if k == len(q):
        return PathComparison.GREATER
    u = p[k - 1]
    return PathComparison.LESS if g.precedes(u, p[k], q[k]) else PathComparison.GREATER


def compare_lex(g: EdgeOrderedGraph, p: Sequence[VertexId], q: Sequence[VertexId]) -> PathComparison:
    """Prefixes are less; otherwise the first edges after the longest common prefix decide."""
    _check(g, p)
    _check(g, q)
    return _lex(g, p, q)


def compare_shortlex(g: EdgeOrderedGraph, p: Sequence[VertexId], q: Sequence[VertexId]) -> PathComparison:
    """Shorter paths first, equal lengths by :func:`compare_lex`."""
    _check(g, p)
    _check(g, q)
    if p[0] != q[0]:
        return PathComparison.INCOMPARABLE
    if len(p) != len(q):
        return PathComparison.LESS if len(p) < len(q) else PathComparison.GREATER
    return _lex(g, p, q)


_SIGN = {PathComparison.LESS: -1, PathComparison.EQUAL: 0, PathComparison.GREATER: 1}


def lex_key(g: EdgeOrderedGraph):
    """Sort key for co-initial proper paths under the lexicographic order."""
    return cmp_to_key(lambda p, q: _SIGN[compare_lex(g, p, q)])


def shortlex_key(g: EdgeOrderedGraph):
    return cmp_to_key(lambda p, q: _SIGN[compare_shortlex(g, p, q)])


def least_paths(g: EdgeOrderedGraph, u: VertexId, *, shortlex: bool = False) -> dict[VertexId, Path]:
    """Least (or least shortest) paths from ``u`` to every vertex it reaches.

    These are the canonical df-/bf-paths of the lexicographic search rooted at
    ``u``. Cached on the graph, which is immutable.
    """
    key = ("least", u, shortlex)
    hit = g._cache.get(key)
    if hit is None:
        hit = g._cache[key] = canonical_paths_from(g, u, "bf" if shortlex else "df")
    return hit  # type: ignore[return-value]


def _least(g: EdgeOrderedGraph, u: VertexId, v: VertexId, shortlex: bool) -> Path:
    for w in (u, v):
        if w not in g:
            raise InvalidPath(f"{w!r} is not a vertex")
    try:
        return least_paths(g, u, shortlex=shortlex)[v]
    except KeyError:
        raise Unreachable(f"{v!r} is not reachable from {u!r}") from None


def min_path(g: EdgeOrderedGraph, u: VertexId, v: VertexId) -> Path:
    """The lexicographically least proper path ``u -> ... -> v``."""
    return _least(g, u, v, False)


def min_shortest_path(g: EdgeOrderedGraph, u: VertexId, v: VertexId) -> Path:
    """The lexicographically least among the shortest paths ``u -> ... -> v``."""
    return _least(g, u, v, True)


def enumerate_proper_paths(g: EdgeOrderedGraph, u: VertexId, v: VertexId) -> Iterator[Path]:
    """Every proper path from ``u`` to ``v``, in no particular order."""
    path = [u]

    def walk() -> Iterator[Path]:
        x = path[-1]
        if x == v:
            yield tuple(path)
            return
        for y in g.successors(x):
            if y not in path:
                path.append(y)
                yield from walk()
                path.pop()

    yield from walk()


def oracle_min_path(
    g: EdgeOrderedGraph, u: VertexId, v: VertexId, mode: Literal["lex", "shortlex"] = "lex"
) -> Path:
    """Least path by exhaustive enumeration of proper paths and pairwise comparison.

    Independent of the search-based :func:`min_path`; refuses graphs with more
    than ``ORACLE_MAX_VERTICES`` vertices.
    """
    if len(g) > ORACLE_MAX_VERTICES:
        raise EnumerationBoundExceeded(f"oracle limited to {ORACLE_MAX_VERTICES} vertices, got {len(g)}")
    if mode not in ("lex", "shortlex"):
        raise ValueError(f"unknown mode {mode!r}")
    for w in (u, v):
        if w not in g:
            raise InvalidPath(f"{w!r} is not a vertex")
    offsets, targets = g.csr
    found = kernels.least_proper_path(offsets, targets, g.index[u], g.index[v], mode == "shortlex")
    if found is None:
        raise Unreachable(f"{v!r} is not reachable from {u!r}")
    return tuple(g.vertices[i] for i in found)


def longest_path(g: EdgeOrderedGraph, u: VertexId, v: VertexId) -> Path:
    """The lexicographically least among the longest proper paths ``u -> ... -> v``.

    Dynamic programming on acyclic graphs; exhaustive enumeration otherwise.
    """
    if v not in g.reachable(u):
        raise Unreachable(f"{v!r} is not reachable from {u!r}")
    if not g.is_acyclic:
        return min(enumerate_proper_paths(g, u, v), key=lambda p: (-len(p), lex_key(g)(p)))
    key = ("longest-to", v)
    dist = g._cache.get(key)
    if dist is None:
        # dist[x]: edge count of the longest path x -> v, for every x that reaches v
        dist = {}
        for x in _sinks_first(g, v):
            dist[x] = 0 if x == v else 1 + max(dist[y] for y in g.successors(x) if y in dist)
        g._cache[key] = dist
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(next(y for y in g.successors(x) if dist.get(y) == dist[x] - 1))
    return tuple(path)


def _sinks_first(g: EdgeOrderedGraph, v: VertexId) -> list[VertexId]:
    """Vertices that reach ``v`` in an acyclic graph, each after all of its successors."""
    ancestors = {v}
    todo = [v]
    while todo:
        for w in g.predecessors(todo.pop()):
            if w not in ancestors:
                ancestors.add(w)
                todo.append(w)
    out: list[VertexId] = []
    done: set[VertexId] = set()
    for start in ancestors:
        if start in done:
            continue
        done.add(start)
        stack = [(start, iter(g.successors(start)))]
        while stack:
            x, it = stack[-1]
            for y in it:
                if y in ancestors and y not in done:
                    done.add(y)
                    stack.append((y, iter(g.successors(y))))
                    break
            else:
                stack.pop()
                out.append(x)
    return out
