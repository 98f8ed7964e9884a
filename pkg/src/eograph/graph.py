"""Finite pointed edge-ordered directed graphs."""

from __future__ import annotations

import array
from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import cached_property

from .errors import DuplicateEdge, EmptyGraph, MissingPoint, SelfLoop, UnknownVertex

VertexId = str
Edge = tuple[VertexId, VertexId]


def _check_name(name: object) -> VertexId:
    if not isinstance(name, str) or not name or any(c.isspace() for c in name) or "#" in name:
        raise UnknownVertex(f"invalid vertex name {name!r}")
    return name


class EdgeOrderedGraph:
    """A finite directed graph with a distinguished vertex and ordered out-neighbourhoods.

    ``successors[u]`` lists the targets of ``u``'s outgoing edges, least first.
    Instances are immutable; equality ignores the order in which vertices were
    declared but not the neighbourhood orders.
    """

    def __init__(
        self,
        point: VertexId,
        successors: Mapping[VertexId, Sequence[VertexId]],
        vertices: Iterable[VertexId] | None = None,
    ) -> None:
        if vertices is None:
            names: dict[VertexId, None] = {point: None}
            for u, targets in successors.items():
                names.setdefault(u)
                for v in targets:
                    names.setdefault(v)
        else:
            names = dict.fromkeys(vertices)
            if not names:
                raise EmptyGraph("graph has no vertices")
        for name in names:
            _check_name(name)
        if point not in names:
            raise MissingPoint(f"point {point!r} is not a vertex")
        succ: dict[VertexId, tuple[VertexId, ...]] = {v: () for v in names}
        for u, targets in successors.items():
            if u not in names:
                raise UnknownVertex(f"edge source {u!r} is not a declared vertex")
            targets = tuple(targets)
            for v in targets:
                if v not in names:
                    raise UnknownVertex(f"edge target {v!r} is not a declared vertex")
                if v == u:
                    raise SelfLoop(f"self-loop at {u!r}")
            if len(set(targets)) != len(targets):
                raise DuplicateEdge(f"duplicate edge out of {u!r}")
            succ[u] = targets
        self._point = point
        self._vertices = tuple(names)
        self._succ = succ
        self._cache: dict[object, object] = {}

    # -- basic structure -------------------------------------------------
    @property
    def point(self) -> VertexId:
        return self._point

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._vertices

    def successors(self, u: VertexId) -> tuple[VertexId, ...]:
        return self._succ[u]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in self._vertices for v in self._succ[u])

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return (u, v) in self.edge_set

    @cached_property
    def _ranks(self) -> dict[Edge, int]:
        return {(u, v): i for u in self._vertices for i, v in enumerate(self._succ[u], start=1)}

    def rank(self, u: VertexId, v: VertexId) -> int:
        """1-based position of ``u -> v`` in the order on ``u``'s neighbourhood."""
        return self._ranks[(u, v)]

    def precedes(self, u: VertexId, v1: VertexId, v2: VertexId) -> bool:
        """Whether ``u -> v1`` comes strictly before ``u -> v2``."""
        return self._ranks[(u, v1)] < self._ranks[(u, v2)]

    @cached_property
    def _preds(self) -> dict[VertexId, tuple[VertexId, ...]]:
        preds: dict[VertexId, list[VertexId]] = {v: [] for v in self._vertices}
        for u, v in self.edges:
            preds[v].append(u)
        return {v: tuple(p) for v, p in preds.items()}

    def predecessors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self._preds[v]

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self._vertices)

    # -- reachability ----------------------------------------------------
    def reachable(self, u: VertexId) -> frozenset[VertexId]:
        key = ("reach", u)
        hit = self._cache.get(key)
        if hit is None:
            seen = {u}
            todo = [u]
            while todo:
                x = todo.pop()
                for y in self._succ[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            hit = self._cache[key] = frozenset(seen)
        return hit  # type: ignore[return-value]

    @cached_property
    def is_acyclic(self) -> bool:
        return all(u not in self.reachable(v) for u, v in self.edges)

    # -- integer view for the kernels -------------------------------------
    @cached_property
    def index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self._vertices)}

    @cached_property
    def csr(self) -> tuple[array.array, array.array]:
        offsets = array.array("i", [0])
        targets = array.array("i")
        idx = self.index
        for u in self._vertices:
            targets.extend(idx[v] for v in self._succ[u])
            offsets.append(len(targets))
        return offsets, targets

    @cached_property
    def adjacency(self) -> bytes:
        n = len(self._vertices)
        idx = self.index
        flat = bytearray(n * n)
        for u, v in self.edges:
            flat[idx[u] * n + idx[v]] = 1
        return bytes(flat)

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeOrderedGraph):
            return NotImplemented
        return self._point == other._point and self._succ == other._succ

    def __hash__(self) -> int:
        return hash((self._point, frozenset(self._succ.items())))

    def __repr__(self) -> str:
        edges = ", ".join(f"{u}->{v}" for u, v in self.edges)
        return f"EdgeOrderedGraph(point={self._point!r}, vertices={list(self._vertices)}, edges=[{edges}])"

    def relabel_point(self, point: VertexId) -> EdgeOrderedGraph:
        """Same vertices and edges with a different distinguished vertex."""
        return EdgeOrderedGraph(point, self._succ, self._vertices)


def validate(
    point: VertexId | None,
    edges: Iterable[Edge],
    vertices: Iterable[VertexId] | None = None,
) -> EdgeOrderedGraph:
    """Build a graph from a raw description.

    Edge listing order defines each neighbourhood order (earlier is lesser).
    When ``vertices`` is given, every edge endpoint must be declared in it;
    otherwise the vertex set is the point plus all edge endpoints.
    """
    declared = None if vertices is None else list(vertices)
    edges = list(edges)
    if point is None:
        if not declared and not edges:
            raise EmptyGraph("graph has no vertices")
        raise MissingPoint("no distinguished vertex given")
    if declared is not None and not declared:
        raise EmptyGraph("graph has no vertices")
    succ: dict[VertexId, list[VertexId]] = {}
    seen: set[Edge] = set()
    for u, v in edges:
        _check_name(u)
        _check_name(v)
        if declared is not None:
            for end in (u, v):
                if end not in declared:
                    raise UnknownVertex(f"edge endpoint {end!r} is not a declared vertex")
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}")
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge {u} -> {v}")
        seen.add((u, v))
        succ.setdefault(u, []).append(v)
    if declared is None:
        names: dict[VertexId, None] = {point: None}
        for u, v in edges:
            names.setdefault(u)
            names.setdefault(v)
        declared = list(names)
    return EdgeOrderedGraph(point, succ, declared)


def is_connected(g: EdgeOrderedGraph) -> bool:
    """Every vertex is reachable from the distinguished vertex."""
    return len(g.reachable(g.point)) == len(g)
