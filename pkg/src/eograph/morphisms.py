"""Vertex maps between edge-ordered graphs: arrow predicates, hom-sets, functors, adjunctions."""

from __future__ import annotations

import enum
import itertools
import random
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Union

from ._backend import kernels
from .categories import CategoryKind, object_violation
from .errors import EnumerationBoundExceeded, NotAMorphism, WrongCategory
from .functors import e_order, f_closure, gamma_closure, l_tree, s_tree, theta
from .graph import EdgeOrderedGraph, VertexId
from .paths import least_paths, longest_path
from .traversals import LinearOrder

HOM_ENUMERATION_BOUND = 10**6

Obj = Union[EdgeOrderedGraph, LinearOrder]


class VertexMap:
    """A total function from the elements of ``source`` to the elements of ``target``."""

    __slots__ = ("source", "target", "_mapping", "_hash")

    def __init__(self, source: Obj, target: Obj, mapping: Mapping[VertexId, VertexId]) -> None:
        mapping = dict(mapping)
        src = _elements(source)
        tgt = set(_elements(target))
        missing = [v for v in src if v not in mapping]
        if missing:
            raise NotAMorphism(f"map is not total: no image for {missing[0]!r}")
        extra = set(mapping) - set(src)
        if extra:
            raise NotAMorphism(f"map has entries for non-vertices: {sorted(extra)}")
        outside = [v for v in src if mapping[v] not in tgt]
        if outside:
            raise NotAMorphism(f"image {mapping[outside[0]]!r} of {outside[0]!r} is not in the target")
        self.source = source
        self.target = target
        self._mapping = {v: mapping[v] for v in src}
        self._hash: int | None = None

    @property
    def mapping(self) -> Mapping[VertexId, VertexId]:
        return MappingProxyType(self._mapping)

    def __call__(self, v: VertexId) -> VertexId:
        return self._mapping[v]

    def image(self, path: Iterable[VertexId]) -> tuple[VertexId, ...]:
        return tuple(self._mapping[v] for v in path)

    def compose(self, first: VertexMap) -> VertexMap:
        """``self`` after ``first``."""
        return VertexMap(first.source, self.target, {v: self._mapping[w] for v, w in first._mapping.items()})

    def retyped(self, source: Obj, target: Obj) -> VertexMap:
        """The same assignment viewed between other objects on the same elements."""
        return VertexMap(source, target, self._mapping)

    @classmethod
    def identity(cls, obj: Obj) -> VertexMap:
        return cls(obj, obj, {v: v for v in _elements(obj)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexMap):
            return NotImplemented
        return self._mapping == other._mapping and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._mapping.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{u}->{v}" for u, v in self._mapping.items())
        return f"VertexMap({{{body}}})"


def _elements(obj: Obj) -> tuple[VertexId, ...]:
    return tuple(obj.vertices) if isinstance(obj, EdgeOrderedGraph) else tuple(obj)


class MorphismKind(enum.Enum):
    GRAPH = "graph"
    POINTED = "pointed"
    EDGE_ORDERED = "eo"
    LEX = "lex"
    SHORT_LEX = "shortlex"
    TARB = "tarb"
    MONOTONE = "monotone"

    @classmethod
    def parse(cls, name: str) -> MorphismKind:
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown morphism kind {name!r} (choose from {choices})") from None


# Arrows of each category. Least-path preservation is only required out of the
# point in the two categories of all edge-ordered graphs, and for every pair of
# vertices among lex-graphs.
ARROWS: dict[CategoryKind, tuple[MorphismKind, bool]] = {
    CategoryKind.FIN_GRAPH_EO: (MorphismKind.EDGE_ORDERED, False),
    CategoryKind.FIN_GRAPH_LEX: (MorphismKind.LEX, False),
    CategoryKind.FIN_GRAPH_SHORTLEX: (MorphismKind.SHORT_LEX, False),
    CategoryKind.LEX_GRAPH: (MorphismKind.LEX, True),
    CategoryKind.FIN_ARB: (MorphismKind.EDGE_ORDERED, False),
    CategoryKind.T_LEX_GRAPH: (MorphismKind.LEX, True),
    CategoryKind.T_ARB: (MorphismKind.TARB, False),
    CategoryKind.FIN_LOSET: (MorphismKind.MONOTONE, False),
}


def _monotone_violation(m: VertexMap) -> str | None:
    src, tgt = m.source, m.target
    if not isinstance(src, LinearOrder) or not isinstance(tgt, LinearOrder):
        return "monotone maps go between linear orders"
    pos = tgt.positions
    for x, y in zip(src, src[1:]):
        if pos[m(x)] > pos[m(y)]:
            return f"{x} < {y} but {m(x)} > {m(y)}"
    return None


def morphism_violation(m: VertexMap, kind: MorphismKind, *, all_pairs: bool = False) -> str | None:
    """First violated condition of ``kind`` for ``m``, or ``None``.

    ``all_pairs`` makes LEX/SHORT_LEX demand preservation of least paths
    between every pair of vertices rather than only out of the point.
    """
    if kind is MorphismKind.MONOTONE:
        return _monotone_violation(m)
    g, h = m.source, m.target
    if not isinstance(g, EdgeOrderedGraph) or not isinstance(h, EdgeOrderedGraph):
        return "graph morphisms go between graphs"
    for u, v in g.edges:
        if not h.has_edge(m(u), m(v)):
            return f"edge {u}->{v} is sent to {m(u)}->{m(v)}, which is not an edge"
    if kind is MorphismKind.GRAPH:
        return None
    onto_point = [v for v in g.vertices if m(v) == h.point]
    if onto_point != [g.point]:
        return f"vertices sent to the target point {h.point}: {onto_point}, expected only {g.point}"
    if kind is MorphismKind.POINTED:
        return None
    for u in g.vertices:
        succ = g.successors(u)
        for v1, v2 in zip(succ, succ[1:]):
            if not h.precedes(m(u), m(v1), m(v2)):
                return (
                    f"neighbourhood order not preserved at {u}: {u}->{v1} precedes {u}->{v2} "
                    f"but {m(u)}->{m(v1)} does not precede {m(u)}->{m(v2)}"
                )
    if kind is MorphismKind.EDGE_ORDERED:
        return None
    if kind in (MorphismKind.LEX, MorphismKind.SHORT_LEX):
        short = kind is MorphismKind.SHORT_LEX
        label = "least shortest" if short else "least"
        for u in g.vertices if all_pairs else (g.point,):
            target_paths = least_paths(h, m(u), shortlex=short)
            for v, p in least_paths(g, u, shortlex=short).items():
                if m.image(p) != target_paths[m(v)]:
                    return (
                        f"{label} path {' '.join(p)} is sent to {' '.join(m.image(p))}, "
                        f"not the {label} path {' '.join(target_paths[m(v)])}"
                    )
        return None
    if kind is MorphismKind.TARB:
        for u in g.vertices:
            for v in g.reachable(u):
                p = longest_path(g, u, v)
                q = longest_path(h, m(u), m(v))
                if m.image(p) != q:
                    return f"longest path {' '.join(p)} is sent to {' '.join(m.image(p))}, not {' '.join(q)}"
        return None
    raise ValueError(f"unhandled morphism kind {kind}")


def is_morphism(m: VertexMap, kind: MorphismKind, *, all_pairs: bool = False) -> bool:
    return morphism_violation(m, kind, all_pairs=all_pairs) is None


def is_arrow(m: VertexMap, category: CategoryKind) -> bool:
    """Whether ``m`` is an arrow of ``category`` (object membership not checked)."""
    kind, all_pairs = ARROWS[category]
    return is_morphism(m, kind, all_pairs=all_pairs)


def enumerate_homs(g: Obj, h: Obj, kind: MorphismKind, *, all_pairs: bool = False) -> list[VertexMap]:
    """Every map ``g -> h`` of the given kind, ordered by image tuple.

    Refuses when the raw map count ``|h| ** |g|`` exceeds ``HOM_ENUMERATION_BOUND``.
    """
    src, dst = _elements(g), _elements(h)
    raw = len(dst) ** len(src)
    if raw > HOM_ENUMERATION_BOUND:
        raise EnumerationBoundExceeded(f"{len(dst)}^{len(src)} = {raw} candidate maps exceeds {HOM_ENUMERATION_BOUND}")
    if kind is MorphismKind.MONOTONE or not isinstance(g, EdgeOrderedGraph) or not isinstance(h, EdgeOrderedGraph):
        candidates = (dict(zip(src, img)) for img in itertools.product(dst, repeat=len(src)))
    else:
        found = kernels.edge_maps(
            len(g), g.adjacency, len(h), h.adjacency, g.index[g.point], h.index[h.point], kind is not MorphismKind.GRAPH
        )
        candidates = ({src[i]: dst[j] for i, j in enumerate(img)} for img in found)
    out = []
    for mapping in candidates:
        m = VertexMap(g, h, mapping)
        if is_morphism(m, kind, all_pairs=all_pairs):
            out.append(m)
    return out


def hom_set(g: Obj, h: Obj, category: CategoryKind) -> list[VertexMap]:
    kind, all_pairs = ARROWS[category]
    return enumerate_homs(g, h, kind, all_pairs=all_pairs)


class Functor(enum.Enum):
    THETA = "theta"
    S = "s"
    F = "f"
    GAMMA = "gamma"
    L = "l"
    E = "e"


@dataclass(frozen=True)
class _FunctorInfo:
    source: CategoryKind
    target: CategoryKind
    on_objects: Callable[[EdgeOrderedGraph], Obj]


FUNCTORS: dict[Functor, _FunctorInfo] = {
    Functor.THETA: _FunctorInfo(CategoryKind.FIN_GRAPH_LEX, CategoryKind.FIN_ARB, theta),
    Functor.S: _FunctorInfo(CategoryKind.FIN_GRAPH_SHORTLEX, CategoryKind.FIN_ARB, s_tree),
    Functor.F: _FunctorInfo(CategoryKind.LEX_GRAPH, CategoryKind.T_LEX_GRAPH, f_closure),
    Functor.GAMMA: _FunctorInfo(CategoryKind.FIN_ARB, CategoryKind.T_ARB, gamma_closure),
    Functor.L: _FunctorInfo(CategoryKind.T_ARB, CategoryKind.FIN_ARB, l_tree),
    Functor.E: _FunctorInfo(CategoryKind.FIN_GRAPH_EO, CategoryKind.FIN_LOSET, e_order),
}


def apply_functor(m: VertexMap, f: Functor) -> VertexMap:
    """Image of an arrow under ``f``: the same assignment between the image objects.

    For ``E`` the assignment is restricted to the point and its out-neighbours.
    """
    info = FUNCTORS[f]
    for end in (m.source, m.target):
        if not isinstance(end, EdgeOrderedGraph):
            raise NotAMorphism(f"{f.name} acts on graph morphisms")
        bad = object_violation(end, info.source)
        if bad:
            raise NotAMorphism(f"{end!r} is not an object of {info.source.value}: {bad}")
    kind, all_pairs = ARROWS[info.source]
    bad = morphism_violation(m, kind, all_pairs=all_pairs)
    if bad:
        raise NotAMorphism(f"not an arrow of {info.source.value}: {bad}")
    src, dst = info.on_objects(m.source), info.on_objects(m.target)
    return VertexMap(src, dst, {v: m(v) for v in _elements(src)})


# -- adjunctions -------------------------------------------------------------


def _identity(g: EdgeOrderedGraph) -> EdgeOrderedGraph:
    return g


@dataclass(frozen=True)
class _AdjunctionInfo:
    left_category: CategoryKind  # domain of the left adjoint
    right_category: CategoryKind
    left_adjoint: Callable[[EdgeOrderedGraph], EdgeOrderedGraph]
    right_adjoint: Callable[[EdgeOrderedGraph], EdgeOrderedGraph]
    needs_acyclic_left: bool = False


ADJUNCTIONS: dict[str, _AdjunctionInfo] = {
    "itheta": _AdjunctionInfo(CategoryKind.FIN_ARB, CategoryKind.FIN_GRAPH_LEX, _identity, theta),
    "is": _AdjunctionInfo(CategoryKind.FIN_ARB, CategoryKind.FIN_GRAPH_SHORTLEX, _identity, s_tree),
    "fu": _AdjunctionInfo(CategoryKind.LEX_GRAPH, CategoryKind.T_LEX_GRAPH, f_closure, _identity, True),
    "gammal": _AdjunctionInfo(CategoryKind.FIN_ARB, CategoryKind.T_ARB, gamma_closure, l_tree),
}


@dataclass(frozen=True)
class AdjunctionReport:
    which: str
    left_hom_count: int  # |Hom(left_adjoint(gLeft), gRight)|
    right_hom_count: int  # |Hom(gLeft, right_adjoint(gRight))|
    bijection: bool
    naturality: bool
    naturality_checks: int
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.bijection and self.naturality and self.left_hom_count == self.right_hom_count

    def format(self) -> str:
        lines = [
            f"adjunction: {self.which}",
            f"hom(left adjoint applied, right): {self.left_hom_count}",
            f"hom(left, right adjoint applied): {self.right_hom_count}",
            f"bijection: {'ok' if self.bijection else 'FAIL'}",
            f"naturality: {'ok' if self.naturality else 'FAIL'} ({self.naturality_checks} squares)",
        ]
        lines.extend(f"failure: {f}" for f in self.failures)
        return "\n".join(lines)


def _require(g: EdgeOrderedGraph, category: CategoryKind, role: str, acyclic: bool = False) -> None:
    bad = object_violation(g, category)
    if bad:
        raise WrongCategory(f"{role} is not an object of {category.value}: {bad}")
    if acyclic and not g.is_acyclic:
        raise WrongCategory(f"{role} has a cycle, so its transitive closure is not defined")


def check_adjunction(
    left: EdgeOrderedGraph,
    right: EdgeOrderedGraph,
    which: str,
    *,
    seed: int,
    left_probes: Sequence[EdgeOrderedGraph] = (),
    right_probes: Sequence[EdgeOrderedGraph] = (),
    exhaustive_limit: int = 100,
    sample_size: int = 50,
) -> AdjunctionReport:
    """Compare the two hom-sets of an adjunction and spot-check naturality.

    Transposition is the identity on vertex assignments. Naturality squares are
    checked for arrows ``alpha: A' -> gLeft`` (``A'`` in ``{gLeft} + left_probes``)
    and ``beta: gRight -> B'`` (``B'`` in ``{gRight} + right_probes``); every
    arrow is used when a hom-set has at most ``exhaustive_limit`` members,
    otherwise a ``seed``-determined sample of ``sample_size``.
    """
    try:
        info = ADJUNCTIONS[which.lower()]
    except KeyError:
        raise ValueError(f"unknown adjunction {which!r} (choose from {', '.join(ADJUNCTIONS)})") from None
    _require(left, info.left_category, "left object", info.needs_acyclic_left)
    _require(right, info.right_category, "right object")
    for p in left_probes:
        _require(p, info.left_category, "left probe", info.needs_acyclic_left)
    for p in right_probes:
        _require(p, info.right_category, "right probe")

    rng = random.Random(seed)

    def sample(items: list[VertexMap]) -> list[VertexMap]:
        return items if len(items) <= exhaustive_limit else rng.sample(items, sample_size)

    fa, gb = info.left_adjoint(left), info.right_adjoint(right)
    up = hom_set(fa, right, info.right_category)
    down = hom_set(left, gb, info.left_category)
    up_maps = {frozenset(m.mapping.items()) for m in up}
    down_maps = {frozenset(m.mapping.items()) for m in down}
    failures: list[str] = []
    for m in up:
        if frozenset(m.mapping.items()) not in down_maps:
            failures.append(f"{m} has no transpose in the right-adjoint hom-set")
    for m in down:
        if frozenset(m.mapping.items()) not in up_maps:
            failures.append(f"{m} has no transpose in the left-adjoint hom-set")
    bijection = not failures

    shared = [m for m in up if frozenset(m.mapping.items()) in down_maps]
    checks = 0
    natural = True

    def fail(msg: str) -> None:
        nonlocal natural
        natural = False
        if len(failures) < 20:
            failures.append(msg)

    for a_prime in (left, *left_probes):
        fa_prime = info.left_adjoint(a_prime)
        for alpha in sample(hom_set(a_prime, left, info.left_category)):
            f_alpha = alpha.retyped(fa_prime, fa)
            if not is_arrow(f_alpha, info.right_category):
                fail(f"left adjoint does not send {alpha} to an arrow")
                continue
            for h in sample(shared):
                checks += 1
                h_down = h.retyped(left, gb)
                upper = h.compose(f_alpha)
                lower = h_down.compose(alpha)
                if not is_arrow(upper, info.right_category) or not is_arrow(lower, info.left_category):
                    fail(f"precomposition of {h} with {alpha} leaves the hom-set")
                elif upper.retyped(a_prime, gb) != lower:
                    fail(f"transposition does not commute with precomposition by {alpha}")
    for b_prime in (right, *right_probes):
        gb_prime = info.right_adjoint(b_prime)
        for beta in sample(hom_set(right, b_prime, info.right_category)):
            g_beta = beta.retyped(gb, gb_prime)
            if not is_arrow(g_beta, info.left_category):
                fail(f"right adjoint does not send {beta} to an arrow")
                continue
            for h in sample(shared):
                checks += 1
                h_down = h.retyped(left, gb)
                upper = beta.compose(h)
                lower = g_beta.compose(h_down)
                if not is_arrow(upper, info.right_category) or not is_arrow(lower, info.left_category):
                    fail(f"postcomposition of {h} with {beta} leaves the hom-set")
                elif upper.retyped(left, gb_prime) != lower:
                    fail(f"transposition does not commute with postcomposition by {beta}")

    return AdjunctionReport(which.lower(), len(up), len(down), bijection, natural, checks, tuple(failures))
