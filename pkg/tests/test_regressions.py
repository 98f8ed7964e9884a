"""Small graphs that pin down which least-path preservation each category uses."""

import pytest

from eograph import (
    CategoryKind,
    EdgeOrderedGraph,
    Functor,
    MorphismKind,
    VertexMap,
    apply_functor,
    check_adjunction,
    f_closure,
    is_morphism,
    is_object_of,
    theta,
)
from eograph.errors import CyclicClosure, NotAMorphism


def test_tree_inclusion_only_preserves_least_paths_from_the_point():
    # 1 -> 0 -> 2 beats 1 -> 2, but the tree keeps 1 -> 2
    g = EdgeOrderedGraph("0", {"0": ["1", "2"], "1": ["0", "2"]})
    t = theta(g)
    assert t.edge_set == {("0", "1"), ("1", "2")}
    inc = VertexMap(t, g, {v: v for v in g.vertices})
    assert is_morphism(inc, MorphismKind.LEX)
    assert not is_morphism(inc, MorphismKind.LEX, all_pairs=True)
    assert check_adjunction(t, g, "itheta", seed=0).ok


def test_closure_needs_all_pairs_preservation():
    g = EdgeOrderedGraph("0", {"0": ["1", "2"], "1": ["3"], "2": ["1"]})
    h = EdgeOrderedGraph("0", {"0": ["2", "1"], "1": ["3", "2"], "2": ["3"]})
    for x in (g, h):
        assert is_object_of(x, CategoryKind.LEX_GRAPH) and x.is_acyclic
    m = VertexMap(g, h, {"0": "0", "1": "2", "2": "1", "3": "3"})
    assert is_morphism(m, MorphismKind.LEX)
    assert not is_morphism(m, MorphismKind.LEX, all_pairs=True)
    # had m been admitted, its closure image would not even respect neighbourhood order
    closed = VertexMap(f_closure(g), f_closure(h), m.mapping)
    assert not is_morphism(closed, MorphismKind.EDGE_ORDERED)
    with pytest.raises(NotAMorphism):
        apply_functor(m, Functor.F)


def test_closure_of_cyclic_lex_graph_is_refused():
    # dropping the loop 0 -> 0 would leave 0 -> 1 -> 0 -> 2 as a non-proper least path
    g = EdgeOrderedGraph("0", {"0": ["1", "2"], "1": ["0"]})
    assert is_object_of(g, CategoryKind.LEX_GRAPH)
    with pytest.raises(CyclicClosure):
        f_closure(g)
