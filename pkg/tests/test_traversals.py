import pytest

from eograph import (
    LinearOrder,
    canonical_path,
    check_fo_bft,
    check_fo_dft,
    lex_bfs,
    lex_dfs,
    min_path,
    min_shortest_path,
    predecessor_map,
)
from eograph.errors import NotATraversal, NotConnected
from eograph.traversals import _search_with_stages

from conftest import graph


def test_lex_dfs_diamond(diamond, diamond_cb):
    assert lex_dfs(diamond) == ("a", "b", "d", "c")
    assert lex_dfs(diamond_cb) == ("a", "c", "d", "b")


def test_lex_bfs_diamond(diamond, diamond_cb):
    assert lex_bfs(diamond) == ("a", "b", "c", "d")
    assert lex_bfs(diamond_cb) == ("a", "c", "b", "d")


def test_trivial_searches(single, path3):
    assert lex_dfs(single) == ("a",)
    assert lex_bfs(single) == ("a",)
    assert lex_bfs(path3) == ("a", "b", "c")


def test_searches_need_connectivity():
    g = graph("a", {}, ["a", "b"])
    with pytest.raises(NotConnected):
        lex_dfs(g)
    with pytest.raises(NotConnected):
        lex_bfs(g)


def test_revisit_is_skipped():
    # c is pushed twice; the DFS pops the copy pushed by b first
    g = graph("a", {"a": ["b", "c"], "b": ["c"]})
    assert lex_dfs(g) == ("a", "b", "c")
    assert lex_bfs(g) == ("a", "b", "c")


def test_predecessor_maps(diamond, single):
    assert predecessor_map(diamond, ("a", "b", "d", "c"), "df") == {"a": "a", "b": "a", "d": "b", "c": "a"}
    assert predecessor_map(diamond, ("a", "b", "c", "d"), "bf") == {"a": "a", "b": "a", "c": "a", "d": "b"}
    assert predecessor_map(single, ("a",), "df") == {"a": "a"}


def test_df_predecessor_is_greatest_earlier_in_neighbour(diamond):
    # in (a, b, c, d) both b and c precede d; df takes the later one
    assert predecessor_map(diamond, ("a", "b", "c", "d"), "df")["d"] == "c"


def test_predecessor_map_rejects_non_traversals(diamond):
    with pytest.raises(NotATraversal):
        predecessor_map(diamond, ("a", "d", "b", "c"), "df")
    with pytest.raises(NotATraversal):
        predecessor_map(diamond, ("a", "b", "c"), "df")


def test_canonical_paths(diamond, single):
    assert canonical_path(diamond, lex_dfs(diamond), "df", "d") == ("a", "b", "d")
    assert canonical_path(diamond, lex_bfs(diamond), "bf", "d") == ("a", "b", "d")
    assert canonical_path(diamond, lex_dfs(diamond), "df", "a") == ("a",)
    assert canonical_path(single, ("a",), "bf", "a") == ("a",)


def test_fo_checks(diamond):
    assert check_fo_dft(diamond, ("a", "b", "d", "c"))
    assert check_fo_bft(diamond, ("a", "b", "c", "d"))
    for bad in (("a", "d", "b", "c"), ("a", "d", "c", "b")):
        assert not check_fo_dft(diamond, bad)
        assert not check_fo_bft(diamond, bad)
    # (a,b,c,d) is a breadth-first but not a depth-first traversal: a->c skips d's stage
    assert not check_fo_dft(diamond, ("a", "b", "c", "d"))
    assert not check_fo_bft(diamond, ("a", "b", "d", "c"))


def test_fo_trivial():
    g = graph("a", {"a": ["b"]})
    assert check_fo_dft(g, ("a", "b")) and check_fo_bft(g, ("a", "b"))


def test_fo_rejects_bad_listings(diamond):
    assert not check_fo_dft(diamond, ("b", "a", "d", "c"))
    assert not check_fo_bft(diamond, ("a", "b", "c"))


def test_linear_order():
    o = LinearOrder("abc")
    assert o == ("a", "b", "c")
    assert o.less("a", "c") and not o.less("c", "a")
    assert o.positions == {"a": 0, "b": 1, "c": 2}
    with pytest.raises(ValueError):
        LinearOrder("aba")


def test_search_order_is_path_order(diamond):
    # vertices come out sorted by their least paths from the point
    from eograph.paths import lex_key, shortlex_key

    assert sorted(diamond.vertices, key=lambda v: lex_key(diamond)(min_path(diamond, "a", v))) == list(lex_dfs(diamond))
    assert sorted(diamond.vertices, key=lambda v: shortlex_key(diamond)(min_shortest_path(diamond, "a", v))) == list(
        lex_bfs(diamond)
    )


def test_instrumented_search_names_predecessors(diamond):
    for mode, search in (("df", lex_dfs), ("bf", lex_bfs)):
        order, pusher = _search_with_stages(diamond, mode)
        assert order == search(diamond)
        assert pusher == predecessor_map(diamond, order, mode)
