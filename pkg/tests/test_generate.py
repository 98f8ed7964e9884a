import itertools
from math import factorial

from eograph import is_connected, lex_bfs
from eograph.generate import all_graphs, labels, random_graphs, small_graphs


def _count_by_formula(n):
    """Connected labelled pointed edge-ordered graphs, counted via edge subsets and out-degree factorials."""
    names = labels(n)
    pairs = [(u, v) for u in names for v in names if u != v]
    total = 0
    for point in names:
        for mask in itertools.product((0, 1), repeat=len(pairs)):
            edges = [p for p, bit in zip(pairs, mask) if bit]
            seen, stack = {point}, [point]
            while stack:
                u = stack.pop()
                for a, b in edges:
                    if a == u and b not in seen:
                        seen.add(b)
                        stack.append(b)
            if len(seen) == n:
                orders = 1
                for u in names:
                    orders *= factorial(sum(1 for a, _ in edges if a == u))
                total += orders
    return total


def test_exhaustive_counts():
    for n in (1, 2, 3):
        assert sum(1 for _ in all_graphs(n)) == _count_by_formula(n)
    assert sum(1 for _ in all_graphs(1)) == 1
    assert sum(1 for _ in all_graphs(2)) == 4


def test_exhaustive_graphs_are_distinct_and_connected():
    gs = list(small_graphs(3))
    assert len(set(gs)) == len(gs)
    assert all(is_connected(g) for g in gs)


def test_random_graphs_are_reproducible_and_in_range():
    a = list(random_graphs(50, seed=4, min_n=4, max_n=10))
    b = list(random_graphs(50, seed=4, min_n=4, max_n=10))
    assert a == b
    assert all(4 <= len(g) <= 10 and is_connected(g) for g in a)
    assert a != list(random_graphs(50, seed=5, min_n=4, max_n=10))
    # instance i does not depend on how many instances are drawn
    assert list(random_graphs(3, seed=4))[2] == a[2]
    lex_bfs(a[0])
