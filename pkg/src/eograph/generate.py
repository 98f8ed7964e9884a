"""Exhaustive and seeded-random generators of connected pointed edge-ordered graphs."""

from __future__ import annotations

import itertools
import random
import string
from collections.abc import Iterator

from .graph import EdgeOrderedGraph, is_connected


def labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"v{i}" for i in range(n))


def _neighbourhoods(v: str, names: tuple[str, ...]) -> list[tuple[str, ...]]:
    """Every ordered list of distinct out-neighbours of ``v``."""
    others = [w for w in names if w != v]
    out: list[tuple[str, ...]] = []
    for k in range(len(others) + 1):
        for subset in itertools.combinations(others, k):
            out.extend(itertools.permutations(subset))
    return out


def all_graphs(n: int) -> Iterator[EdgeOrderedGraph]:
    """All connected pointed edge-ordered graphs on exactly ``n`` labelled vertices.

    Labels are the first ``n`` letters; every choice of point is included and no
    isomorphism reduction is done.
    """
    names = labels(n)
    choices = [_neighbourhoods(v, names) for v in names]
    for point in names:
        for combo in itertools.product(*choices):
            g = EdgeOrderedGraph(point, dict(zip(names, combo)), names)
            if is_connected(g):
                yield g


def small_graphs(max_n: int) -> Iterator[EdgeOrderedGraph]:
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def random_graph(rng: random.Random, n: int, density: float | None = None) -> EdgeOrderedGraph:
    """A connected graph: a random spanning arborescence plus extra random edges."""
    names = list(labels(n))
    rng.shuffle(names)
    edges = {(names[rng.randrange(i)], names[i]) for i in range(1, n)}
    p = rng.uniform(0.0, 0.5) if density is None else density
    for u in names:
        for v in names:
            if u != v and rng.random() < p:
                edges.add((u, v))
    succ: dict[str, list[str]] = {v: [] for v in names}
    for u, v in sorted(edges):
        succ[u].append(v)
    for lst in succ.values():
        rng.shuffle(lst)
    return EdgeOrderedGraph(names[0], succ, sorted(names))


def instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}/{index}")


def random_graphs(count: int, seed: int, min_n: int = 4, max_n: int = 10) -> Iterator[EdgeOrderedGraph]:
    """``count`` reproducible instances; instance ``i`` depends only on ``(seed, i)``."""
    if min_n > max_n:
        raise ValueError(f"min_n={min_n} exceeds max_n={max_n}")
    for i in range(count):
        rng = instance_rng(seed, i)
        yield random_graph(rng, rng.randint(min_n, max_n))
