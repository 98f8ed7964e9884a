"""The eight acceptance criteria, each reported as a single pass/fail line."""

from __future__ import annotations

import itertools
import time

import pytest

from eograph import (
    CategoryKind,
    EdgeOrderedGraph,
    Functor,
    MorphismKind,
    PathComparison,
    apply_functor,
    canonical_path,
    check_adjunction,
    check_fo_bft,
    check_fo_dft,
    compare_lex,
    compare_shortlex,
    e_order,
    enumerate_homs,
    enumerate_proper_paths,
    f_closure,
    gamma_closure,
    is_morphism,
    is_object_of,
    l_tree,
    lex_bfs,
    lex_dfs,
    min_path,
    min_shortest_path,
    oracle_min_path,
    run_pipeline,
    s_tree,
    theta,
)
from eograph.generate import random_graphs, small_graphs
from eograph.morphisms import ADJUNCTIONS, ARROWS, FUNCTORS, hom_set

from conftest import ACCEPTANCE_LINES

SEED = 2026
RANDOM_COUNT = 10_000
K = CategoryKind
LESS = PathComparison.LESS


def report(capsys, number: int, ok: bool, detail: str, elapsed: float, limit: float | None = None) -> None:
    within = limit is None or elapsed < limit
    budget = f", limit {limit:g}s" if limit is not None else ""
    line = f"criterion {number}: {'PASS' if ok and within else 'FAIL'} - {detail} ({elapsed:.2f}s{budget})"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line
    assert within, line


@pytest.fixture(scope="module")
def small() -> list[EdgeOrderedGraph]:
    return list(small_graphs(3))


@pytest.fixture(scope="module")
def instances(small) -> list[EdgeOrderedGraph]:
    return small + list(random_graphs(RANDOM_COUNT, SEED, 4, 10))


def _first(failures: list[str]) -> str:
    return f"; first: {failures[0]}" if failures else ""


def test_criterion_1_worked_example(capsys):
    start = time.perf_counter()
    bc = EdgeOrderedGraph("a", {"a": ["b", "c"], "b": ["d"], "c": ["d"]})
    cb = EdgeOrderedGraph("a", {"a": ["c", "b"], "b": ["d"], "c": ["d"]})
    golden = [
        (lex_dfs(bc), ("a", "b", "d", "c")),
        (lex_bfs(bc), ("a", "b", "c", "d")),
        (lex_dfs(cb), ("a", "c", "d", "b")),
        (lex_bfs(cb), ("a", "c", "b", "d")),
    ]
    matched = sum(got == want for got, want in golden)
    report(capsys, 1, matched == 4, f"{matched}/4 golden traversals", time.perf_counter() - start, 1)


def test_criterion_2_pipeline_equals_search(capsys, instances):
    start = time.perf_counter()
    failures = []
    for i, g in enumerate(instances):
        for mode, search in (("dfs", lex_dfs), ("bfs", lex_bfs)):
            if e_order(run_pipeline(g, mode)["transitive-closure"]) != search(g):
                failures.append(f"instance {i} {mode}")
    sizes = sorted({len(g) for g in instances})
    detail = f"{len(instances)} instances (n={sizes[0]}..{sizes[-1]}), {len(failures)} mismatches" + _first(failures)
    report(capsys, 2, not failures, detail, time.perf_counter() - start, 60)


def test_criterion_3_oracle_equivalence(capsys, instances):
    start = time.perf_counter()
    failures, pairs, count = [], 0, 0
    for i, g in enumerate(instances):
        if len(g) > 8:
            continue
        count += 1
        for u in g.vertices:
            for v in g.reachable(u):
                pairs += 1
                if min_path(g, u, v) != oracle_min_path(g, u, v, "lex"):
                    failures.append(f"instance {i} lex {u}->{v}")
                if min_shortest_path(g, u, v) != oracle_min_path(g, u, v, "shortlex"):
                    failures.append(f"instance {i} shortlex {u}->{v}")
    detail = f"{count} instances, {pairs} reachable pairs, {len(failures)} mismatches" + _first(failures)
    report(capsys, 3, not failures, detail, time.perf_counter() - start, 120)


def test_criterion_4_canonical_paths(capsys, instances):
    start = time.perf_counter()
    failures, checked = [], 0
    for i, g in enumerate(instances):
        dfs, bfs = lex_dfs(g), lex_bfs(g)
        for v in g.vertices:
            checked += 1
            if canonical_path(g, dfs, "df", v) != oracle_min_path(g, g.point, v, "lex"):
                failures.append(f"instance {i} df-path to {v}")
            if canonical_path(g, bfs, "bf", v) != oracle_min_path(g, g.point, v, "shortlex"):
                failures.append(f"instance {i} bf-path to {v}")
    detail = f"{checked} vertices against enumerated least paths, {len(failures)} mismatches" + _first(failures)
    report(capsys, 4, not failures, detail, time.perf_counter() - start)


def test_criterion_5_structural_outputs(capsys, instances):
    start = time.perf_counter()
    failures = []
    for i, g in enumerate(instances):
        for name, tree in (("theta", theta(g)), ("s_tree", s_tree(g))):
            if not is_object_of(tree, K.FIN_ARB):
                failures.append(f"instance {i}: {name} not FinArb")
            closure = gamma_closure(tree)
            if not is_object_of(closure, K.T_ARB):
                failures.append(f"instance {i}: gamma_closure({name}) not TArb")
            if l_tree(closure) != tree:
                failures.append(f"instance {i}: l_tree(gamma_closure({name})) differs")
        if not is_object_of(f_closure(theta(g)), K.T_LEX_GRAPH):
            failures.append(f"instance {i}: f_closure(theta) not TLexGraph")
        if g.is_acyclic and is_object_of(g, K.LEX_GRAPH) and not is_object_of(f_closure(g), K.T_LEX_GRAPH):
            failures.append(f"instance {i}: f_closure not TLexGraph")
    detail = f"{len(instances)} instances, {len(failures)} violations" + _first(failures)
    report(capsys, 5, not failures, detail, time.perf_counter() - start)


def _objects(small, category, acyclic=False):
    return [g for g in small if is_object_of(g, category) and (g.is_acyclic or not acyclic)]


def test_criterion_6_adjunctions(capsys, small):
    start = time.perf_counter()
    failures, total, squares = [], 0, 0
    per = []
    for which, info in ADJUNCTIONS.items():
        lefts = _objects(small, info.left_category, info.needs_acyclic_left)
        rights = _objects(small, info.right_category)
        # naturality squares also run through arrows from/to the objects on at most two vertices
        left_probes = [g for g in lefts if len(g) <= 2]
        right_probes = [g for g in rights if len(g) <= 2]
        n = 0
        for a, b in itertools.product(lefts, rights):
            r = check_adjunction(a, b, which, seed=SEED, left_probes=left_probes, right_probes=right_probes)
            n += 1
            squares += r.naturality_checks
            if not r.ok:
                failures.append(f"{which}: {r.failures[:1]}")
        per.append(f"{which} {n}")
        total += n
    detail = f"{total} pairs ({', '.join(per)}), {squares} naturality squares, {len(failures)} failures" + _first(failures)
    report(capsys, 6, not failures, detail, time.perf_counter() - start, 120)


def test_criterion_7_first_order_characterizations(capsys, instances):
    start = time.perf_counter()
    failures = []
    for i, g in enumerate(instances):
        if not check_fo_dft(g, lex_dfs(g)):
            failures.append(f"instance {i} dft")
        if not check_fo_bft(g, lex_bfs(g)):
            failures.append(f"instance {i} bft")
    diamond = EdgeOrderedGraph("a", {"a": ["b", "c"], "b": ["d"], "c": ["d"]})
    for order in (("a", "d", "b", "c"), ("a", "d", "c", "b")):
        if check_fo_dft(diamond, order) or check_fo_bft(diamond, order):
            failures.append(f"non-traversal {order} accepted")
    detail = f"{len(instances)} instances + 2 non-traversals, {len(failures)} failures" + _first(failures)
    report(capsys, 7, not failures, detail, time.perf_counter() - start)


def _proper(p) -> bool:
    return len(set(p)) == len(p)


def test_criterion_8_morphism_laws(capsys, small):
    start = time.perf_counter()
    failures = []
    homs = path_pairs = 0
    paths = {g: [p for u in g.vertices for v in g.vertices for p in enumerate_proper_paths(g, u, v)] for g in small}
    for g, h in itertools.product(small, repeat=2):
        for m in enumerate_homs(g, h, MorphismKind.EDGE_ORDERED):
            homs += 1
            for p, q in itertools.permutations(paths[g], 2):
                if p[0] != q[0]:
                    continue
                hp, hq = m.image(p), m.image(q)
                if not (_proper(hp) and _proper(hq)):
                    continue
                path_pairs += 1
                if compare_lex(g, p, q) is LESS and compare_lex(h, hp, hq) is not LESS:
                    failures.append(f"{m}: lex order of {p}, {q}")
                if compare_shortlex(g, p, q) is LESS and compare_shortlex(h, hp, hq) is not LESS:
                    failures.append(f"{m}: shortlex order of {p}, {q}")

    trees = _objects(small, K.FIN_ARB)
    tree_homs = 0
    for s, t in itertools.product(trees, repeat=2):
        for m in enumerate_homs(s, t, MorphismKind.EDGE_ORDERED):
            tree_homs += 1
            for kind in (MorphismKind.LEX, MorphismKind.SHORT_LEX):
                for all_pairs in (False, True):
                    if not is_morphism(m, kind, all_pairs=all_pairs):
                        failures.append(f"tree map {m} is not {kind.value}")

    images = 0
    for f, info in FUNCTORS.items():
        objs = _objects(small, info.source, acyclic=f is Functor.F)
        kind, all_pairs = ARROWS[info.target]
        for g, h in itertools.product(objs, repeat=2):
            for m in hom_set(g, h, info.source):
                images += 1
                if not is_morphism(apply_functor(m, f), kind, all_pairs=all_pairs):
                    failures.append(f"{f.name} image of {m}")
    detail = (
        f"{homs} EO maps / {path_pairs} path pairs, {tree_homs} tree maps, {images} functor images, "
        f"{len(failures)} failures" + _first(failures)
    )
    report(capsys, 8, not failures, detail, time.perf_counter() - start)
