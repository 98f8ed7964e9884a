"""Invariant battery over generated instances, with replayable counterexamples."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path as FsPath

from .categories import CategoryKind, object_violation
from .functors import e_order, f_closure, gamma_closure, l_tree, run_pipeline, s_tree, theta
from .generate import random_graphs, small_graphs
from .graph import EdgeOrderedGraph
from .io import emit_eog
from .paths import ORACLE_MAX_VERTICES, least_paths, oracle_min_path
from .traversals import canonical_path, check_fo_bft, check_fo_dft, lex_bfs, lex_dfs

ORACLE_LIMIT = 8
COUNTEREXAMPLE_FILE = "eograph-counterexample.eog"

Check = Callable[[EdgeOrderedGraph], "str | None"]


def check_pipeline(g: EdgeOrderedGraph) -> str | None:
    for mode, search in (("dfs", lex_dfs), ("bfs", lex_bfs)):
        got, want = e_order(run_pipeline(g, mode)["transitive-closure"]), search(g)
        if got != want:
            return f"{mode} pipeline gives {' '.join(got)}, search gives {' '.join(want)}"
    return None


def check_oracle(g: EdgeOrderedGraph) -> str | None:
    if len(g) > ORACLE_LIMIT:
        return None
    for u in g.vertices:
        for shortlex, mode in ((False, "lex"), (True, "shortlex")):
            for v, p in least_paths(g, u, shortlex=shortlex).items():
                q = oracle_min_path(g, u, v, mode)
                if p != q:
                    return f"{mode} least path {u}->{v}: search {' '.join(p)}, enumeration {' '.join(q)}"
    return None


def check_canonical(g: EdgeOrderedGraph) -> str | None:
    """Canonical paths of the whole-graph traversals against the enumerated least paths."""
    exact = len(g) <= ORACLE_MAX_VERTICES
    for mode, search, oracle_mode, shortlex in (("df", lex_dfs, "lex", False), ("bf", lex_bfs, "shortlex", True)):
        order = search(g)
        for v in g.vertices:
            p = canonical_path(g, order, mode, v)
            q = oracle_min_path(g, g.point, v, oracle_mode) if exact else least_paths(g, g.point, shortlex=shortlex)[v]
            if p != q:
                return f"canonical {mode}-path to {v} is {' '.join(p)}, least path is {' '.join(q)}"
    return None


def check_structure(g: EdgeOrderedGraph) -> str | None:
    for name, tree in (("theta", theta(g)), ("s_tree", s_tree(g))):
        bad = object_violation(tree, CategoryKind.FIN_ARB)
        if bad:
            return f"{name} output is not an arborescence: {bad}"
        closure = gamma_closure(tree)
        bad = object_violation(closure, CategoryKind.T_ARB)
        if bad:
            return f"gamma_closure of {name} output is not a TArb object: {bad}"
        if l_tree(closure) != tree:
            return f"l_tree does not recover the {name} output from its closure"
    lex_closures = [("theta", theta(g))]
    if g.is_acyclic and object_violation(g, CategoryKind.LEX_GRAPH) is None:
        lex_closures.append(("input", g))
    for name, lg in lex_closures:
        bad = object_violation(f_closure(lg), CategoryKind.T_LEX_GRAPH)
        if bad:
            return f"f_closure of {name} is not a transitive lex-graph: {bad}"
    return None


def check_fo(g: EdgeOrderedGraph) -> str | None:
    if not check_fo_dft(g, lex_dfs(g)):
        return "lexicographic DFS order fails the depth-first characterization"
    if not check_fo_bft(g, lex_bfs(g)):
        return "lexicographic BFS order fails the breadth-first characterization"
    return None


BATTERY: dict[str, Check] = {
    "pipeline": check_pipeline,
    "oracle": check_oracle,
    "canonical": check_canonical,
    "structure": check_structure,
    "fo": check_fo,
}


def run_battery(g: EdgeOrderedGraph, checks: Iterable[str] = tuple(BATTERY)) -> list[tuple[str, str]]:
    failures = []
    for name in checks:
        try:
            msg = BATTERY[name](g)
        except Exception as exc:  # a crash is a failure of that check, not of the suite
            msg = f"{type(exc).__name__}: {exc}"
        if msg is not None:
            failures.append((name, msg))
    return failures


@dataclass(frozen=True)
class InstanceFailure:
    index: int
    graph: EdgeOrderedGraph
    check: str
    message: str


@dataclass
class SuiteReport:
    name: str
    total: int = 0
    failures: list[InstanceFailure] = field(default_factory=list)
    counterexample_path: str | None = None

    @property
    def failed_instances(self) -> int:
        return len({f.index for f in self.failures})

    @property
    def ok(self) -> bool:
        return not self.failures

    def format(self) -> str:
        lines = [
            f"suite: {self.name}",
            f"instances: {self.total}",
            f"passed: {self.total - self.failed_instances}",
            f"failed: {self.failed_instances}",
        ]
        if self.failures:
            first = self.failures[0]
            lines.append(f"first failure: instance {first.index}, check {first.check}: {first.message}")
            if self.counterexample_path:
                lines.append(f"counterexample written to {self.counterexample_path}")
            lines.append(emit_eog(first.graph).rstrip("\n"))
        lines.append(f"RESULT: {'pass' if self.ok else 'fail'}")
        return "\n".join(lines)


def _job(args: tuple[int, EdgeOrderedGraph]) -> tuple[int, EdgeOrderedGraph, list[tuple[str, str]]]:
    i, g = args
    return i, g, run_battery(g)


def run_suite(
    name: str,
    instances: Iterable[EdgeOrderedGraph],
    *,
    workers: int = 1,
    counterexample_dir: str | os.PathLike[str] | None = None,
) -> SuiteReport:
    """Run the battery on every instance; failures are sorted by instance index."""
    report = SuiteReport(name)
    jobs = enumerate(instances)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_job, jobs, chunksize=64))
    else:
        results = [_job(j) for j in jobs]
    for i, g, failed in sorted(results, key=lambda r: r[0]):
        report.total += 1
        report.failures.extend(InstanceFailure(i, g, c, m) for c, m in failed)
    if report.failures and counterexample_dir is not None:
        path = FsPath(counterexample_dir) / COUNTEREXAMPLE_FILE
        path.write_text(emit_eog(report.failures[0].graph))
        report.counterexample_path = str(path)
    return report


def small_suite(max_n: int, **kwargs) -> SuiteReport:
    return run_suite(f"small (max-n {max_n})", small_graphs(max_n), **kwargs)


def random_suite(samples: int, seed: int, max_n: int, min_n: int = 4, **kwargs) -> SuiteReport:
    lo = min(min_n, max_n)
    return run_suite(
        f"random (samples {samples}, seed {seed}, n in [{lo}, {max_n}])",
        random_graphs(samples, seed, lo, max_n),
        **kwargs,
    )
