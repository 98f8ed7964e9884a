"""``eograph`` command-line tool.

Exit status: 0 success, 1 unreadable input, 2 file-system error,
3 negative verdict, 4 enumeration bound exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from .categories import CategoryKind, object_violation
from .errors import EnumerationBoundExceeded, EOGraphError, NotAMorphism, NotConnected, WrongCategory
from .functors import e_order, loset_to_star, run_pipeline
from .graph import EdgeOrderedGraph
from .io import emit_dot, emit_eog, parse_eog, parse_map
from .morphisms import ADJUNCTIONS, MorphismKind, VertexMap, check_adjunction, morphism_violation
from .traversals import lex_bfs, lex_dfs
from .verify import random_suite, small_suite

EXIT_OK, EXIT_PARSE, EXIT_IO, EXIT_NO, EXIT_BOUND, EXIT_SUITE = range(6)

STAGE_FILES = ("0-input", "1-tree", "2-closure", "3-order")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # bad flags are input errors (status 1) rather than argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _read_graph(path: str) -> EdgeOrderedGraph:
    return parse_eog(Path(path).read_text())


def _search(g: EdgeOrderedGraph, mode: str):
    return lex_dfs(g) if mode == "dfs" else lex_bfs(g)


def cmd_traverse(args: argparse.Namespace) -> int:
    order = _search(_read_graph(args.input), args.mode)
    if args.format == "dot":
        sys.stdout.write(emit_dot(loset_to_star(order)))
    else:
        print(" ".join(order))
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    pipe = run_pipeline(g, args.mode)
    expected = _search(g, args.mode)
    if pipe.order != expected:
        print(f"error: pipeline order {' '.join(pipe.order)} differs from search order {' '.join(expected)}", file=sys.stderr)
        return EXIT_SUITE
    if args.emit_stages is not None:
        out = Path(args.emit_stages)
        out.mkdir(parents=True, exist_ok=True)
        for stem, (_, stage) in zip(STAGE_FILES, pipe.stages):
            text = emit_dot(stage, stem.replace("-", "_")) if args.format == "dot" else emit_eog(stage)
            (out / f"{stem}.{args.format}").write_text(text)
    print(" ".join(pipe.order))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    bad = object_violation(g, CategoryKind.parse(args.kind))
    if bad is None:
        print("yes")
        return EXIT_OK
    print(f"no: {bad}")
    return EXIT_NO


def cmd_hom(args: argparse.Namespace) -> int:
    g, h = _read_graph(args.source), _read_graph(args.target)
    mapping = parse_map(Path(args.map).read_text())
    kind = MorphismKind.parse(args.kind)
    if kind is MorphismKind.MONOTONE:
        src, dst = e_order(g), e_order(h)
        mapping = {v: w for v, w in mapping.items() if v in src}
        m = VertexMap(src, dst, mapping)
    else:
        m = VertexMap(g, h, mapping)
    bad = morphism_violation(m, kind, all_pairs=args.all_pairs)
    if bad is None:
        print("yes")
        return EXIT_OK
    print(f"no: {bad}")
    return EXIT_NO


def cmd_adjunction(args: argparse.Namespace) -> int:
    report = check_adjunction(_read_graph(args.left), _read_graph(args.right), args.which, seed=args.seed)
    print(report.format())
    print(f"RESULT: {'pass' if report.ok else 'fail'}")
    return EXIT_OK if report.ok else EXIT_NO


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "small":
        max_n = 3 if args.max_n is None else args.max_n
        report = small_suite(max_n, counterexample_dir=".")
    else:
        max_n = 10 if args.max_n is None else args.max_n
        report = random_suite(args.samples, args.seed, max_n, counterexample_dir=".")
    print(report.format())
    return EXIT_OK if report.ok else EXIT_SUITE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eograph", description="Lexicographic searches on pointed edge-ordered graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("traverse", help="print the lexicographic DFS or BFS order")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--mode", choices=("dfs", "bfs"), default="dfs")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.set_defaults(run=cmd_traverse)

    p = sub.add_parser("pipeline", help="compute the order via tree and closure, optionally writing each stage")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--mode", choices=("dfs", "bfs"), default="dfs")
    p.add_argument("--emit-stages", metavar="DIR")
    p.add_argument("--format", choices=("eog", "dot"), default="eog")
    p.set_defaults(run=cmd_pipeline)

    p = sub.add_parser("check", help="test membership in a category of graphs")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--kind", required=True, choices=[k.value for k in CategoryKind])
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("hom", help="test whether a vertex map is a morphism of the given kind")
    p.add_argument("--from", dest="source", required=True, metavar="FILE")
    p.add_argument("--to", dest="target", required=True, metavar="FILE")
    p.add_argument("--map", required=True, metavar="FILE")
    p.add_argument("--kind", required=True, choices=[k.value for k in MorphismKind])
    p.add_argument("--all-pairs", action="store_true", help="lex/shortlex: require least paths between all pairs")
    p.set_defaults(run=cmd_hom)

    p = sub.add_parser("adjunction", help="compare hom-sets and spot-check naturality")
    p.add_argument("--which", required=True, choices=tuple(ADJUNCTIONS))
    p.add_argument("--left", required=True, metavar="FILE")
    p.add_argument("--right", required=True, metavar="FILE")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_adjunction)

    p = sub.add_parser("verify", help="run the invariant battery over generated graphs")
    p.add_argument("--suite", choices=("small", "random"), default="small")
    p.add_argument("--max-n", type=int, metavar="N")
    p.add_argument("--samples", type=int, default=1000, metavar="K")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except EnumerationBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except WrongCategory as exc:
        print(f"no: {exc}", file=sys.stderr)
        return EXIT_NO
    except (EOGraphError, NotConnected, NotAMorphism, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
