from __future__ import annotations

import pytest

from eograph import EdgeOrderedGraph


def graph(point: str, succ: dict[str, list[str]], vertices: list[str] | None = None) -> EdgeOrderedGraph:
    return EdgeOrderedGraph(point, succ, vertices)


@pytest.fixture
def diamond() -> EdgeOrderedGraph:
    """The 4-cycle a->b, a->c, b->d, c->d with b before c at a."""
    return graph("a", {"a": ["b", "c"], "b": ["d"], "c": ["d"]})


@pytest.fixture
def diamond_cb() -> EdgeOrderedGraph:
    return graph("a", {"a": ["c", "b"], "b": ["d"], "c": ["d"]})


@pytest.fixture
def path3() -> EdgeOrderedGraph:
    return graph("a", {"a": ["b"], "b": ["c"]})


@pytest.fixture
def single() -> EdgeOrderedGraph:
    return graph("a", {}, ["a"])


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
