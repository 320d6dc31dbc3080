import random

import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

from qindex.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    join,
)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


@pytest.fixture(scope="session")
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def bowtie() -> Graph:
    return join(complete_graph(1), disjoint_union(complete_graph(2), complete_graph(2)))


@pytest.fixture(scope="session")
def rook_4x4() -> Graph:
    edges = [
        (4 * a + b, 4 * c + d)
        for a in range(4)
        for b in range(4)
        for c in range(4)
        for d in range(4)
        if 4 * a + b < 4 * c + d and (a == c or b == d)
    ]
    return from_edge_list(16, edges)


@pytest.fixture(scope="session")
def wheel_5() -> Graph:
    return join(complete_graph(1), cycle_graph(4))


@pytest.fixture(scope="session")
def all_graphs_upto_8():
    """Canonical representatives of every isomorphism class, orders 1..8.

    Built once per session; several invariant suites and the acceptance
    criteria share this corpus.
    """
    from qindex.search import enumerate_levels

    by_order = {}
    for order, kept, _seen in enumerate_levels(8):
        by_order[order] = kept
    return by_order
