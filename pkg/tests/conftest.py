import random

import pytest

from mycielski_ic.graphs import Graph

ACCEPTANCE_LINES = []


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive search over vertex maps with incremental adjacency checks."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if g.n > 10:
        raise ValueError("brute-force isomorphism is capped at 10 vertices")
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    image = [-1] * g.n
    used = [False] * h.n

    def extend(v):
        if v == g.n:
            return True
        for w in range(h.n):
            if used[w] or g.degree(v) != h.degree(w):
                continue
            if all(g.has_edge(v, u) == h.has_edge(w, image[u]) for u in range(v)):
                image[v], used[w] = w, True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
