import itertools
import random

import pytest

from conftest import isomorphic, random_graph
from mycielski_ic.complexes import fold_reduce, independence_complex
from mycielski_ic.graphs import (
    EdgeListError,
    Graph,
    canonical_hash,
    categorical_product,
    complete,
    cycle,
    disjoint_union,
    edgeless,
    format_edge_list,
    grid,
    is_bipartite,
    iterated_mycielskian,
    kronecker_cover,
    mycielskian,
    parse_edge_list,
    path,
)
from mycielski_ic.homology import reduced_homology


def H(g):
    return reduced_homology(independence_complex(fold_reduce(g)[0]))


def test_path():
    assert path(1).n == 1 and path(1).num_edges == 0
    assert path(3).sorted_edges() == [(0, 1), (1, 2)]
    assert isomorphic(path(2), complete(2))
    with pytest.raises(ValueError):
        path(0)


def test_cycle():
    assert isomorphic(cycle(3), complete(3))
    assert cycle(4).num_edges == 4 and is_bipartite(cycle(4))
    assert cycle(5).num_edges == 5 and not is_bipartite(cycle(5))
    with pytest.raises(ValueError):
        cycle(2)


def test_complete():
    assert complete(1).num_edges == 0
    assert complete(2).sorted_edges() == [(0, 1)]
    assert complete(4).num_edges == 6
    with pytest.raises(ValueError):
        complete(0)


def test_grid():
    for n in range(1, 7):
        assert isomorphic(grid(1, n), path(n))
    assert isomorphic(grid(2, 2), cycle(4))
    g = grid(2, 3)
    # oracle: all cell pairs at Manhattan distance one
    cells = [(r, c) for r in range(2) for c in range(3)]
    expected = sum(1 for a, b in itertools.combinations(cells, 2)
                   if abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1)
    assert (g.n, g.num_edges) == (6, expected) == (6, 7)
    assert is_bipartite(grid(3, 4))
    with pytest.raises(ValueError):
        grid(0, 3)


def test_categorical_product():
    kk = categorical_product(complete(2), complete(2))
    assert isomorphic(kk, disjoint_union(complete(2), complete(2)))
    assert isomorphic(categorical_product(cycle(5), complete(2)), cycle(10))
    g = categorical_product(cycle(5), path(1))
    assert (g.n, g.num_edges) == (5, 0)


def test_categorical_product_commutes():
    rng = random.Random(7)
    for _ in range(20):
        a = random_graph(rng, rng.randint(1, 4), 0.6)
        b = random_graph(rng, rng.randint(1, 3), 0.6)
        ab, ba = categorical_product(a, b), categorical_product(b, a)
        if ab.n <= 10:
            assert isomorphic(ab, ba)
        assert H(ab) == H(ba)
    # larger instances through homology only (12 vertices)
    a, b = cycle(4), complete(3)
    assert H(categorical_product(a, b)) == H(categorical_product(b, a))


def test_kronecker_cover():
    assert isomorphic(kronecker_cover(cycle(4)), disjoint_union(cycle(4), cycle(4)))
    assert isomorphic(kronecker_cover(complete(3)), cycle(6))
    assert isomorphic(kronecker_cover(complete(2)), disjoint_union(complete(2), complete(2)))
    assert kronecker_cover(cycle(5)).edges == categorical_product(cycle(5), path(2)).edges


def test_disjoint_union():
    g = disjoint_union(complete(1), complete(1))
    assert (g.n, g.num_edges) == (2, 0)
    assert isomorphic(disjoint_union(complete(2), complete(2)), kronecker_cover(complete(2)))
    g = disjoint_union(path(3), cycle(3))
    assert (g.n, g.num_edges) == (6, 5)


def test_mycielskian_cone():
    g = cycle(5)
    cone = mycielskian(g, 0)
    apex = cone.n - 1
    assert cone.n == 6
    assert cone.neighbors(apex) == frozenset(range(5))
    assert {e for e in cone.edges if apex not in e} == g.edges


def test_mycielskian_small():
    assert isomorphic(mycielskian(complete(2), 1), cycle(5))
    g = mycielskian(complete(3), 1)
    # two cross edges per base edge, the top copy of the base, one apex edge per bottom vertex
    assert (g.n, g.num_edges) == (7, 2 * 3 + 3 + 3)


@pytest.mark.parametrize("base", [complete(3), cycle(5), path(4), grid(2, 3)])
@pytest.mark.parametrize("l", [0, 1, 2, 4])
def test_mycielskian_structure(base, l):
    g = mycielskian(base, l)
    n = base.n
    apex = n * (l + 1)
    assert g.n == apex + 1
    assert g.neighbors(apex) == frozenset(range(n))
    layer = lambda i: range(i * n, (i + 1) * n)  # noqa: E731
    top = g.induced_subgraph(layer(l))
    assert top.edges == base.edges
    for i in range(l):
        assert g.induced_subgraph(layer(i)).num_edges == 0
        for u in range(n):
            for v in range(n):
                assert g.has_edge(i * n + u, (i + 1) * n + v) == base.has_edge(u, v)
        for j in range(i + 2, l + 1):
            assert not any(g.has_edge(i * n + u, j * n + v) for u in range(n) for v in range(n))


def test_iterated_sizes():
    assert isomorphic(iterated_mycielskian(complete(2), 1, 1), cycle(5))
    assert iterated_mycielskian(complete(2), 1, 2).n == 11
    assert iterated_mycielskian(complete(2), 1, 3).n == 23
    with pytest.raises(ValueError):
        iterated_mycielskian(complete(2), 1, 0)


def test_adjacency_symmetric_irreflexive():
    for g in [mycielskian(cycle(5), 3), kronecker_cover(grid(2, 3)), iterated_mycielskian(path(3), 2, 2)]:
        for u in range(g.n):
            assert not g.has_edge(u, u)
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)


def test_bipartite_cover_homology():
    for g in [path(5), cycle(6), grid(2, 3), grid(3, 3)]:
        assert is_bipartite(g)
        assert H(kronecker_cover(g)) == H(disjoint_union(g, g))


def test_canonical_hash():
    assert canonical_hash(path(3)) == canonical_hash(path(3))
    assert canonical_hash(path(3)) != canonical_hash(path(4))
    edges = [(0, 1), (2, 3), (1, 2), (3, 0)]
    a = Graph.from_edges(4, edges)
    b = Graph.from_edges(4, [(v, u) for u, v in reversed(edges)])
    assert canonical_hash(a) == canonical_hash(b) == canonical_hash(cycle(4))


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_edge_list_round_trip():
    g = mycielskian(cycle(5), 2)
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("3 0\n") == edgeless(3)


@pytest.mark.parametrize("text, where", [
    ("3 2\n0 1\n1 1\n", "line 3: loop"),
    ("3 2\n0 1\n1 0\n", "line 3: duplicate of edge on line 2"),
    ("3 1\n0 5\n", "line 2: vertex out of range"),
    ("3 2\n0 1\n", "declares 2 edges"),
    ("x y\n", "line 1"),
])
def test_edge_list_diagnostics(text, where):
    with pytest.raises(EdgeListError, match=where):
        parse_edge_list(text)
