"""Finite simple graphs and the constructions used to build Mycielskians.

Vertices are always ``0..n-1``.  Every constructor documents the labeling it
produces so that results can be compared across tools.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable


class EdgeListError(ValueError):
    """Malformed edge-list input."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on the vertex set ``0..n-1``.

    ``edges`` is a frozenset of pairs ``(u, v)`` with ``u < v``.  Use
    :meth:`from_edges` to build one from arbitrary input; it validates.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"invalid edge ({u}, {v}) for n={self.n}")
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ends."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks (bit ``u`` set iff ``u ~ v``)."""
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        m = self._adj[v]
        return frozenset(u for u in range(self.n) if m >> u & 1)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Subgraph on ``keep``, relabeled contiguously in increasing order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return Graph(len(keep), frozenset(_norm_edge(a, b) for a, b in edges))

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# --- families ---------------------------------------------------------------


def path(n: int) -> Graph:
    """Path on ``n`` vertices with edges ``{i, i+1}``."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, path(n).edges | {(0, n - 1)})


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def edgeless(n: int) -> Graph:
    return Graph(n, frozenset())


def grid(rows: int, cols: int) -> Graph:
    """Rectangular lattice; vertex ``(r, c)`` is labeled ``r * cols + c``."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")
    edges = set()
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.add((v, v + 1))
            if r + 1 < rows:
                edges.add((v, v + cols))
    return Graph(rows * cols, frozenset(edges))


# --- products and unions ----------------------------------------------------


def categorical_product(g: Graph, h: Graph) -> Graph:
    """Categorical (tensor) product; pair ``(u, v)`` is labeled ``u * h.n + v``."""
    if g.n == 0 or h.n == 0:
        raise ValueError("categorical product needs nonempty factors")
    edges = set()
    for u, x in g.edges:
        for v, y in h.edges:
            # {u,x} in E(G), {v,y} in E(H) gives two product edges
            edges.add(_norm_edge(u * h.n + v, x * h.n + y))
            edges.add(_norm_edge(u * h.n + y, x * h.n + v))
    return Graph(g.n * h.n, frozenset(edges))


def kronecker_cover(g: Graph) -> Graph:
    """Kronecker double cover ``G x P_2``; vertex ``(v, i)`` is ``2 v + i``."""
    return categorical_product(g, path(2))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return Graph(g1.n + g2.n, frozenset(edges))


def mycielskian(g: Graph, l: int) -> Graph:
    """Generalized Mycielskian ``mu_l(G)``.

    Layer ``i`` (1-based, ``1..l+1``) holds vertex ``(v, i)`` at label
    ``(i - 1) * n + v``; layer 1 is the one joined to the apex, and the apex
    is the last vertex ``n * (l + 1)``.  Consecutive layers are joined by the
    bipartite double of ``E(G)`` and layer ``l + 1`` carries a copy of ``G``.
    """
    if g.n == 0:
        raise ValueError("mycielskian needs a nonempty graph")
    if l < 0:
        raise ValueError("l must be nonnegative")
    n = g.n
    apex = n * (l + 1)
    edges = set()
    for i in range(l):
        lo, hi = i * n, (i + 1) * n
        for u, v in g.edges:
            edges.add((lo + u, hi + v))
            edges.add((lo + v, hi + u))
    top = l * n
    for u, v in g.edges:
        edges.add((top + u, top + v))
    for v in range(n):
        edges.add((v, apex))
    return Graph(apex + 1, frozenset(edges))


def iterated_mycielskian(g: Graph, l: int, r: int) -> Graph:
    """``mu_l`` applied ``r >= 1`` times."""
    if r < 1:
        raise ValueError("r must be >= 1")
    for _ in range(r):
        g = mycielskian(g, l)
    return g


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    adj = g.adjacency_masks
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            m = adj[v]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def canonical_hash(g: Graph) -> str:
    """Stable digest of the labeled graph (vertex count and sorted edges)."""
    payload = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.sorted_edges())
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


# --- edge-list text format --------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines and ``#`` comments are ignored.  Errors name the offending
    line number.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise EdgeListError("empty edge list: expected header 'n m'")
    lineno, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise EdgeListError(f"line {lineno}: expected header 'n m', got {' '.join(head)!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError(f"line {lineno}: negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise EdgeListError(f"header declares {m} edges but {len(body)} edge lines follow")
    seen = {}
    for lineno, parts in body:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}") from None
        if u == v:
            raise EdgeListError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"line {lineno}: vertex out of range 0..{n - 1}")
        e = _norm_edge(u, v)
        if e in seen:
            raise EdgeListError(f"line {lineno}: duplicate of edge on line {seen[e]}")
        seen[e] = lineno
    return Graph(n, frozenset(seen))


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
