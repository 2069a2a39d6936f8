"""Independence complexes and dominated-vertex folding."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph

DEFAULT_MAX_FACES = 2_000_000


class FaceBudgetExceeded(RuntimeError):
    """Raised when enumeration passes the face budget."""

    def __init__(self, reached: int, budget: int):
        super().__init__(f"face budget exceeded: reached {reached} faces (budget {budget})")
        self.reached = reached
        self.budget = budget


@dataclass(frozen=True)
class SimplicialComplex:
    """All faces of a complex, grouped by dimension.

    ``faces_by_dim[d]`` is the lexicographically sorted list of ``d``-faces,
    each a sorted vertex tuple.  ``contains_empty_face`` separates ``{∅}``
    (True, no other faces) from the void complex (False).
    """

    faces_by_dim: tuple = ()
    contains_empty_face: bool = True

    def __post_init__(self):
        if self.faces_by_dim and not self.contains_empty_face:
            raise ValueError("a complex with faces must contain the empty face")

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 1

    @property
    def num_faces(self) -> int:
        """Nonempty faces only."""
        return sum(len(fs) for fs in self.faces_by_dim)

    @property
    def is_void(self) -> bool:
        return not self.contains_empty_face

    def faces(self, d: int) -> list:
        if d == -1:
            return [()] if self.contains_empty_face else []
        if 0 <= d < len(self.faces_by_dim):
            return self.faces_by_dim[d]
        return []

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, f_1, ...]``."""
        return [int(self.contains_empty_face)] + [len(fs) for fs in self.faces_by_dim]

    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces(0)]

    def to_text(self) -> str:
        """One face per line, blank line between dimensions."""
        blocks = ["\n".join(" ".join(map(str, f)) for f in fs) for fs in self.faces_by_dim]
        return "\n\n".join(blocks) + ("\n" if blocks else "")

    @classmethod
    def from_text(cls, text: str) -> "SimplicialComplex":
        blocks = [b for b in text.strip("\n").split("\n\n")] if text.strip() else []
        faces = []
        for b in blocks:
            faces.append(sorted(tuple(sorted(map(int, ln.split()))) for ln in b.splitlines()))
        return cls(tuple(faces), True)


def independence_complex(g: Graph, max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """Every independent set of ``g`` as a face.

    Depth-first extension in increasing vertex order, so faces come out in
    lexicographic order; grouping by size keeps that order per dimension.
    """
    n = g.n
    adj = g.adjacency_masks
    full = (1 << n) - 1
    # later[v]: vertices strictly greater than v
    later = [full & ~((1 << (v + 1)) - 1) for v in range(n)]
    by_dim: list[list[tuple]] = []
    count = 0
    stack = [((), full)]
    while stack:
        face, cand = stack.pop()
        if face:
            d = len(face) - 1
            if d == len(by_dim):
                by_dim.append([])
            by_dim[d].append(face)
            count += 1
            if count > max_faces:
                raise FaceBudgetExceeded(count, max_faces)
        # push children in reverse so the smallest vertex is popped first
        kids = []
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            kids.append((face + (v,), cand & later[v] & ~adj[v]))
        stack.extend(reversed(kids))
    return SimplicialComplex(tuple(by_dim), True)


@dataclass
class FoldLog:
    """Ordered ``(kept, deleted)`` pairs in the original vertex labels."""

    steps: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def deleted(self) -> list[int]:
        return [v for _, v in self.steps]


def fold_reduce(g: Graph) -> tuple[Graph, FoldLog]:
    """Delete dominated vertices until none remain.

    At each step take the lexicographically first ordered pair ``(u, v)``,
    ``u != v``, with ``N(u) ⊆ N(v)`` and delete ``v``.  The result is
    relabeled contiguously; the log keeps the original labels.
    """
    alive = list(range(g.n))
    adj = list(g.adjacency_masks)
    log = FoldLog()
    while True:
        hit = None
        for u in alive:
            nu = adj[u]
            for v in alive:
                if v != u and nu & ~adj[v] == 0:
                    hit = (u, v)
                    break
            if hit:
                break
        if hit is None:
            break
        u, v = hit
        log.steps.append(hit)
        alive.remove(v)
        bit = ~(1 << v)
        for w in alive:
            adj[w] &= bit
    return g.induced_subgraph(alive), log


def euler_characteristic(k: SimplicialComplex) -> int:
    """Reduced Euler characteristic; ``{∅}`` gives ``-1``."""
    if k.is_void:
        raise ValueError("reduced Euler characteristic of the void complex is undefined")
    return sum((-1) ** (d - 1) * f for d, f in enumerate(k.f_vector()))
