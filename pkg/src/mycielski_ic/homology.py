"""Exact reduced integral homology through Smith normal form.

Boundary matrices are reduced with sparse unit-pivot elimination first (every
boundary entry is ±1, and unit pivots cannot change the invariant factors
beyond contributing a 1).  Whatever survives is a small dense block that goes
through a textbook Smith normal form over Python integers.
"""

from __future__ import annotations

import heapq
import re
from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex


@dataclass
class IntMatrix:
    """Integer matrix stored column-wise as ``{row: value}`` dicts."""

    rows: int
    cols: int
    columns: list

    def __post_init__(self):
        if len(self.columns) != self.cols:
            raise ValueError("column count does not match storage")
        for c in self.columns:
            if any(not 0 <= r < self.rows for r in c):
                raise ValueError("row index out of range")

    @classmethod
    def from_dense(cls, a) -> "IntMatrix":
        a = [[int(x) for x in row] for row in a]
        m = len(a)
        n = len(a[0]) if m else 0
        cols = [{i: a[i][j] for i in range(m) if a[i][j]} for j in range(n)]
        return cls(m, n, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, c in enumerate(self.columns):
            for i, v in c.items():
                out[i][j] = v
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for c in other.columns:
            acc: dict[int, int] = defaultdict(int)
            for k, v in c.items():
                for i, w in self.columns[k].items():
                    acc[i] += w * v
            out.append({i: v for i, v in acc.items() if v})
        return IntMatrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not any(self.columns)


@dataclass(frozen=True)
class SNF:
    factors: tuple
    rank: int


def boundary_matrix(k: SimplicialComplex, d: int) -> IntMatrix:
    """Augmented boundary ``∂_d`` from ``d``-faces to ``(d-1)``-faces.

    ``∂_0`` sends every vertex to the empty face.  Omitting the ``i``-th
    vertex carries sign ``(-1)^i``.
    """
    if d < 0:
        raise ValueError("d must be >= 0")
    lower = k.faces(d - 1)
    upper = k.faces(d)
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for f in upper:
        col = {}
        for i in range(len(f)):
            col[index[f[:i] + f[i + 1:]]] = -1 if i & 1 else 1
        cols.append(col)
    return IntMatrix(len(lower), len(upper), cols)


def _eliminate_units(columns: list, nrows: int) -> tuple[int, list]:
    """Sparse elimination on ±1 pivots; consumes ``columns``.

    Returns the number of unit pivots and the surviving nonzero columns.
    """
    rows: dict[int, set] = defaultdict(set)
    for j, c in enumerate(columns):
        for r in c:
            rows[r].add(j)
    heap = [(len(c), j) for j, c in enumerate(columns) if c]
    heapq.heapify(heap)
    deferred = set()
    rank = 0
    while heap:
        length, j = heapq.heappop(heap)
        c = columns[j]
        if c is None or not c:
            continue
        if len(c) != length:
            heapq.heappush(heap, (len(c), j))
            continue
        pivot, best = None, 0
        for r, v in c.items():
            if v == 1 or v == -1:
                cnt = len(rows[r])
                if pivot is None or cnt < best:
                    pivot, best = r, cnt
                    if cnt == 1:
                        break
        if pivot is None:
            deferred.add(j)
            continue
        deferred.discard(j)
        pv = c[pivot]
        for j2 in rows[pivot]:
            if j2 == j:
                continue
            c2 = columns[j2]
            f = c2[pivot] * pv
            for r, v in c.items():
                nv = c2.get(r, 0) - f * v
                if nv:
                    if r not in c2:
                        rows[r].add(j2)
                    c2[r] = nv
                else:
                    del c2[r]
                    if r != pivot:
                        rows[r].discard(j2)
            heapq.heappush(heap, (len(c2), j2))
        for r in c:
            if r != pivot:
                rows[r].discard(j)
        del rows[pivot]
        columns[j] = None
        rank += 1
    rest = [columns[j] for j in sorted(deferred) if columns[j]]
    return rank, rest


def _dense_snf_factors(a: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix, ascending."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    out = []
    t = 0
    while t < m and t < n:
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    ri, rt = a[i], a[t]
                    for j in range(t, n):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if clean:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rt, rb = a[t], a[bad]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # restart with the smallest remainder in the pivot row/column as pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        out.append(abs(a[t][t]))
        t += 1
    # chain already holds; normalize defensively
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            g = gcd(out[i], out[j])
            out[i], out[j] = g, out[i] * out[j] // g
    return out


def _rank_and_torsion(mat: IntMatrix) -> tuple[int, list[int]]:
    cols = [dict(c) for c in mat.columns]
    units, rest = _eliminate_units(cols, mat.rows)
    if not rest:
        return units, []
    used = sorted({r for c in rest for r in c})
    pos = {r: i for i, r in enumerate(used)}
    dense = [[0] * len(rest) for _ in used]
    for j, c in enumerate(rest):
        for r, v in c.items():
            dense[pos[r]][j] = v
    factors = _dense_snf_factors(dense)
    return units + len(factors), [f for f in factors if f > 1]


def smith_normal_form(mat: IntMatrix) -> SNF:
    """Invariant factors ``d_1 | d_2 | ...`` (units included) and rank."""
    rank, torsion = _rank_and_torsion(mat)
    factors = (1,) * (rank - len(torsion)) + tuple(torsion)
    if any(b % a for a, b in zip(factors, factors[1:])):
        raise AssertionError(f"invariant factors {factors} break the divisibility chain")
    return SNF(factors, rank)


# --- homology profiles ------------------------------------------------------


_DEG_RE = re.compile(r"^H~(\(-?\d+\)|-?\d+):\s*(.*)$")


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology by degree: ``((degree, free_rank, torsion), ...)``.

    Degrees whose group is trivial are omitted, so the zero profile (what a
    contractible complex has) is ``HomologyProfile(())``.
    """

    groups: tuple = ()

    @classmethod
    def from_groups(cls, groups: dict) -> "HomologyProfile":
        items = []
        for d in sorted(groups):
            rank, tors = groups[d]
            tors = tuple(sorted(t for t in tors if t > 1))
            for a, b in zip(tors, tors[1:]):
                if b % a:
                    raise ValueError(f"torsion {tors} violates the divisibility chain")
            if rank < 0:
                raise ValueError("negative rank")
            if rank or tors:
                items.append((d, rank, tors))
        return cls(tuple(items))

    def as_dict(self) -> dict:
        return {d: (r, t) for d, r, t in self.groups}

    def rank(self, d: int) -> int:
        return self.as_dict().get(d, (0, ()))[0]

    def torsion(self, d: int) -> tuple:
        return self.as_dict().get(d, (0, ()))[1]

    @property
    def is_zero(self) -> bool:
        return not self.groups

    @property
    def has_torsion(self) -> bool:
        return any(t for _, _, t in self.groups)

    def euler(self) -> int:
        """Alternating sum of free ranks (the reduced Euler characteristic)."""
        return sum((-1) ** (d % 2) * r for d, r, _ in self.groups)

    def to_string(self, ascii: bool = False) -> str:
        if not self.groups:
            return "0"
        plus = " + " if ascii else " ⊕ "
        parts = []
        for d, r, tors in self.groups:
            terms = []
            if r == 1:
                terms.append("Z")
            elif r > 1:
                terms.append(f"Z^{r}")
            terms += [f"Z/{t}" for t in tors]
            deg = f"({d})" if d < 0 else str(d)
            parts.append(f"H~{deg}: " + plus.join(terms))
        return "; ".join(parts)

    __str__ = to_string

    @classmethod
    def from_string(cls, text: str) -> "HomologyProfile":
        text = text.strip()
        if text == "0":
            return cls(())
        groups = {}
        for chunk in text.split(";"):
            m = _DEG_RE.match(chunk.strip())
            if not m:
                raise ValueError(f"bad profile chunk {chunk!r}")
            d = int(m.group(1).strip("()"))
            rank, tors = 0, []
            for term in re.split(r"\s*[⊕+]\s*", m.group(2).strip()):
                if term == "Z":
                    rank += 1
                elif term.startswith("Z^"):
                    rank += int(term[2:])
                elif term.startswith("Z/"):
                    tors.append(int(term[2:]))
                else:
                    raise ValueError(f"bad group term {term!r}")
            groups[d] = (rank, tors)
        return cls.from_groups(groups)


def reduced_homology(k: SimplicialComplex) -> HomologyProfile:
    """``H̃_d = ker ∂_d / im ∂_{d+1}`` for every degree ``d >= -1``."""
    if k.is_void:
        raise ValueError("reduced homology of the void complex is not defined")
    top = k.dimension
    ranks = {}
    tors = {}
    for d in range(0, top + 1):
        ranks[d], tors[d] = _rank_and_torsion(boundary_matrix(k, d))
    groups = {}
    for d in range(-1, top + 1):
        f = len(k.faces(d))
        free = f - ranks.get(d, 0) - ranks.get(d + 1, 0)
        groups[d] = (free, tors.get(d + 1, []))
    prof = HomologyProfile.from_groups(groups)
    from .complexes import euler_characteristic

    if prof.euler() != euler_characteristic(k):
        raise AssertionError("Euler characteristic disagrees with Betti numbers")
    return prof


def profile_of_sphere_wedge(w) -> HomologyProfile:
    """Homology of a :class:`~mycielski_ic.homotopy.SphereWedge`."""
    return HomologyProfile.from_groups({d: (m, ()) for d, m in w.dims})


def join_profiles(p: HomologyProfile, q: HomologyProfile) -> HomologyProfile:
    """Homology of a join of two torsion-free complexes.

    ``H̃_n(X * Y) = ⊕_{i+j=n-1} H̃_i(X) ⊗ H̃_j(Y)``; with torsion the Tor terms
    would be needed and are not implemented.
    """
    if p.has_torsion or q.has_torsion:
        raise ValueError("join_profiles only handles torsion-free profiles")
    acc: dict[int, int] = defaultdict(int)
    for i, a, _ in p.groups:
        for j, b, _ in q.groups:
            acc[i + j + 1] += a * b
    return HomologyProfile.from_groups({d: (r, ()) for d, r in acc.items()})
