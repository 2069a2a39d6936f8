"""Check formula predictions against brute-force homology.

Everything here is compared at the level of reduced integral homology: a
homotopy equivalence forces equal homology, the converse is not checked.
"""

from __future__ import annotations

import enum
import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from . import formulas as F
from .cache import ProfileCache
from .complexes import DEFAULT_MAX_FACES, FaceBudgetExceeded, fold_reduce, independence_complex
from .graphs import (
    Graph,
    canonical_hash,
    categorical_product,
    complete,
    cycle,
    grid,
    is_bipartite,
    iterated_mycielskian,
    kronecker_cover,
    mycielskian,
    path,
)
from .homology import HomologyProfile, profile_of_sphere_wedge, reduced_homology
from .homotopy import SphereWedge, normalize

HOMOLOGY_NOTE = (
    "verified at the level of reduced integral homology; homotopy equivalence "
    "implies equal homology, the converse is not checked"
)

# process-local counters; the CLI prints them with --verbose
STATS: Counter = Counter()


class Verdict(str, enum.Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    TORSION_FOUND = "TORSION_FOUND"
    RESOURCE_EXCEEDED = "RESOURCE_EXCEEDED"


class TorsionFound(ValueError):
    def __init__(self, profile: HomologyProfile):
        super().__init__(f"torsion in homology: {profile}")
        self.profile = profile


@dataclass(frozen=True)
class VerifyOptions:
    fold: bool = True
    max_faces: int = DEFAULT_MAX_FACES
    cache_dir: str | None = None
    variant: str = F.PRINTED

    @property
    def cache(self) -> ProfileCache | None:
        return ProfileCache(self.cache_dir) if self.cache_dir else None


@dataclass
class VerificationReport:
    family: str
    params: dict
    n_vertices: int
    n_edges: int
    graph_hash: str
    predicted: SphereWedge | None
    computed: HomologyProfile | None
    verdict: Verdict
    fold_removed: int = 0
    millis: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "instance": {
                "family": self.family,
                "params": dict(self.params),
                "n_vertices": self.n_vertices,
                "n_edges": self.n_edges,
                "graph_hash": self.graph_hash,
            },
            "predicted": None if self.predicted is None
            else profile_of_sphere_wedge(self.predicted).to_string(),
            "computed": None if self.computed is None else self.computed.to_string(),
            "verdict": self.verdict.value,
            "fold_removed": self.fold_removed,
            "millis": self.millis,
        }
        if self.extra:
            out["extra"] = self.extra
        return out


REPORT_SCHEMA = {
    "type": "object",
    "required": ["instance", "predicted", "computed", "verdict", "fold_removed", "millis"],
    "properties": {
        "instance": {
            "type": "object",
            "required": ["family", "params", "n_vertices", "n_edges", "graph_hash"],
            "properties": {
                "family": {"type": "string"},
                "params": {"type": "object", "additionalProperties": {"type": "integer"}},
                "n_vertices": {"type": "integer", "minimum": 0},
                "n_edges": {"type": "integer", "minimum": 0},
                "graph_hash": {"type": "string"},
            },
        },
        "predicted": {"type": ["string", "null"]},
        "computed": {"type": ["string", "null"]},
        "verdict": {"enum": [v.value for v in Verdict]},
        "fold_removed": {"type": "integer", "minimum": 0},
        "millis": {"type": "integer", "minimum": 0},
        "extra": {"type": "object"},
    },
}


# --- brute-force side -------------------------------------------------------


def compute_homology(g: Graph, opts: VerifyOptions = VerifyOptions()) -> tuple[HomologyProfile, int]:
    """``H̃(I(g))`` plus the number of vertices removed by folding."""
    cache = opts.cache
    tag = "homology-fold" if opts.fold else "homology-nofold"
    key = canonical_hash(g)
    removed = 0
    work = g
    if opts.fold:
        work, log = fold_reduce(g)
        removed = len(log)
    if cache is not None:
        hit = cache.get(key, tag)
        if hit is not None:
            STATS["cache_hits"] += 1
            return hit, removed
    STATS["homology_computations"] += 1
    prof = reduced_homology(independence_complex(work, opts.max_faces))
    if cache is not None:
        cache.put(key, tag, prof)
    return prof, removed


def wedge_from_profile(p: HomologyProfile) -> SphereWedge:
    """Read a torsion-free profile as a wedge of spheres."""
    if p.has_torsion:
        raise TorsionFound(p)
    return SphereWedge.of({d: r for d, r, _ in p.groups})


def bind_atoms(g: Graph, opts: VerifyOptions = VerifyOptions()) -> dict[str, SphereWedge]:
    """Sphere-wedge values of ``A = I(G)`` and ``B = I(G x P_2)``."""
    # read A before building the (twice as large) cover so torsion fails fast
    a = wedge_from_profile(compute_homology(g, opts)[0])
    b = wedge_from_profile(compute_homology(kronecker_cover(g), opts)[0])
    return {"A": a, "B": b}


# --- families ---------------------------------------------------------------


def build_family(family: str, n: int | None = None, m: int | None = None) -> Graph:
    if family == "path":
        return path(n)
    if family == "cycle":
        return cycle(n)
    if family == "complete":
        return complete(n)
    if family == "knkm":
        return categorical_product(complete(n), complete(m))
    if family == "grid":
        return grid(n, m)
    raise ValueError(f"unknown family {family!r}")


FAMILIES = ("path", "cycle", "complete", "knkm", "grid")


def family_closed_form(family: str, n, m, l: int, atoms: Mapping | None = None):
    """``(FormulaId, SphereWedge)`` for the family closed form, or ``None``."""
    if family == "complete" and n >= 2:
        return F.FormulaId.KN, F.kn_formula(n, l)
    if family == "knkm" and n >= 2 and m >= 2:
        return F.FormulaId.KNKM, F.knkm_formula(n, m, l)
    if family == "cycle" and l >= 1:
        return F.FormulaId.CN_TABLE, F.cn_formula(n, l)
    if family == "path":
        return F.FormulaId.PN, F.pn_formula(n, l)
    if family == "grid" and atoms is not None:
        return F.FormulaId.BIPARTITE, normalize(F.bipartite_expr(l), {"A": atoms["A"]})
    return None


def _closed_form_entry(fid, wedge, computed, family, params) -> dict:
    agrees = computed is not None and profile_of_sphere_wedge(wedge) == computed
    disc = F.expected_discrepancy(fid, **params)
    return {
        "formula": fid.value,
        "predicted": profile_of_sphere_wedge(wedge).to_string(),
        "wedge": wedge.to_string(),
        "wedge_ascii": wedge.to_string(ascii=True),
        "agrees": agrees,
        "expected_discrepancy": disc.note if disc else None,
    }


# --- verification loops -----------------------------------------------------


def _run(target: Graph, base: Graph, build_expr, family, params, opts):
    """Shared loop; returns the report and the atom bindings (or ``None``)."""
    t0 = time.perf_counter()
    rep = VerificationReport(
        family=family,
        params={k: v for k, v in params.items() if v is not None},
        n_vertices=target.n,
        n_edges=target.num_edges,
        graph_hash=canonical_hash(target),
        predicted=None,
        computed=None,
        verdict=Verdict.MATCH,
    )
    atoms = None
    try:
        atoms = bind_atoms(base, opts)
        rep.extra["atoms"] = {k: str(v) for k, v in atoms.items()}
        rep.predicted = build_expr(atoms)
        rep.computed, rep.fold_removed = compute_homology(target, opts)
    except FaceBudgetExceeded as exc:
        rep.verdict = Verdict.RESOURCE_EXCEEDED
        rep.extra["error"] = str(exc)
    except TorsionFound as exc:
        rep.verdict = Verdict.TORSION_FOUND
        rep.extra["error"] = str(exc)
    else:
        if rep.computed.has_torsion:
            rep.verdict = Verdict.TORSION_FOUND
        elif profile_of_sphere_wedge(rep.predicted) == rep.computed:
            rep.verdict = Verdict.MATCH
        else:
            rep.verdict = Verdict.MISMATCH
    rep.millis = int((time.perf_counter() - t0) * 1000)
    return rep, atoms


def verify_mycielskian(g: Graph, l: int, opts: VerifyOptions = VerifyOptions(),
                       family: str = "graph", params: dict | None = None) -> VerificationReport:
    """Brute-force ``H̃(I(mu_l(G)))`` against the main formula."""
    params = dict(params or {}, l=l)
    expr = F.mycielskian_expr(l)
    rep, _ = _run(mycielskian(g, l), g, lambda at: normalize(expr, at), family, params, opts)
    return rep


def verify_cover(g: Graph, l: int, opts: VerifyOptions = VerifyOptions(),
                 family: str = "graph", params: dict | None = None) -> VerificationReport:
    """Brute-force ``H̃(I(mu_l(G) x P_2))`` against the cover formula."""
    params = dict(params or {}, l=l)
    expr = F.cover_mycielskian_expr(l, opts.variant)
    rep, atoms = _run(kronecker_cover(mycielskian(g, l)), g, lambda at: normalize(expr, at),
                      family + "-cover", params, opts)
    if rep.computed is not None:
        disc = F.expected_discrepancy(F.FormulaId.COVER_MU, l=l)
        rep.extra["expected_discrepancy"] = disc.note if disc and opts.variant == F.PRINTED else None
        if opts.variant == F.PRINTED:
            alt = normalize(F.cover_mycielskian_expr(l, F.CORRECTED), atoms)
            rep.extra["corrected"] = {
                "predicted": profile_of_sphere_wedge(alt).to_string(),
                "agrees": profile_of_sphere_wedge(alt) == rep.computed,
            }
    return rep


def verify_iterated(g: Graph, l: int, r: int, opts: VerifyOptions = VerifyOptions(),
                    family: str = "graph", params: dict | None = None) -> VerificationReport:
    """Brute force vs the recursive engine; closed forms recorded in ``extra``."""
    params = dict(params or {}, l=l, r=r)
    expr = F.iterated_expr(l, r, opts.variant)
    rep, atoms = _run(iterated_mycielskian(g, l, r), g, lambda at: normalize(expr, at),
                      family + "-iterated", params, opts)
    if rep.computed is None:
        return rep
    other = F.CORRECTED if opts.variant == F.PRINTED else F.PRINTED
    alt = normalize(F.iterated_expr(l, r, other), atoms)
    rep.extra[f"recursive_{other}"] = {
        "predicted": profile_of_sphere_wedge(alt).to_string(),
        "agrees": profile_of_sphere_wedge(alt) == rep.computed,
    }
    if l % 3:
        closed = {}
        readings = F.READINGS if l % 3 == 1 else F.READINGS[:1]
        for reading in readings:
            w = normalize(F.iterated_closed_expr(l, r, reading), atoms)
            closed[reading] = {
                "predicted": profile_of_sphere_wedge(w).to_string(),
                "agrees": profile_of_sphere_wedge(w) == rep.computed,
            }
        disc = F.expected_discrepancy(F.FormulaId.ITER_CLOSED, l=l, r=r)
        rep.extra["closed_form"] = {
            "readings": closed,
            "expected_discrepancy": disc.note if disc else None,
        }
    return rep


def verify_family(family: str, l: int, n: int | None = None, m: int | None = None,
                  r: int | None = None, cover: bool = False,
                  opts: VerifyOptions = VerifyOptions()) -> VerificationReport:
    """Verify one family instance; the family closed form goes in ``extra``."""
    g = build_family(family, n, m)
    params = {"n": n, "m": m}
    if cover:
        return verify_cover(g, l, opts, family, params)
    if r is not None:
        return verify_iterated(g, l, r, opts, family, params)
    rep = verify_mycielskian(g, l, opts, family, params)
    if family in ("path", "grid") and not is_bipartite(g):
        raise AssertionError("bipartite family expected")
    atoms = None
    if rep.extra.get("atoms"):
        atoms = {"A": wedge_from_profile(compute_homology(g, opts)[0])}
    cf = family_closed_form(family, n, m, l, atoms)
    if cf is not None:
        rep.extra["closed_form"] = _closed_form_entry(cf[0], cf[1], rep.computed, family,
                                                      {"n": n, "m": m, "l": l})
    return rep


# --- sweeps -----------------------------------------------------------------


@dataclass
class SweepResult:
    reports: list

    def summary(self) -> dict:
        c = Counter(r.verdict.value for r in self.reports)
        return {v.value: c.get(v.value, 0) for v in Verdict}

    def to_json(self) -> list:
        return [r.to_json() for r in self.reports]


def _sweep_one(args):
    family, point, cover, opts = args
    return verify_family(family, cover=cover, opts=opts, **point)


def sweep(families: Iterable[str], grid: Mapping[str, Iterable[int]],
          opts: VerifyOptions = VerifyOptions(), cover: bool = False,
          workers: int = 1) -> SweepResult:
    """Verify every family over the product of ``grid`` (keys n, m, l, r).

    Output order is deterministic: families in the given order, then grid
    points in product order with the first key of ``grid`` varying slowest.
    """
    keys = list(grid)
    points = [dict(zip(keys, vals)) for vals in itertools.product(*(list(grid[k]) for k in keys))]
    jobs = [(fam, p, cover, opts) for fam in families for p in points]
    if not jobs:
        return SweepResult([])
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            reports = list(ex.map(_sweep_one, jobs))
    else:
        reports = [_sweep_one(j) for j in jobs]
    return SweepResult(reports)


def render_table(reports: list, ascii: bool = False) -> str:
    """Aligned text table: instance, closed form, brute force, verdict."""
    header = ["family", "n", "m", "l", "r", "table cell", "closed form", "computed",
              "verdict", "closed-form"]
    rows = [header]
    for rep in reports:
        p = rep.params
        cf = rep.extra.get("closed_form", {})
        cell = ""
        if rep.family == "cycle" and p.get("l", 0) >= 1:
            row, col, r, k = F.cn_table_cell(p["n"], p["l"])
            cell = f"{row}|{col} (r={r},k={k})"
        cf_status = ""
        if cf:
            cf_status = "agrees" if cf.get("agrees") else (
                "known discrepancy" if cf.get("expected_discrepancy") else "DISAGREES")
        rows.append([
            rep.family, str(p.get("n", "")), str(p.get("m", "")), str(p.get("l", "")),
            str(p.get("r", "")), cell,
            cf.get("wedge_ascii" if ascii else "wedge", ""),
            rep.computed.to_string(ascii) if rep.computed is not None else "-",
            rep.verdict.value, cf_status,
        ])
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def without_folds(opts: VerifyOptions) -> VerifyOptions:
    return replace(opts, fold=False)
