"""Command-line driver: ``myc graph|homology|predict|verify|table``.

Exit codes: 0 all MATCH (or nothing to verify), 1 usage error, 2 a MISMATCH
or TORSION_FOUND verdict, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas as F
from .cache import ProfileCache
from .complexes import DEFAULT_MAX_FACES, FaceBudgetExceeded
from .graphs import (
    EdgeListError,
    canonical_hash,
    format_edge_list,
    iterated_mycielskian,
    kronecker_cover,
    read_edge_list,
)
from .homology import profile_of_sphere_wedge
from .homotopy import HomotopyError, SphereWedge, format_expr, normalize, parse_expr, symbolic_form
from .verify import (
    FAMILIES,
    HOMOLOGY_NOTE,
    REPORT_SCHEMA,
    STATS,
    Verdict,
    VerifyOptions,
    build_family,
    compute_homology,
    render_table,
    sweep,
    verify_cover,
    verify_family,
    verify_iterated,
    verify_mycielskian,
    wedge_from_profile,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_RESOURCE = 0, 1, 2, 3


_STR_OR_NULL = {"type": ["string", "null"]}

# JSON Schema for the --json output of each subcommand
JSON_SCHEMAS = {
    "graph": {
        "type": "object",
        "required": ["n", "m", "edges", "graph_hash"],
        "properties": {
            "n": {"type": "integer", "minimum": 0},
            "m": {"type": "integer", "minimum": 0},
            "edges": {"type": "array", "items": {
                "type": "array", "items": {"type": "integer", "minimum": 0},
                "minItems": 2, "maxItems": 2}},
            "graph_hash": {"type": "string"},
        },
        "additionalProperties": False,
    },
    "homology": {
        "type": "object",
        "required": ["graph_hash", "n_vertices", "n_edges", "fold_removed", "profile",
                     "groups", "sphere_wedge"],
        "properties": {
            "graph_hash": {"type": "string"},
            "n_vertices": {"type": "integer", "minimum": 0},
            "n_edges": {"type": "integer", "minimum": 0},
            "fold_removed": {"type": "integer", "minimum": 0},
            "profile": {"type": "string"},
            "groups": {"type": "array", "items": {
                "type": "object",
                "required": ["degree", "rank", "torsion"],
                "properties": {
                    "degree": {"type": "integer", "minimum": -1},
                    "rank": {"type": "integer", "minimum": 0},
                    "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
                },
            }},
            "sphere_wedge": _STR_OR_NULL,
        },
        "additionalProperties": False,
    },
    "predict": {
        "type": "object",
        "required": ["formula", "params", "expression", "symbolic", "wedge", "profile"],
        "properties": {
            "formula": {"enum": [f.value for f in F.FormulaId]},
            "params": {"type": "object", "additionalProperties": {"type": "integer"}},
            "expression": _STR_OR_NULL,
            "symbolic": _STR_OR_NULL,
            "wedge": _STR_OR_NULL,
            "profile": _STR_OR_NULL,
        },
        "additionalProperties": False,
    },
    "verify": REPORT_SCHEMA,
    "table": {"type": "array", "items": REPORT_SCHEMA},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def parse_range(text: str) -> range:
    """``"a..b"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}; expected a..b") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _add_graph_args(p, family_positional=False):
    if family_positional:
        p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int, help="apply the l-Mycielskian")
    p.add_argument("--r", type=int, default=1, help="iterate the Mycielskian r times")
    p.add_argument("--cover", action="store_true", help="take the Kronecker double cover last")


def _add_output_args(p):
    p.add_argument("--json", action="store_true")
    p.add_argument("--ascii", action="store_true", help="ASCII-only sphere notation")


def _add_compute_args(p):
    p.add_argument("--no-fold", action="store_true", help="skip dominated-vertex folding")
    p.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES)
    p.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="myc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("graph", help="emit an edge list")
    _add_graph_args(p, family_positional=True)
    p.add_argument("--out")
    _add_output_args(p)

    p = sub.add_parser("homology", help="reduced homology of I(G)")
    p.add_argument("file", nargs="?", help="edge-list file")
    p.add_argument("--family", choices=FAMILIES)
    _add_graph_args(p)
    _add_compute_args(p)
    _add_output_args(p)

    p = sub.add_parser("predict", help="evaluate a formula symbolically")
    p.add_argument("--formula", required=True, choices=[f.value for f in F.FormulaId])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k", type=int, help="k for the mu_{3k}^2 expansion")
    p.add_argument("--bind", nargs="*", default=[], metavar="ATOM=EXPR")
    p.add_argument("--variant", choices=[F.PRINTED, F.CORRECTED], default=F.PRINTED)
    p.add_argument("--reading", choices=F.READINGS, default=F.READING_KF_PLUS_1)
    _add_output_args(p)

    p = sub.add_parser("verify", help="brute force vs formula")
    p.add_argument("--family", required=True, choices=FAMILIES + ("file",))
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--cover", action="store_true", help="check the cover formula instead")
    p.add_argument("--variant", choices=[F.PRINTED, F.CORRECTED], default=F.PRINTED)
    _add_compute_args(p)
    _add_output_args(p)

    p = sub.add_parser("table", help="sweep a family and tabulate verdicts")
    p.add_argument("--name", required=True, choices=["cn", "kn", "pn", "knkm"])
    p.add_argument("--n-range", type=parse_range, required=True)
    p.add_argument("--l-range", type=parse_range, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--workers", type=int, default=1)
    _add_compute_args(p)
    _add_output_args(p)
    return ap


def _graph_from_args(args):
    family = getattr(args, "family", None)
    if getattr(args, "file", None):
        g = read_edge_list(args.file)
        family = "file"
    elif family:
        if args.n is None:
            raise UsageError("--n is required for families")
        if family in ("knkm", "grid") and args.m is None:
            raise UsageError(f"--m is required for {family}")
        g = build_family(family, args.n, args.m)
    else:
        raise UsageError("give an edge-list file or --family")
    if args.l is not None:
        g = iterated_mycielskian(g, args.l, args.r)
    if args.cover:
        g = kronecker_cover(g)
    return g


def _options(args) -> VerifyOptions:
    cache = ProfileCache.from_env()
    return VerifyOptions(
        fold=not args.no_fold,
        max_faces=args.max_faces,
        cache_dir=str(cache.directory) if cache else None,
        variant=getattr(args, "variant", F.PRINTED),
    )


def _emit(obj, args, text):
    if args.json:
        print(json.dumps(obj, ensure_ascii=args.ascii, indent=2, sort_keys=True))
    else:
        print(text)


def _verbose(args):
    if getattr(args, "verbose", False):
        print(f"homology computations: {STATS['homology_computations']}; "
              f"cache hits: {STATS['cache_hits']}", file=sys.stderr)


def cmd_graph(args):
    g = _graph_from_args(args)
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    obj = {"n": g.n, "m": g.num_edges, "edges": [list(e) for e in g.sorted_edges()],
           "graph_hash": canonical_hash(g)}
    if args.json:
        _emit(obj, args, "")
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_homology(args):
    g = _graph_from_args(args)
    opts = _options(args)
    try:
        prof, removed = compute_homology(g, opts)
    except FaceBudgetExceeded as exc:
        print(f"myc: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    reading = None if prof.has_torsion else wedge_from_profile(prof).to_string(args.ascii)
    obj = {
        "graph_hash": canonical_hash(g),
        "n_vertices": g.n,
        "n_edges": g.num_edges,
        "fold_removed": removed,
        "profile": prof.to_string(),
        "groups": [{"degree": d, "rank": r, "torsion": list(t)} for d, r, t in prof.groups],
        "sphere_wedge": reading,
    }
    text = prof.to_string(args.ascii)
    if reading is not None:
        text += f"\nhomology consistent with: {reading}"
    _emit(obj, args, text)
    _verbose(args)
    return EXIT_OK


def _bindings(items) -> dict[str, SphereWedge]:
    out = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"binding {item!r} must look like ATOM=EXPR")
        name, text = item.split("=", 1)
        out[name.strip()] = normalize(parse_expr(text))
    return out


def _formula_expr(args):
    fid = F.FormulaId(args.formula)
    if fid is F.FormulaId.MAIN_MU:
        return F.mycielskian_expr(args.l)
    if fid is F.FormulaId.COVER_MU:
        return F.cover_mycielskian_expr(args.l, args.variant)
    if fid is F.FormulaId.ITER:
        if args.k is not None:
            return F.mu3k_squared_expr(args.k)
        return F.iterated_expr(args.l, args.r, args.variant)
    if fid is F.FormulaId.ITER_COVER:
        return F.iterated_cover_closed_expr(args.l, args.r, args.variant)
    if fid is F.FormulaId.ITER_CLOSED:
        return F.iterated_closed_expr(args.l, args.r, args.reading)
    if fid is F.FormulaId.MU01_ITER:
        return F.mu01_iter_expr(args.l, args.r)
    if fid is F.FormulaId.BIPARTITE:
        return F.bipartite_expr(args.l)
    return None


def _family_formula(args) -> SphereWedge:
    fid = F.FormulaId(args.formula)
    if args.n is None:
        raise UsageError("--n is required for family formulas")
    if fid is F.FormulaId.KN:
        return F.kn_formula(args.n, args.l)
    if fid is F.FormulaId.KNKM:
        if args.m is None:
            raise UsageError("--m is required for knkm")
        return F.knkm_formula(args.n, args.m, args.l)
    if fid is F.FormulaId.CN_TABLE:
        return F.cn_formula(args.n, args.l)
    return F.pn_formula(args.n, args.l)


def cmd_predict(args):
    expr = _formula_expr(args)
    obj = {"formula": args.formula, "params": {"l": args.l, "r": args.r}}
    if args.n is not None:
        obj["params"]["n"] = args.n
    if args.m is not None:
        obj["params"]["m"] = args.m
    if args.k is not None:
        obj["params"]["k"] = args.k
    if expr is None:
        w = _family_formula(args)
        obj.update(expression=None, symbolic=None)
    else:
        obj["expression"] = format_expr(expr)
        obj["symbolic"] = str(symbolic_form(expr))
        binds = _bindings(args.bind)
        w = normalize(expr, binds) if binds or not _needs_atoms(expr) else None
    text = w.to_string(args.ascii) if w is not None else f"{obj['expression']}\n= {obj['symbolic']}"
    obj["wedge"] = w.to_string(args.ascii) if w is not None else None
    obj["profile"] = profile_of_sphere_wedge(w).to_string() if w is not None else None
    _emit(obj, args, text)
    return EXIT_OK


def _needs_atoms(expr) -> bool:
    from .homotopy import atoms

    return bool(atoms(expr))


def _verdict_exit(verdicts) -> int:
    vs = set(verdicts)
    if Verdict.RESOURCE_EXCEEDED in vs:
        return EXIT_RESOURCE
    if vs & {Verdict.MISMATCH, Verdict.TORSION_FOUND}:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args):
    opts = _options(args)
    if args.family == "file":
        if not args.file:
            raise UsageError("--family file needs --file")
        g = read_edge_list(args.file)
        if args.cover:
            rep = verify_cover(g, args.l, opts, "file")
        elif args.r is not None:
            rep = verify_iterated(g, args.l, args.r, opts, "file")
        else:
            rep = verify_mycielskian(g, args.l, opts, "file")
    else:
        if args.n is None:
            raise UsageError("--n is required")
        if args.family in ("knkm", "grid") and args.m is None:
            raise UsageError(f"--m is required for {args.family}")
        rep = verify_family(args.family, args.l, n=args.n, m=args.m, r=args.r,
                            cover=args.cover, opts=opts)
    pred = rep.predicted.to_string(args.ascii) if rep.predicted is not None else "-"
    comp = rep.computed.to_string(args.ascii) if rep.computed is not None else "-"
    lines = [f"{rep.verdict.value}  predicted {pred}  computed {comp}"]
    cf = rep.extra.get("closed_form")
    if cf and "formula" in cf:
        status = "agrees" if cf["agrees"] else "disagrees"
        lines.append(f"closed form ({cf['formula']}): {cf['wedge_ascii' if args.ascii else 'wedge']} {status}")
        if cf["expected_discrepancy"] and not cf["agrees"]:
            lines.append(f"  known discrepancy: {cf['expected_discrepancy']}")
    lines.append(f"({HOMOLOGY_NOTE})")
    _emit(rep.to_json(), args, "\n".join(lines))
    _verbose(args)
    return _verdict_exit([rep.verdict])


def cmd_table(args):
    opts = _options(args)
    family = {"cn": "cycle", "kn": "complete", "pn": "path", "knkm": "knkm"}[args.name]
    grid_ = {"n": args.n_range, "l": args.l_range}
    if family == "knkm":
        if args.m is None:
            raise UsageError("--m is required for knkm")
        grid_["m"] = [args.m]
    res = sweep([family], grid_, opts, workers=args.workers)
    if args.json:
        _emit(res.to_json(), args, "")
    else:
        print(render_table(res.reports, args.ascii))
        print("summary: " + ", ".join(f"{k}={v}" for k, v in res.summary().items()))
    _verbose(args)
    return _verdict_exit(r.verdict for r in res.reports)


COMMANDS = {
    "graph": cmd_graph,
    "homology": cmd_homology,
    "predict": cmd_predict,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (UsageError, EdgeListError, HomotopyError, ValueError) as exc:
        print(f"myc {args.cmd}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
