"""Symbolic wedge / join / suspension expressions and their sphere-wedge values.

Over wedges of spheres the three operations form a commutative semiring:
wedge adds, join multiplies, ``{∅} = S^{-1}`` is the unit and a contractible
space is zero.  Suspension is join with ``S^0``.  Writing ``x`` for one
suspension, ``S^d`` is the monomial ``x^{d+1}`` and a wedge of spheres is a
polynomial in ``x`` with nonnegative coefficients.  :func:`normalize`
evaluates in that semiring; :func:`symbolic_form` keeps atoms as variables.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Union


class HomotopyError(ValueError):
    """Base class for expression errors."""


class UnboundAtomError(HomotopyError):
    pass


class EmptyWedgeError(HomotopyError):
    """``S^{-1}`` (the complex ``{∅}``) was wedged with something else."""


class ExprSyntaxError(HomotopyError):
    def __init__(self, msg: str, pos: int, text: str):
        super().__init__(f"{msg} at position {pos}: {text[:pos]}⟨here⟩{text[pos:]}")
        self.pos = pos


# --- normal form ------------------------------------------------------------


@dataclass(frozen=True)
class SphereWedge:
    """A finite wedge of spheres, or the contractible space.

    ``dims`` is a sorted tuple of ``(dimension, multiplicity)``; the empty
    tuple means contractible.  ``S^{-1}`` may only occur alone, once.
    """

    dims: tuple = ()

    def __post_init__(self):
        for d, m in self.dims:
            if d < -1 or m < 1:
                raise ValueError(f"bad sphere entry ({d}, {m})")
        if any(d == -1 for d, _ in self.dims) and self.dims != ((-1, 1),):
            raise EmptyWedgeError("S^-1 can only appear alone")

    @classmethod
    def of(cls, spheres: Mapping[int, int] | None = None) -> "SphereWedge":
        spheres = spheres or {}
        return cls(tuple(sorted((d, m) for d, m in spheres.items() if m)))

    @classmethod
    def contractible(cls) -> "SphereWedge":
        return cls(())

    @classmethod
    def sphere(cls, d: int, count: int = 1) -> "SphereWedge":
        return cls.of({d: count})

    @property
    def is_contractible(self) -> bool:
        return not self.dims

    @property
    def is_empty_complex(self) -> bool:
        return self.dims == ((-1, 1),)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def count(self) -> int:
        return sum(m for _, m in self.dims)

    def wedge(self, other: "SphereWedge") -> "SphereWedge":
        if self.is_contractible:
            return other
        if other.is_contractible:
            return self
        if self.is_empty_complex or other.is_empty_complex:
            raise EmptyWedgeError("cannot wedge S^-1 with a nonempty space")
        acc = Counter(self.as_dict())
        acc.update(other.as_dict())
        return SphereWedge.of(acc)

    def join(self, other: "SphereWedge") -> "SphereWedge":
        acc: Counter = Counter()
        for a, m in self.dims:
            for b, k in other.dims:
                acc[a + b + 1] += m * k
        return SphereWedge.of(acc)

    def suspend(self, r: int = 1) -> "SphereWedge":
        return SphereWedge.of({d + r: m for d, m in self.dims})

    def to_string(self, ascii: bool = False) -> str:
        if self.is_contractible:
            return "contractible"
        vee = " v " if ascii else " ∨ "
        parts = []
        for d, m in self.dims:
            s = f"S({d})" if ascii else f"S^{d}"
            if m <= 4:
                parts += [s] * m
            else:
                parts.append(f"v_{m} {s}" if ascii else f"⋁_{m} {s}")
        return vee.join(parts)

    __str__ = to_string


# --- expression trees -------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Sphere:
    dim: int

    def __post_init__(self):
        if self.dim < -1:
            raise ValueError("sphere dimension must be >= -1")


@dataclass(frozen=True)
class Contractible:
    pass


@dataclass(frozen=True)
class Wedge:
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a wedge needs at least one part")


@dataclass(frozen=True)
class Join:
    parts: tuple


@dataclass(frozen=True)
class Susp:
    child: "Expr"
    times: int = 1

    def __post_init__(self):
        if self.times < 1:
            raise ValueError("suspension count must be >= 1")


Expr = Union[Atom, Sphere, Contractible, Wedge, Join, Susp]

PT = Contractible()
EMPTY = Sphere(-1)


def atom(name: str) -> Atom:
    return Atom(name)


def sphere(d: int) -> Sphere:
    return Sphere(d)


def wedge(*parts: Expr) -> Expr:
    """Wedge with nested wedges flattened; a single part is returned as is."""
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, Wedge) else (p,))
    if len(flat) == 1:
        return flat[0]
    return Wedge(tuple(flat))


def join(*parts: Expr) -> Expr:
    """Join with nested joins flattened and ``{∅}`` factors dropped."""
    flat = []
    for p in parts:
        for q in p.parts if isinstance(p, Join) else (p,):
            if q != EMPTY:
                flat.append(q)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat[0]
    return Join(tuple(flat))


def suspend(e: Expr, r: int = 1) -> Expr:
    """``Σ^r e``; merges nested suspensions and shifts bare spheres."""
    if r < 1:
        raise ValueError("suspension count must be >= 1")
    if isinstance(e, Susp):
        return Susp(e.child, e.times + r)
    if isinstance(e, Sphere):
        return Sphere(e.dim + r)
    return Susp(e, r)


def join_power(e: Expr, k: int) -> Expr:
    if k < 0:
        raise ValueError("join power must be >= 0")
    return join(*([e] * k))


def substitute(e: Expr, mapping: Mapping[str, Expr]) -> Expr:
    """Replace atoms, rebuilding with the simplifying constructors."""
    if isinstance(e, Atom):
        return mapping.get(e.name, e)
    if isinstance(e, (Sphere, Contractible)):
        return e
    if isinstance(e, Wedge):
        return wedge(*(substitute(p, mapping) for p in e.parts))
    if isinstance(e, Join):
        return join(*(substitute(p, mapping) for p in e.parts))
    if isinstance(e, Susp):
        return suspend(substitute(e.child, mapping), e.times)
    raise TypeError(f"not an expression: {e!r}")


def atoms(e: Expr) -> set[str]:
    if isinstance(e, Atom):
        return {e.name}
    if isinstance(e, (Wedge, Join)):
        return set().union(*(atoms(p) for p in e.parts))
    if isinstance(e, Susp):
        return atoms(e.child)
    return set()


def normalize(e: Expr, bindings: Mapping[str, SphereWedge] | None = None) -> SphereWedge:
    """Evaluate ``e`` to a :class:`SphereWedge`.

    Raises :class:`UnboundAtomError` for a missing binding and
    :class:`EmptyWedgeError` when ``{∅}`` shows up inside a wedge of two or
    more parts.
    """
    bindings = bindings or {}

    def go(e):
        if isinstance(e, Atom):
            try:
                return bindings[e.name]
            except KeyError:
                raise UnboundAtomError(f"atom {e.name!r} has no binding") from None
        if isinstance(e, Sphere):
            return SphereWedge.sphere(e.dim)
        if isinstance(e, Contractible):
            return SphereWedge.contractible()
        if isinstance(e, Wedge):
            vals = [go(p) for p in e.parts]
            if len(vals) > 1 and any(v.is_empty_complex for v in vals):
                raise EmptyWedgeError("S^-1 inside a wedge of several parts")
            out = vals[0]
            for v in vals[1:]:
                out = out.wedge(v)
            return out
        if isinstance(e, Join):
            out = SphereWedge.sphere(-1)
            for p in e.parts:
                out = out.join(go(p))
            return out
        if isinstance(e, Susp):
            return go(e.child).suspend(e.times)
        raise TypeError(f"not an expression: {e!r}")

    return go(e)


def expr_homology(e: Expr, bindings: Mapping[str, SphereWedge] | None = None):
    from .homology import profile_of_sphere_wedge

    return profile_of_sphere_wedge(normalize(e, bindings))


# --- symbolic normal form ---------------------------------------------------


@dataclass(frozen=True)
class SymbolicForm:
    """Wedge of monomials ``Σ^s (atom_1^{*e_1} * ...)`` with multiplicities.

    ``terms`` maps ``(s, ((atom, exponent), ...))`` to a multiplicity.  Two
    expressions that agree under every sphere-wedge binding have equal forms.
    """

    terms: tuple

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "pt"
        out = []
        for (s, mono), m in self.terms:
            body = "*".join(a if k == 1 else f"{a}^{k}" for a, k in mono) or "empty"
            term = f"susp({body},{s})" if s else body
            out.append(term if m == 1 else f"{m}x{term}")
        return " v ".join(out)


def _poly_mul(p: Counter, q: Counter) -> Counter:
    out: Counter = Counter()
    for (s1, m1), c1 in p.items():
        for (s2, m2), c2 in q.items():
            exps = Counter(dict(m1))
            exps.update(dict(m2))
            out[(s1 + s2, tuple(sorted(exps.items())))] += c1 * c2
    return out


def symbolic_form(e: Expr) -> SymbolicForm:
    one = (0, ())

    def go(e) -> Counter:
        if isinstance(e, Atom):
            return Counter({(0, ((e.name, 1),)): 1})
        if isinstance(e, Sphere):
            return Counter({(e.dim + 1, ()): 1})
        if isinstance(e, Contractible):
            return Counter()
        if isinstance(e, Wedge):
            vals = [go(p) for p in e.parts]
            if len(vals) > 1 and any(v == Counter({one: 1}) for v in vals):
                raise EmptyWedgeError("S^-1 inside a wedge of several parts")
            out: Counter = Counter()
            for v in vals:
                out.update(v)
            return out
        if isinstance(e, Join):
            out = Counter({one: 1})
            for p in e.parts:
                out = _poly_mul(out, go(p))
            return out
        if isinstance(e, Susp):
            return Counter({(s + e.times, m): c for (s, m), c in go(e.child).items()})
        raise TypeError(f"not an expression: {e!r}")

    return SymbolicForm(tuple(sorted(go(e).items())))


# --- text syntax ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_expr(text: str) -> Expr:
    """Parse ``S(d)``, ``pt``, ``empty``, atoms, ``wedge(...)``,
    ``join(...)`` and ``susp(e, r)``."""
    toks = []
    for m in _TOKEN.finditer(text):
        if m.group(0).strip() == "":
            continue
        pos = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), pos))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), pos))
        else:
            toks.append(("sym", m.group(3), pos))
    i = 0

    def peek():
        return toks[i] if i < len(toks) else ("eof", None, len(text))

    def expect(kind, value=None):
        nonlocal i
        t = peek()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value if value is not None else kind
            raise ExprSyntaxError(f"expected {want!r}", t[2], text)
        i += 1
        return t

    def args():
        expect("sym", "(")
        out = []
        if peek()[:2] == ("sym", ")"):
            expect("sym", ")")
            return out
        while True:
            out.append(expr())
            t = peek()
            if t[:2] == ("sym", ","):
                expect("sym", ",")
                continue
            expect("sym", ")")
            return out

    def expr():
        nonlocal i
        kind, val, pos = peek()
        if kind != "name":
            raise ExprSyntaxError("expected an expression", pos, text)
        i += 1
        if val == "S":
            expect("sym", "(")
            d = expect("int")[1]
            expect("sym", ")")
            if d < -1:
                raise ExprSyntaxError("sphere dimension must be >= -1", pos, text)
            return Sphere(d)
        if val == "pt":
            return PT
        if val == "empty":
            return EMPTY
        if val == "wedge":
            parts = args()
            if not parts:
                raise ExprSyntaxError("wedge needs at least one part", pos, text)
            return Wedge(tuple(parts))
        if val == "join":
            return Join(tuple(args()))
        if val == "susp":
            expect("sym", "(")
            child = expr()
            r = 1
            if peek()[:2] == ("sym", ","):
                expect("sym", ",")
                r = expect("int")[1]
            expect("sym", ")")
            if r < 1:
                raise ExprSyntaxError("suspension count must be >= 1", pos, text)
            return Susp(child, r)
        return Atom(val)

    e = expr()
    if i != len(toks):
        raise ExprSyntaxError("unexpected trailing input", toks[i][2], text)
    return e


def format_expr(e: Expr) -> str:
    """Inverse of :func:`parse_expr`."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Sphere):
        return "empty" if e.dim == -1 else f"S({e.dim})"
    if isinstance(e, Contractible):
        return "pt"
    if isinstance(e, Wedge):
        return "wedge(" + ",".join(format_expr(p) for p in e.parts) + ")"
    if isinstance(e, Join):
        return "join(" + ",".join(format_expr(p) for p in e.parts) + ")"
    if isinstance(e, Susp):
        return f"susp({format_expr(e.child)},{e.times})"
    raise TypeError(f"not an expression: {e!r}")
