"""Homotopy-type formulas for independence complexes of Mycielskians.

Expressions are written over two atoms: ``A`` stands for ``I(G)`` and ``B``
for ``I(G x P_2)``.  Closed forms are encoded exactly as stated in the source
literature, including a few statements that brute force contradicts; those
are listed in :data:`DISCREPANCIES` and, where a repaired statement is
supported by brute force, offered behind ``variant="corrected"``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .homotopy import (
    Atom,
    Expr,
    SphereWedge,
    join,
    join_power,
    normalize,
    sphere,
    substitute,
    suspend,
    wedge,
)

A = Atom("A")
B = Atom("B")

PRINTED = "printed"
CORRECTED = "corrected"
_VARIANTS = (PRINTED, CORRECTED)

READING_KF_PLUS_1 = "kf+1"
READING_K_F_PLUS_1 = "k(f+1)"
READINGS = (READING_KF_PLUS_1, READING_K_F_PLUS_1)


class FormulaId(enum.Enum):
    MAIN_MU = "main-mu"
    COVER_MU = "cover-mu"
    ITER = "iter"
    ITER_COVER = "iter-cover"
    ITER_CLOSED = "iter-closed"
    MU01_ITER = "mu01-iter"
    BIPARTITE = "bipartite"
    KN = "kn"
    KNKM = "knkm"
    CN_TABLE = "cn"
    PN = "pn"


def _check_variant(variant):
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")


# --- counting functions -----------------------------------------------------


def f(k: int, r: int) -> int:
    """``sum_{i<r} (2k+1)^i``."""
    if k < 0 or r < 1:
        raise ValueError("f needs k >= 0 and r >= 1")
    return sum((2 * k + 1) ** i for i in range(r))


def g(k: int, r: int) -> int:
    """``sum_{i<r} (2k+2)^i``."""
    if k < 0 or r < 1:
        raise ValueError("g needs k >= 0 and r >= 1")
    return sum((2 * k + 2) ** i for i in range(r))


def f_quotient(k: int, r: int) -> int:
    """``f`` from its case definition: ``r`` if ``k = 0`` else ``((2k+1)^r - 1) / 2k``."""
    if k == 0:
        return r
    num = (2 * k + 1) ** r - 1
    if num % (2 * k):
        raise ArithmeticError("non-integral f")
    return num // (2 * k)


def g_quotient(k: int, r: int) -> int:
    num = (2 * k + 2) ** r - 1
    if num % (2 * k + 1):
        raise ArithmeticError("non-integral g")
    return num // (2 * k + 1)


def identity_f_sum(k: int, r: int) -> bool:
    return f_quotient(k, r) == sum((2 * k + 1) ** i for i in range(r))


def identity_g_sum(k: int, r: int) -> bool:
    return g_quotient(k, r) == sum((2 * k + 2) ** i for i in range(r))


def identity_f_weighted(k: int, r: int) -> bool:
    """``k * sum_{i=1}^{r-1} f(k, i) == (f(k, r) - r) / 2``."""
    lhs = 2 * k * sum(f_quotient(k, i) for i in range(1, r))
    return lhs == f_quotient(k, r) - r


def identity_g_weighted(k: int, r: int) -> bool:
    """``(k + 1) g(k, r) == (g(k, r + 1) - 1) / 2``."""
    return 2 * (k + 1) * g_quotient(k, r) == g_quotient(k, r + 1) - 1


# --- single Mycielskian -----------------------------------------------------


def mycielskian_expr(l: int) -> Expr:
    """``I(mu_l(G))`` in terms of ``A`` and ``B``."""
    if l < 0:
        raise ValueError("l must be >= 0")
    k, case = divmod(l, 3)
    if case == 0:
        return wedge(join(A, join_power(B, k)), suspend(join_power(B, k), 1))
    if case == 1:
        return suspend(join(A, join_power(B, k)), 1)
    return join_power(B, k + 1)


def cover_mycielskian_expr(l: int, variant: str = PRINTED) -> Expr:
    """``I(mu_l(G) x P_2)`` in terms of ``B``.

    With ``variant="corrected"`` the ``l = 3k+2`` case carries one
    suspension instead of two; brute force supports that version (for
    instance ``mu_2(K_2) x P_2`` is the 14-cycle, whose complex is ``S^4``).
    """
    _check_variant(variant)
    if l < 0:
        raise ValueError("l must be >= 0")
    k, case = divmod(l, 3)
    if case == 0:
        return wedge(join_power(B, 2 * k + 1), suspend(join_power(B, 2 * k), 2))
    if case == 1:
        return suspend(join_power(B, 2 * k + 1), 1)
    return suspend(join_power(B, 2 * k + 2), 2 if variant == PRINTED else 1)


def iterated_cover_expr(l: int, r: int, variant: str = PRINTED) -> Expr:
    """``I(mu_l^r(G) x P_2)`` by applying the cover formula ``r`` times."""
    if r < 0:
        raise ValueError("r must be >= 0")
    step = cover_mycielskian_expr(l, variant)
    e: Expr = B
    for _ in range(r):
        e = substitute(step, {"B": e})
    return e


def iterated_expr(l: int, r: int, variant: str = PRINTED) -> Expr:
    """``I(mu_l^r(G))`` expanded from the single-step formulas.

    ``mu_l^r(G) = mu_l(mu_l^{r-1}(G))``, so ``A`` is replaced by the level
    ``r-1`` expression and ``B`` by the level ``r-1`` cover expression.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    step = mycielskian_expr(l)
    e: Expr = A
    for level in range(1, r + 1):
        e = substitute(step, {"A": e, "B": iterated_cover_expr(l, level - 1, variant)})
    return e


def iterated_cover_closed_expr(l: int, r: int, variant: str = PRINTED) -> Expr:
    """Closed form for ``I(mu_l^r(G) x P_2)``, ``l`` not divisible by 3."""
    _check_variant(variant)
    if r < 1:
        raise ValueError("r must be >= 1")
    k, case = divmod(l, 3)
    if case == 1:
        return suspend(join_power(B, (2 * k + 1) ** r), f(k, r))
    if case == 2:
        s = 2 * g(k, r) if variant == PRINTED else g(k, r)
        return suspend(join_power(B, (2 * k + 2) ** r), s)
    raise ValueError("no closed form for l divisible by 3")


def _susp0(e: Expr, s: int) -> Expr:
    return suspend(e, s) if s else e


def iterated_closed_expr(l: int, r: int, reading: str = READING_KF_PLUS_1) -> Expr:
    """Published closed form for ``I(mu_l^r(G))`` when ``l ≢ 0 (mod 3)``.

    For ``l = 3k+1`` the join exponent is printed as ``kf(k,r)+1``;
    ``reading`` picks ``k*f + 1`` or ``k*(f + 1)``.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    if r < 1:
        raise ValueError("r must be >= 1")
    k, case = divmod(l, 3)
    if case == 0:
        raise ValueError("no closed form for l divisible by 3; use iterated_expr")
    if case == 1:
        fk = f(k, r)
        s = 2 * (r - 1) + (fk - r) // 2
        e = k * fk + 1 if reading == READING_KF_PLUS_1 else k * (fk + 1)
        return _susp0(join(A, join_power(B, e)), s)
    s = (g(k, r + 1) - 1) // 2
    return _susp0(join_power(B, (k + 1) * (2 * k + 2) ** (r - 1)), s)


def mu01_iter_expr(l: int, r: int) -> Expr:
    """``I(mu_0^r(G)) = A ∨ r S^0`` and ``I(mu_1^r(G)) = Σ^r A``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if l == 0:
        return wedge(A, *([sphere(0)] * r))
    if l == 1:
        return suspend(A, r)
    raise ValueError("only l = 0 or 1")


def mu3k_squared_expr(k: int) -> Expr:
    """The printed expansion of ``I(mu_{3k}^2(G))``, ``k >= 1``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    tail = []
    for i in range(k + 1):
        tail += [suspend(join_power(B, k * k + k - i), 2 * i + 1)] * comb(k, i)
    return wedge(
        join(A, join_power(B, 3 * k + 1)),
        suspend(join(A, join_power(B, 3 * k)), 2),
        suspend(join_power(B, 3 * k + 1), 1),
        suspend(join_power(B, 3 * k), 3),
        *tail,
    )


def bipartite_expr(l: int) -> Expr:
    """``mycielskian_expr(l)`` with ``B := A * A`` (valid for bipartite ``G``)."""
    return substitute(mycielskian_expr(l), {"B": join(A, A)})


def bipartite_direct_expr(l: int) -> Expr:
    """The bipartite case as stated, written directly over ``A``."""
    k, case = divmod(l, 3)
    if case == 0:
        return wedge(join_power(A, 2 * k + 1), suspend(join_power(A, 2 * k), 1))
    if case == 1:
        return suspend(join_power(A, 2 * k + 1), 1)
    return join_power(A, 2 * k + 2)


# --- graph families ---------------------------------------------------------


def _sw(*pairs) -> SphereWedge:
    acc: dict[int, int] = {}
    for d, m in pairs:
        acc[d] = acc.get(d, 0) + m
    return SphereWedge.of(acc)


def kn_formula(n: int, l: int) -> SphereWedge:
    if n < 2 or l < 0:
        raise ValueError("kn_formula needs n >= 2, l >= 0")
    k, case = divmod(l, 3)
    if case == 0:
        return _sw((2 * k, n * (n - 1) ** k))
    return _sw((2 * k + 1, (n - 1) ** (k + 1)))


def knkm_formula(n: int, m: int, l: int) -> SphereWedge:
    if n < 2 or m < 2 or l < 0:
        raise ValueError("knkm_formula needs n, m >= 2 and l >= 0")
    k, case = divmod(l, 3)
    c = (n - 1) * (m - 1) * (n * m - 2)
    assert c % 2 == 0
    c //= 2
    head = (n - 1) ** (k + 1) * (m - 1) ** (k + 1) * (n * m - 2) ** k
    assert head % 2 ** k == 0
    head //= 2 ** k
    if case == 0:
        return _sw((4 * k + 1, head), (4 * k, c ** k))
    if case == 1:
        return _sw((4 * k + 2, head))
    return _sw((4 * k + 3, c ** (k + 1)))


# Table of spheres in I(mu_l(C_n)): row -> column (l mod 3) -> [(dim, count)].
CN_TABLE = {
    "6r": (
        [(lambda r, k: 2 * r * (2 * k + 1) - 1, lambda r, k: 2 ** (2 * k + 1)),
         (lambda r, k: 4 * r * k, lambda r, k: 2 ** (2 * k))],
        [(lambda r, k: 2 * r * (2 * k + 1), lambda r, k: 2 ** (2 * k + 1))],
        [(lambda r, k: 4 * r * (k + 1) - 1, lambda r, k: 2 ** (2 * k + 2))],
    ),
    "6r+1": (
        [(lambda r, k: 2 * r * (2 * k + 1) + k - 1, lambda r, k: 1),
         (lambda r, k: k * (4 * r + 1), lambda r, k: 1)],
        [(lambda r, k: 2 * r * (2 * k + 1) + k, lambda r, k: 1)],
        [(lambda r, k: (4 * r + 1) * (k + 1) + k, lambda r, k: 1)],
    ),
    "6r+2/6r+4": (
        [(lambda r, k: (2 * r + 1) * (2 * k + 1) - 1, lambda r, k: 1),
         (lambda r, k: k * (4 * r + 2), lambda r, k: 1)],
        [(lambda r, k: (2 * r + 1) * (2 * k + 1), lambda r, k: 1)],
        [(lambda r, k: (k + 1) * (4 * r + 1) + k, lambda r, k: 1)],
    ),
    "6r+3": (
        [(lambda r, k: (2 * r + 1) * (2 * k + 1) - 1, lambda r, k: 2 ** (k + 1)),
         (lambda r, k: (4 * r + 1) * k + k, lambda r, k: 2 ** k)],
        [(lambda r, k: (2 * r + 1) * (2 * k + 1), lambda r, k: 2 ** (k + 1))],
        [(lambda r, k: (4 * r + 1) * (k + 1) + k, lambda r, k: 2 ** (k + 1))],
    ),
    "6r+5": (
        [(lambda r, k: (2 * r + 1) * (2 * k + 1) + k, lambda r, k: 1),
         (lambda r, k: k * (4 * r + 3), lambda r, k: 1)],
        [(lambda r, k: (2 * r + 1) * (2 * k + 1) + k + 1, lambda r, k: 1)],
        [(lambda r, k: (4 * r + 2) * (k + 1) + k, lambda r, k: 1)],
    ),
}

_CN_ROW = {0: "6r", 1: "6r+1", 2: "6r+2/6r+4", 3: "6r+3", 4: "6r+2/6r+4", 5: "6r+5"}


def cn_table_cell(n: int, l: int) -> tuple[str, str, int, int]:
    """(row label, column label, r, k) of the table cell for ``(n, l)``."""
    if n < 3 or l < 1:
        raise ValueError("cn_formula needs n >= 3 and l >= 1")
    k, case = divmod(l, 3)
    return _CN_ROW[n % 6], ("3k", "3k+1", "3k+2")[case], n // 6, k


def cn_formula(n: int, l: int) -> SphereWedge:
    row, _, r, k = cn_table_cell(n, l)
    cell = CN_TABLE[row][l % 3]
    return _sw(*((dim(r, k), cnt(r, k)) for dim, cnt in cell))


def pn_formula(n: int, l: int) -> SphereWedge:
    """The path formula as printed (including its l = 3k second sphere)."""
    if n < 1 or l < 0:
        raise ValueError("pn_formula needs n >= 1 and l >= 0")
    if n % 3 == 1:
        return SphereWedge.contractible()
    r = (n + 1) // 3
    k, case = divmod(l, 3)
    if case == 0:
        return _sw((2 * k * r + r - 1, 1), (k * r + 1, 1))
    if case == 1:
        return _sw((2 * k * r + r, 1))
    return _sw((2 * (k + 1) * r - 1, 1))


def pn_bipartite_value(n: int, l: int) -> SphereWedge:
    """The path case evaluated through the bipartite formula instead."""
    return normalize(bipartite_expr(l), {"A": path_atoms(n)[0]})


# Atom values quoted for the families (homotopy types of I(G), I(G x K_2)).


def complete_atoms(n: int) -> tuple[SphereWedge, SphereWedge]:
    return _sw((0, n - 1)), _sw((1, n - 1))


def knkm_atoms(n: int, m: int) -> tuple[SphereWedge, SphereWedge]:
    return _sw((1, (n - 1) * (m - 1))), _sw((3, (n - 1) * (m - 1) * (n * m - 2) // 2))


def cycle_atoms(n: int) -> tuple[SphereWedge, SphereWedge]:
    q, t = divmod(n, 3)
    a = {0: _sw((q - 1, 2)), 1: _sw((q - 1, 1)), 2: _sw((q, 1))}[t]
    r, t6 = divmod(n, 6)
    # (dimension, count) per residue mod 6; built lazily since 4r-1 < 0 for r = 0
    dim, count = {
        0: (4 * r - 1, 4),
        1: (4 * r, 1),
        2: (4 * r + 1, 1),
        3: (4 * r + 1, 2),
        4: (4 * r + 1, 1),
        5: (4 * r + 2, 1),
    }[t6]
    return a, _sw((dim, count))


def path_atoms(n: int) -> tuple[SphereWedge, SphereWedge]:
    """``I(P_n)`` and, since paths are bipartite, ``I(P_n)^{*2}``."""
    if n % 3 == 1:
        a = SphereWedge.contractible()
    else:
        a = _sw(((n + 1) // 3 - 1, 1))
    return a, a.join(a)


# --- statements contradicted by brute force ---------------------------------


@dataclass(frozen=True)
class Discrepancy:
    formula: FormulaId
    where: str
    note: str
    applies: Callable[..., bool] = field(compare=False, repr=False)


def _pn_flag(n, l, **_):
    return n % 3 != 1 and l % 3 == 0 and not (l == 3 and (n + 1) // 3 == 1)


DISCREPANCIES = (
    Discrepancy(FormulaId.COVER_MU, "cover l=3k+2",
                "printed Σ^2 B^{*2k+2}; brute force gives Σ B^{*2k+2}",
                lambda l, **_: l % 3 == 2),
    Discrepancy(FormulaId.CN_TABLE, "cn row 6r+1 column 3k+2",
                "printed dimension (4r+1)(k+1)+k; the main formula gives (4r+1)(k+1)-1",
                lambda n, l, **_: n % 6 == 1 and l % 3 == 2),
    Discrepancy(FormulaId.PN, "pn l=3k",
                "printed second sphere S^{kr+1}; the bipartite formula gives S^{2kr}",
                _pn_flag),
    Discrepancy(FormulaId.PN, "pn n=3r+1 l=0",
                "printed contractible; the cone adds an isolated vertex to I(P_n), giving S^0",
                lambda n, l, **_: n % 3 == 1 and l == 0),
    Discrepancy(FormulaId.ITER_CLOSED, "iter-closed l=3k+1",
                "neither reading of the join exponent agrees with the recursion",
                lambda l, **_: l % 3 == 1),
    Discrepancy(FormulaId.ITER_CLOSED, "iter-closed l=3k+2",
                "suspension count disagrees with the recursion",
                lambda l, **_: l % 3 == 2),
    Discrepancy(FormulaId.ITER_COVER, "iter-cover l=3k+2",
                "inherits the doubled suspension of the cover formula",
                lambda l, **_: l % 3 == 2),
    Discrepancy(FormulaId.ITER, "mu3k squared expansion",
                "the final wedge summands disagree with the recursion",
                lambda k, **_: k >= 1),
)


def expected_discrepancy(formula: FormulaId, **params) -> Discrepancy | None:
    """The recorded discrepancy covering ``formula`` at ``params``, if any."""
    for d in DISCREPANCIES:
        if d.formula == formula and d.applies(**params):
            return d
    return None

