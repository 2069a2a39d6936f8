import itertools
import random
from math import gcd

import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from conftest import random_graph
from mycielski_ic.complexes import SimplicialComplex, euler_characteristic, independence_complex
from mycielski_ic.graphs import complete, cycle, disjoint_union, grid, mycielskian, path
from mycielski_ic.homology import (
    HomologyProfile,
    IntMatrix,
    boundary_matrix,
    join_profiles,
    profile_of_sphere_wedge,
    reduced_homology,
    smith_normal_form,
)
from mycielski_ic.homotopy import SphereWedge

RP2_TRIANGLES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5),
]


def closure(facets):
    faces = set()
    for f in facets:
        for size in range(1, len(f) + 1):
            faces.update(itertools.combinations(sorted(f), size))
    top = max(map(len, faces))
    return SimplicialComplex(tuple(sorted(x for x in faces if len(x) == s) for s in range(1, top + 1)))


def unimodular(rng, n):
    m = np.eye(n, dtype=object)
    for _ in range(3 * n if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        m[i] += rng.choice([-1, 1]) * m[j]
    perm = rng.sample(range(n), n)
    return m[perm]


def chain(values):
    """Invariant factors of a diagonal matrix, via prime-power bookkeeping."""
    vals = [abs(v) for v in values if v]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            g = gcd(vals[i], vals[j])
            vals[i], vals[j] = g, vals[i] * vals[j] // g
    return sorted(vals)


def minors_gcd_factors(a):
    """d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors."""
    a = np.array(a, dtype=float)
    m, n = a.shape
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        dk = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                dk = gcd(dk, int(round(np.linalg.det(a[np.ix_(rows, cols)]))))
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return out


def test_snf_random_products():
    rng = random.Random(5)
    for trial in range(100):
        m, n = rng.randint(1, 30), rng.randint(1, 30)
        d = [rng.choice([0, 1, 1, 2, 3, 4, 6, 12]) for _ in range(min(m, n))]
        diag = np.zeros((m, n), dtype=object)
        for i, v in enumerate(d):
            diag[i, i] = v
        a = unimodular(rng, m).dot(diag).dot(unimodular(rng, n))
        snf = smith_normal_form(IntMatrix.from_dense(a.tolist()))
        assert list(snf.factors) == chain(d), trial
        assert all(b % a_ == 0 for a_, b in zip(snf.factors, snf.factors[1:]))
        ref = [abs(int(x)) for x in invariant_factors(Matrix(a.tolist()), domain=ZZ) if x]
        assert list(snf.factors) == ref, trial


def test_snf_against_minors():
    rng = random.Random(9)
    for _ in range(30):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        assert list(smith_normal_form(IntMatrix.from_dense(a)).factors) == minors_gcd_factors(a)


def test_snf_small_cases():
    assert smith_normal_form(IntMatrix.from_dense([[2, 4], [6, 8]])).factors == (2, 4)
    assert smith_normal_form(IntMatrix.from_dense([[0, 0], [0, 0]])).rank == 0
    assert smith_normal_form(IntMatrix.from_dense([[2, 0], [0, 3]])).factors == (1, 6)


def test_boundary_squares_to_zero():
    complexes = [independence_complex(g) for g in
                 [cycle(7), grid(3, 3), mycielskian(cycle(5), 2), mycielskian(path(5), 3)]]
    complexes.append(closure(RP2_TRIANGLES))
    for k in complexes:
        for d in range(1, k.dimension + 1):
            assert (boundary_matrix(k, d - 1) @ boundary_matrix(k, d)).is_zero()


def test_boundary_signs():
    k = closure([(0, 1, 2)])
    top = boundary_matrix(k, 2)
    # faces(1) = 01, 02, 12; removing vertex i from 012 carries (-1)^i
    assert top.columns == [{2: 1, 1: -1, 0: 1}]
    assert boundary_matrix(k, 0).columns == [{0: 1}] * 3


def test_projective_plane_torsion():
    p = reduced_homology(closure(RP2_TRIANGLES))
    assert p.as_dict() == {1: (0, (2,))}
    assert p.has_torsion and p.euler() == 0
    assert str(p) == "H~1: Z/2"


def test_sphere_and_torus():
    boundary = closure([f for f in itertools.combinations(range(4), 3)])
    assert reduced_homology(boundary).as_dict() == {2: (1, ())}
    # 7-vertex torus
    torus = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    torus += [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    assert reduced_homology(closure(torus)).as_dict() == {1: (2, ()), 2: (1, ())}


def test_cycles():
    # I(C_n) is a sphere or contractible depending on n mod 3
    expected = {0: lambda k: {k - 1: (2, ())}, 1: lambda k: {k - 1: (1, ())}, 2: lambda k: {k: (1, ())}}
    for n in range(4, 13):
        k, res = divmod(n, 3)
        assert reduced_homology(independence_complex(cycle(n))).as_dict() == expected[res](k)


def test_permutation_invariance():
    rng = random.Random(17)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 10), 0.45)
        perm = rng.sample(range(g.n), g.n)
        assert reduced_homology(independence_complex(g)) == \
            reduced_homology(independence_complex(g.relabel(perm)))


def test_join_law_random_pairs():
    rng = random.Random(23)
    for _ in range(50):
        a = random_graph(rng, rng.randint(1, 6), rng.random())
        b = random_graph(rng, rng.randint(1, 6), rng.random())
        pa = reduced_homology(independence_complex(a))
        pb = reduced_homology(independence_complex(b))
        pab = reduced_homology(independence_complex(disjoint_union(a, b)))
        assert pab == join_profiles(pa, pb)


def test_euler_equals_betti_sum():
    rng = random.Random(29)
    for _ in range(40):
        k = independence_complex(random_graph(rng, rng.randint(0, 11), rng.random()))
        assert reduced_homology(k).euler() == euler_characteristic(k)


def test_profile_strings():
    p = HomologyProfile.from_groups({-1: (1, ()), 2: (3, (2, 4))})
    assert p.to_string() == "H~(-1): Z; H~2: Z^3 ⊕ Z/2 ⊕ Z/4"
    assert p.to_string(ascii=True) == "H~(-1): Z; H~2: Z^3 + Z/2 + Z/4"
    assert HomologyProfile.from_string(p.to_string()) == p
    assert HomologyProfile.from_string(p.to_string(True)) == p
    assert HomologyProfile.from_string("0").is_zero
    with pytest.raises(ValueError):
        HomologyProfile.from_groups({1: (0, (2, 3))})
    with pytest.raises(ValueError):
        HomologyProfile.from_string("H1 Z")


def test_sphere_wedge_profile():
    w = SphereWedge.of({1: 2, 3: 1})
    assert profile_of_sphere_wedge(w).as_dict() == {1: (2, ()), 3: (1, ())}
    assert profile_of_sphere_wedge(SphereWedge.contractible()).is_zero


def test_complete_graph_homology():
    for n in range(1, 7):
        assert reduced_homology(independence_complex(complete(n))).rank(0) == n - 1


def first_two_factors_by_minors(a):
    """d_1 = gcd of entries, d_1 d_2 = gcd of all 2 x 2 minors."""
    a = np.asarray(a, dtype=np.int64)
    d1 = int(np.gcd.reduce(np.abs(a).ravel()))
    d2 = 0
    for i, j in itertools.combinations(range(a.shape[0]), 2):
        minors = np.outer(a[i], a[j]) - np.outer(a[j], a[i])
        d2 = gcd(d2, int(np.gcd.reduce(np.abs(minors).ravel())))
    return d1, (d2 // d1 if d1 else 0)


def test_snf_first_factors_30x30():
    rng = random.Random(13)
    for _ in range(10):
        scale = rng.choice([1, 2, 3, 6])
        a = [[scale * rng.randint(-5, 5) for _ in range(30)] for _ in range(30)]
        if rng.random() < 0.5:
            # force a larger second factor on part of the matrix
            for row in a[:15]:
                row[:] = [2 * x for x in row]
        fac = smith_normal_form(IntMatrix.from_dense(a)).factors
        assert fac[:2] == first_two_factors_by_minors(a)
        assert all(b % x == 0 for x, b in zip(fac, fac[1:]))


def test_snf_trivial_cases():
    eye = [[int(i == j) for j in range(5)] for i in range(5)]
    assert smith_normal_form(IntMatrix.from_dense(eye)).factors == (1,) * 5
    zero = smith_normal_form(IntMatrix.from_dense([[0] * 3] * 4))
    assert zero.factors == () and zero.rank == 0


def test_boundary_examples():
    edge = closure([(0, 1)])
    assert boundary_matrix(edge, 1).to_dense() == [[-1], [1]]
    point = closure([(0,)])
    assert boundary_matrix(point, 0).to_dense() == [[1]]
    above = boundary_matrix(edge, 3)
    assert above.cols == 0 and above.is_zero()
    with pytest.raises(ValueError):
        boundary_matrix(edge, -1)


def test_small_named_complexes():
    assert reduced_homology(independence_complex(cycle(5))).as_dict() == {1: (1, ())}
    assert reduced_homology(independence_complex(complete(3))).as_dict() == {0: (2, ())}
    assert reduced_homology(independence_complex(path(4))).is_zero
    assert profile_of_sphere_wedge(SphereWedge.sphere(-1)).as_dict() == {-1: (1, ())}
