"""
Mycielskians of complete graphs
===============================

Build mu_l(K_n), compute the homology of its independence complex by brute
force, and compare with the sphere count predicted from I(K_n) alone.
"""

from mycielski_ic import complete, fold_reduce, independence_complex, mycielskian, reduced_homology
from mycielski_ic.formulas import kn_formula

# mu_1(K_2) is the 5-cycle, so its complex should be a circle
g = mycielskian(complete(2), 1)
print(g.n, "vertices,", g.num_edges, "edges")
print(reduced_homology(independence_complex(g)))

# folding dominated vertices first keeps the complexes small
for n in (2, 3, 4):
    for l in range(6):
        g = mycielskian(complete(n), l)
        h, log = fold_reduce(g)
        k = independence_complex(h)
        print(f"K_{n} l={l}: {g.n:3d} -> {h.n:3d} vertices, {k.num_faces:5d} faces, "
              f"{reduced_homology(k)}  (predicted {kn_formula(n, l)})")
