"""
Wedges, joins and suspensions as a semiring
===========================================

Expressions over the atoms A = I(G) and B = I(G x K_2) normalize to wedges
of spheres once the atoms are bound.  Without bindings they still have a
canonical symbolic form, which is how iterated formulas are compared.
"""

from mycielski_ic import normalize, parse_expr
from mycielski_ic.formulas import iterated_closed_expr, iterated_expr
from mycielski_ic.homotopy import SphereWedge, symbolic_form

e = parse_expr("wedge(join(A, B), susp(B, 1))")
print(symbolic_form(e))
print(normalize(e, {"A": SphereWedge.sphere(0, 2), "B": SphereWedge.sphere(1, 2)}))

# distributivity: A * (B v S^0) and (A * B) v susp(A) have the same form
lhs = parse_expr("join(A, wedge(B, S(0)))")
rhs = parse_expr("wedge(join(A, B), susp(A))")
print(symbolic_form(lhs) == symbolic_form(rhs))

# the recursion for mu_4^2 against the two readings of the closed form
print("recursion:", symbolic_form(iterated_expr(4, 2)))
for reading in ("kf+1", "k(f+1)"):
    print(f"closed form [{reading}]:", symbolic_form(iterated_closed_expr(4, 2, reading)))
