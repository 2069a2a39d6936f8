"""
Counting suspensions on the double cover
========================================

For l = 3k+2 the stated cover formula carries two suspensions.  The smallest
case is already decisive: mu_2(K_2) is the 7-cycle, its double cover is the
14-cycle, and I(C_14) is a 4-sphere.
"""

from mycielski_ic import complete, cycle, kronecker_cover, mycielskian, reduced_homology
from mycielski_ic import independence_complex
from mycielski_ic.formulas import CORRECTED
from mycielski_ic.verify import VerifyOptions, verify_cover

cover = kronecker_cover(mycielskian(complete(2), 2))
print("double cover has", cover.n, "vertices, degrees", sorted({cover.degree(v) for v in range(cover.n)}))
print("I(cover):", reduced_homology(independence_complex(cover)))

for g, name in [(complete(2), "K_2"), (complete(3), "K_3"), (cycle(5), "C_5")]:
    stated = verify_cover(g, 2)
    fixed = verify_cover(g, 2, VerifyOptions(variant=CORRECTED))
    print(f"{name}: stated {stated.predicted} -> {stated.verdict.value}; "
          f"one suspension {fixed.predicted} -> {fixed.verdict.value}")
