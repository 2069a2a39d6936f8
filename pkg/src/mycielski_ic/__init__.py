"""Independence complexes of generalized Mycielskian graphs.

Graph constructions, brute-force reduced integral homology, symbolic
wedge/join/suspension algebra, the published homotopy formulas, and a
verifier that checks the formulas against brute force.
"""

__version__ = "0.1.0"

from .graphs import (  # noqa: E402
    Graph,
    canonical_hash,
    categorical_product,
    complete,
    cycle,
    disjoint_union,
    grid,
    is_bipartite,
    iterated_mycielskian,
    kronecker_cover,
    mycielskian,
    path,
)
from .complexes import SimplicialComplex, fold_reduce, independence_complex  # noqa: E402
from .homology import HomologyProfile, reduced_homology, smith_normal_form  # noqa: E402
from .homotopy import SphereWedge, normalize, parse_expr  # noqa: E402

__all__ = [
    "Graph",
    "HomologyProfile",
    "SimplicialComplex",
    "SphereWedge",
    "canonical_hash",
    "categorical_product",
    "complete",
    "cycle",
    "disjoint_union",
    "fold_reduce",
    "grid",
    "independence_complex",
    "is_bipartite",
    "iterated_mycielskian",
    "kronecker_cover",
    "mycielskian",
    "normalize",
    "parse_expr",
    "path",
    "reduced_homology",
    "smith_normal_form",
]
