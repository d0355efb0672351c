"""Simultaneous edge colorings and their equivalent combinatorial objects.

A mu-simultaneous edge coloring of a graph is a tuple of mu proper edge
colorings over one color set in which every vertex sees the same palette in
each coordinate and every edge receives mu pairwise distinct colors.  The
package constructs, decides, verifies, and inter-converts these colorings
with mu-way Latin trades, (oriented) cycle double covers, nowhere-zero
flows, and edge-connected bipartite degree-sequence realizations.
"""

from .coloring import (
    EdgeColoring,
    SimultaneousColoring,
    chromatic_index,
    counterexample_filter,
    decide_mu_se,
    se_chromatic_number,
    verify_proper,
    verify_simultaneous,
)
from .graph import (
    DegreeSequence,
    EdgeCut,
    Graph,
    OneFactorization,
    bridges,
    cartesian_product,
    edge_connectivity,
    girth,
    is_bipartite,
    join,
    lexicographic_product,
    one_factorization,
    subdivide_edge,
)

__all__ = [
    "DegreeSequence",
    "EdgeColoring",
    "EdgeCut",
    "Graph",
    "OneFactorization",
    "SimultaneousColoring",
    "bridges",
    "cartesian_product",
    "chromatic_index",
    "counterexample_filter",
    "decide_mu_se",
    "edge_connectivity",
    "girth",
    "is_bipartite",
    "join",
    "lexicographic_product",
    "one_factorization",
    "se_chromatic_number",
    "subdivide_edge",
    "verify_proper",
    "verify_simultaneous",
]
__version__ = "0.1.0"
