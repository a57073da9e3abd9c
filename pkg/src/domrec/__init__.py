"""Dominating-set reconfiguration graphs of small seed graphs.

Build D_k(G), test the relaxed Eulerian criterion (all degrees even, at most
one non-trivial component), extract Euler circuits, and exhaustively verify a
catalog of closed-form characterizations at desk scale.
"""

from .domination import (
    DominationProfile,
    VertexSet,
    domination_profile,
    enumerate_dominating_sets,
    is_dominating,
    is_minimal_dominating,
)
from .graphs import (
    FamilySpec,
    SeedGraph,
    connected_components,
    corona_of,
    disjoint_union,
    enumerate_labeled_graphs,
    is_cocktail_party,
    make_family,
    parse_graph6,
    to_graph6,
)
from .reconfig import (
    EulerReport,
    ReconfigGraph,
    build_reconfig,
    cartesian_product,
    euler_circuit,
    eulerian_report,
    node_degree,
    parity_bipartition_valid,
)
from .theorems import (
    ClaimId,
    TheoremReport,
    expected_eulerian,
    verify_claim,
    verify_mixed_parity_lemma,
    verify_product_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "ClaimId",
    "DominationProfile",
    "EulerReport",
    "FamilySpec",
    "ReconfigGraph",
    "SeedGraph",
    "TheoremReport",
    "VertexSet",
    "build_reconfig",
    "cartesian_product",
    "connected_components",
    "corona_of",
    "disjoint_union",
    "domination_profile",
    "enumerate_dominating_sets",
    "enumerate_labeled_graphs",
    "euler_circuit",
    "eulerian_report",
    "expected_eulerian",
    "is_cocktail_party",
    "is_dominating",
    "is_minimal_dominating",
    "make_family",
    "node_degree",
    "parity_bipartition_valid",
    "parse_graph6",
    "to_graph6",
    "verify_claim",
    "verify_mixed_parity_lemma",
    "verify_product_decomposition",
]
