"""Exact tools for degree Ramsey numbers and their bipartite variant."""
from .arrowing import (
    ArrowVerdict,
    Outcome,
    SearchBudget,
    brute_force_arrowing,
    decide_arrowing,
    host_upper_bound_scan,
    verify_coloring,
)
from .construct import (
    Factorization,
    SupergraphWitness,
    bipartite_double_cover,
    high_girth_regular,
    make_pattern_graph,
    one_factorization,
    random_coloring,
    regular_bipartite_supergraph,
    star_free_coloring,
)
from .graph import (
    INFINITE,
    DegreeStats,
    EdgeColoring,
    Embedding,
    Graph,
    check_bipartition,
    color_class,
    degree_stats,
    girth,
    parse_coloring,
    parse_graph,
    serialize_coloring,
    serialize_graph,
)
from .patterns import (
    EmbeddingFailure,
    KstCertificate,
    PeelResult,
    embed_tree,
    find_monochromatic,
    kst_find,
    kst_threshold,
    locally_injective_hom,
    majority_color_class,
    peel_dense_core,
)
from .targets import PatternSpec, parse_pattern

__all__ = [
    "ArrowVerdict",
    "bipartite_double_cover",
    "brute_force_arrowing",
    "check_bipartition",
    "color_class",
    "decide_arrowing",
    "degree_stats",
    "DegreeStats",
    "EdgeColoring",
    "embed_tree",
    "Embedding",
    "EmbeddingFailure",
    "Factorization",
    "find_monochromatic",
    "girth",
    "Graph",
    "high_girth_regular",
    "host_upper_bound_scan",
    "INFINITE",
    "kst_find",
    "kst_threshold",
    "KstCertificate",
    "locally_injective_hom",
    "majority_color_class",
    "make_pattern_graph",
    "one_factorization",
    "Outcome",
    "parse_coloring",
    "parse_graph",
    "parse_pattern",
    "PatternSpec",
    "peel_dense_core",
    "PeelResult",
    "random_coloring",
    "regular_bipartite_supergraph",
    "SearchBudget",
    "serialize_coloring",
    "serialize_graph",
    "star_free_coloring",
    "SupergraphWitness",
    "verify_coloring",
]

__version__ = "0.1.0"
