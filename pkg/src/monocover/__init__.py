"""Covers of edge-colored graphs by few monochromatic bounded-diameter
components: constructive algorithms with verifiable certificates, exact
brute-force oracles, instance generators, and a coloring-search harness."""

from .classify import (
    ClassifierVerdict,
    DiamPattern,
    HouseDecomposition,
    check_house_membership,
    classify_complete,
    double_star_bases,
    spanning_mono_small_diameter,
)
from .covers import (
    NearSplitStructure,
    PairPartition,
    ProofAssertionError,
    cover_alpha2,
    cover_general,
    cover_near_split,
    cover_stars,
    cover_via_cliques,
    detect_near_split,
    pair_partition,
    two_clique_cover,
)
from .generators import (
    InstanceSpec,
    gen_antihole,
    gen_k7_triple,
    gen_matching_complement,
    gen_p42,
    gen_random_alpha2,
    gen_substitution,
    house_skeleton,
)
from .graph import (
    UNREACHABLE,
    ColoredGraph,
    CoverCertificate,
    CoverComponent,
    CoverVerdict,
    LimitExceeded,
    build_graph,
    find_odd_antihole,
    format_certificate,
    format_combined,
    format_graph,
    independence_number,
    induced_subgraph,
    is_complement_bipartite,
    mono_diameter,
    parse_certificate,
    parse_combined,
    parse_graph,
    verify_cover,
)
from .oracle import CandidateFamily, exists_bounds_cover, maximal_candidates, min_cover_exact
from .search import (
    ConstructiveMatchesOracle,
    HasBoundsCover,
    MinCoverAtMost,
    SearchReport,
    apply_coloring,
    count_canonical,
    enumerate_colorings,
    format_report,
    min_cover_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "CandidateFamily",
    "ClassifierVerdict",
    "ColoredGraph",
    "ConstructiveMatchesOracle",
    "CoverCertificate",
    "CoverComponent",
    "CoverVerdict",
    "DiamPattern",
    "HasBoundsCover",
    "HouseDecomposition",
    "InstanceSpec",
    "LimitExceeded",
    "MinCoverAtMost",
    "NearSplitStructure",
    "PairPartition",
    "ProofAssertionError",
    "SearchReport",
    "apply_coloring",
    "build_graph",
    "check_house_membership",
    "classify_complete",
    "count_canonical",
    "cover_alpha2",
    "cover_general",
    "cover_near_split",
    "cover_stars",
    "cover_via_cliques",
    "detect_near_split",
    "double_star_bases",
    "enumerate_colorings",
    "exists_bounds_cover",
    "find_odd_antihole",
    "format_certificate",
    "format_combined",
    "format_graph",
    "format_report",
    "gen_antihole",
    "gen_k7_triple",
    "gen_matching_complement",
    "gen_p42",
    "gen_random_alpha2",
    "gen_substitution",
    "house_skeleton",
    "independence_number",
    "induced_subgraph",
    "is_complement_bipartite",
    "maximal_candidates",
    "min_cover_exact",
    "min_cover_distribution",
    "mono_diameter",
    "pair_partition",
    "parse_certificate",
    "parse_combined",
    "parse_graph",
    "spanning_mono_small_diameter",
    "two_clique_cover",
    "verify_cover",
]
