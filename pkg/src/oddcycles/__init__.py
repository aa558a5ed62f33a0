"""Spectral certificates, odd-cycle counting, and commonality experiments on
pseudorandom graphs, with brute-force oracles validating every counting path.
"""

from .commonality import (
    CommonalityReport,
    EdgeFunction,
    cancel_identity_check,
    commonality_bound,
    edge_indicator,
    q_polynomial,
    q_polynomial_brute,
    q_polynomial_subsets,
    signed_difference,
    t_combination,
    t_sequence,
    t_weighted,
    verify_commonality,
)
from .counting import (
    CountReport,
    WalkTable,
    brute_hom_count,
    figure_eight_bound_check,
    figure_eight_hom_count,
    hom_count_cycle,
    hom_count_path,
    injective_count_cycle,
    rooted_odd_cycle_counts,
    walk_table,
)
from .generators import complete, complete_bipartite, cycle_graph, empty, paley, random_regular
from .graphs import (
    Graph,
    VertexSet,
    complement_within,
    degree_profile,
    from_edge_list,
    induced_subgraph,
    read_edge_list,
    write_edge_list,
)
from .kernels import BACKEND
from .patterns import Pattern, cycle, figure_eight, parse_pattern, path
from .regularize import (
    RegularizationParams,
    RegularizationResult,
    cascade,
    dense_core,
    deviation_sets,
    regularize,
)
from .spectral import (
    MixingCheck,
    NdlCertificate,
    Spectrum,
    certify_ndl,
    even_cycle_trace_bound,
    expander_mixing_check,
    hypothesis_ratio,
    spectrum,
)

__version__ = "0.1.0"
