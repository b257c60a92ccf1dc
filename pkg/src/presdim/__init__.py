"""presdim: neighborhood-preserving graph embeddings.

Certifies when an embedding keeps neighbors strictly inside a threshold and
non-neighbors separated by a multiple of it, builds embeddings with that
guarantee into finite metrics and normed spaces, evaluates closed-form
lower/upper bounds on the required doubling dimension, and reproduces the
corresponding high-probability claims with seeded Monte Carlo runs.
"""

from .config import DEFAULT_LIMITS, Limits
from .graph import (
    Graph,
    GraphStats,
    GenerationError,
    all_pairs_distances,
    connected_components,
    derive_seed,
    diameter,
    from_edge_list,
    gen_gnp,
    gen_kregular,
    gen_named,
    gen_planted_partition,
    graph_stats,
    quotient_by_neighborhood,
    read_edge_list,
    rng_for,
    spectrum_top2,
    write_edge_list,
)
from .partition import (
    SearchBudgetExceeded,
    VertexPartition,
    clique_cover,
    clique_number,
    independence_number,
    max_clique,
    neighborhood_class_count,
    neighborhood_partition,
)
from .metric import (
    FiniteMetric,
    MetricViolation,
    PointSet,
    covering_number,
    doubling_dimension,
    induced_metric,
    packing_number,
    validate_metric,
)
from .preserve import (
    PreservationCertificate,
    alpha2_feasible,
    alpha_max,
    check,
    measured_distortion,
)
from .construct import (
    EmbeddingResult,
    JLProjectionError,
    ball_collapse_l2,
    center_and_normalize,
    clique_collapse_linf,
    frechet_embedding,
    frechet_quotient_embedding,
    grid_packing_linf,
    jl_project,
    pseudo_metric_embedding,
    result_from_json,
    result_to_json,
    schoenberg_embedding,
    shortest_path_metric,
    simplex_embedding,
    sphere_packing_l2,
)
from .bounds import (
    BoundReport,
    LowerBound,
    UpperBound,
    lower_clique_partition,
    lower_neighborhood,
    report,
    theorem_formulas,
    upper_bounds,
)
from .experiment import (
    MCResult,
    TrialRecord,
    mc_clique_number,
    mc_diameter2,
    mc_planted,
    mc_theorem2,
    sweep,
)

__version__ = "0.1.0"
