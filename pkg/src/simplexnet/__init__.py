"""Simplicial complexes for network data: construction, adjacency degrees,
centralities, SI spreading and threshold-pattern mining."""
from .adjacency import (
    AdjacencyKind,
    adjacent,
    deg_adj_p,
    deg_adj_p_star,
    deg_adj_star,
    deg_lower_p,
    deg_star,
    deg_upper_hp,
    deg_upper_max,
    deg_upper_p,
    lower_adjacent,
    maximal_p_adjacent,
    p_adjacent,
    strictly_lower_adjacent,
    strictly_upper_adjacent,
    upper_adjacent,
)
from .centrality import (
    CentralityReport,
    ClosenessVariant,
    ConvergenceError,
    centrality_report,
    closeness_centrality_p,
    degree_bound_binomial,
    degree_bound_pp,
    degree_centrality_p,
    degree_centrality_pp,
    eigenvector_centrality_p,
    is_irreducible,
    is_p_upper_connected,
    max_closeness_centrality,
    max_degree_bound,
    max_eigenvector_centrality,
    max_simplicial_degree_centrality,
    p_adjacency_matrix,
    p_distance,
    power_iteration,
)
from .complex import (
    ComplexError,
    Graph,
    Metric,
    PointCloud,
    SimplicialComplex,
    build_clique_complex,
    build_vietoris_rips,
    cofaces,
    distance,
    faces_of_dim,
    neighborhood_graph,
)
from .epidemic import SIParams, SIState, expected_infected, expected_susceptible, infection_rate, run, simulate_step
from .mining import (
    AtomicCondition,
    FeatureTable,
    Pattern,
    QualitySpec,
    Target,
    base_rate,
    evaluate_pattern_set,
    quality,
    scan_thresholds,
    support,
    target_share,
)

__version__ = "0.1.0"
