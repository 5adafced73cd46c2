"""Distance-based graph indices.

The package computes pair counts by distance (the coefficients of the
Wiener polynomial), distance sums restricted to vertices of a fixed
degree, and the classic Wiener and Zagreb indices.  Three routes are
provided and cross-checked: a brute-force BFS oracle for any connected
graph, a linear-time table algorithm for trees, and a cut decomposition
for partial cubes.  On top of that sit generators for the extremal tree
families and coronene benzenoids, closed-form optima, an exhaustive
free-tree enumerator, and claim verifiers that tie everything together.
"""

from .benzenoid import (
    HexSystem,
    coronene_tw3,
    edge_direction,
    gen_coronene,
    horizontal_cut_profile,
    orientation_groups,
)
from .errors import (
    ClassRemovalError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeListFormatError,
    GraphError,
    InfeasibleSpecError,
    LoopEdgeError,
    NotATreeError,
    NotBipartiteError,
    NotPartialCubeError,
    OrderTooLargeError,
    VertexOutOfRangeError,
)
from .extremal import (
    TreeSpec,
    caterpillar_positions,
    caterpillar_twk,
    even_group_bound,
    even_group_peak,
    gen_tree,
    max_degree_count,
    max_tw3,
    max_wk_even,
    max_wk_odd,
)
from .graphs import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bfs_distances,
    complete_graph,
    cycle_graph,
    degree_sequence,
    dump_edge_list,
    format_edge_list,
    from_edge_list,
    hypercube_graph,
    is_bipartite,
    is_connected,
    is_tree,
    load_edge_list,
    parse_edge_list,
    path_graph,
    star_graph,
    two_coloring,
)
from .indices import (
    IndexReport,
    WienerPolynomial,
    index_report,
    twk,
    twk_star,
    wiener,
    wiener_polynomial,
    wk,
    wk_star,
    zagreb_m1,
    zagreb_m2,
)
from .partial_cube import (
    CubeCoordinates,
    CubeVerdict,
    ThetaPartition,
    halfspace_degree_counts,
    is_partial_cube,
    theta_classes,
    twk_cut,
)
from .tree_linear import (
    NO_PARENT,
    DistTable,
    RootedTree,
    distance_count_table,
    wk3_from_zagreb,
    wk_linear,
)
from .treegen import (
    MAX_ORDER,
    all_free_trees,
    canonical_form,
    free_tree_count,
    prufer_to_tree,
    random_tree,
    rooted_level_sequences,
    tree_centers,
)
from .verify import (
    DEFAULT_SEED,
    verify_coronene,
    verify_cut_vs_oracle,
    verify_degree_count,
    verify_eq1,
    verify_extremal,
    verify_linear_vs_oracle,
    verify_max_tw3,
    verify_max_wk,
    verify_wiener_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graphs
    "Graph", "DistanceMatrix", "UNREACHABLE", "from_edge_list", "bfs_distances",
    "all_pairs_distances", "is_connected", "is_tree", "is_bipartite",
    "two_coloring", "degree_sequence", "parse_edge_list", "format_edge_list",
    "load_edge_list", "dump_edge_list", "path_graph", "star_graph",
    "cycle_graph", "complete_graph", "hypercube_graph",
    # indices
    "wiener", "wk", "WienerPolynomial", "wiener_polynomial", "twk",
    "zagreb_m1", "zagreb_m2", "wk_star", "twk_star", "IndexReport",
    "index_report",
    # tree route
    "RootedTree", "DistTable", "NO_PARENT", "distance_count_table",
    "wk_linear", "wk3_from_zagreb",
    # partial cubes
    "ThetaPartition", "theta_classes", "CubeCoordinates", "CubeVerdict",
    "is_partial_cube", "halfspace_degree_counts", "twk_cut",
    # extremal families
    "TreeSpec", "gen_tree", "caterpillar_positions", "max_wk_odd",
    "even_group_bound", "even_group_peak", "max_wk_even", "max_degree_count",
    "caterpillar_twk", "max_tw3",
    # benzenoids
    "HexSystem", "gen_coronene", "edge_direction", "orientation_groups",
    "horizontal_cut_profile", "coronene_tw3",
    # enumeration and sampling
    "MAX_ORDER", "rooted_level_sequences", "tree_centers", "canonical_form",
    "all_free_trees", "free_tree_count", "prufer_to_tree", "random_tree",
    # verifiers
    "DEFAULT_SEED", "verify_max_wk", "verify_max_tw3", "verify_degree_count",
    "verify_wiener_bounds", "verify_extremal", "verify_eq1", "verify_coronene",
    "verify_linear_vs_oracle", "verify_cut_vs_oracle",
    # errors
    "GraphError", "LoopEdgeError", "DuplicateEdgeError",
    "VertexOutOfRangeError", "EdgeListFormatError", "DisconnectedError",
    "NotATreeError", "NotBipartiteError", "NotPartialCubeError",
    "ClassRemovalError", "InfeasibleSpecError", "OrderTooLargeError",
]
