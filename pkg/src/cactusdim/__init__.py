"""Vertex and edge metric dimensions of graphs with edge-disjoint cycles."""

from .graph import (
    DistanceMatrix,
    EdgeListParseError,
    Graph,
    GraphError,
    all_pairs_distances,
    build_graph,
    contract_edge,
    edge_vertex_distance,
    format_edge_list,
    load_graph,
    parse_edge_list,
    save_graph,
)
from .structure import (
    CycleActivity,
    CycleSet,
    Domain,
    NotCactusError,
    ThreadDecomposition,
    complete_to_geodesic_triple,
    cycle_activity,
    decompose_threads,
    domains,
    find_cycles,
    is_branch_resolving,
    is_geodesic_triple,
    s_active_vertices,
    structural_report,
)
from .solver import (
    GeneratorReport,
    TooLargeError,
    edge_metric_dimension,
    evaluate_set,
    is_edge_metric_generator,
    is_metric_generator,
    metric_dimension,
    solve_report,
)
from .bounds import (
    BoundsCertificate,
    ScanReport,
    ScanRow,
    cactus_bounds,
    check_theorems,
    classify_graph,
    conjecture_scan,
    construct_generator,
    unicyclic_bounds,
)
from .generators import (
    GenConfig,
    SplitMix64,
    named_family,
    random_cactus,
    random_general,
    random_tree,
    random_unicyclic,
    sample_graph,
)

__version__ = "0.1.0"
