"""Induced trees in triangle-free and bipartite graphs."""

from ._core import (
    BlowUpResult,
    CheckResult,
    ExactResult,
    ExtractionResult,
    ExtractionTrace,
    FSearchResult,
    Graph,
    GraphClass,
    LeveledGraph,
    LevelDecomposition,
    OutcomeTag,
    SelectionOutcome,
    SelectionStats,
    StepRecord,
    TreeCertificate,
    UpForest,
    bfs_levels,
    bipartition,
    blow_up,
    default_target_size,
    extract_bipartite,
    extract_triangle_free,
    f_search_native,
    independence_number,
    is_bipartite,
    is_connected,
    is_forest,
    is_induced_tree,
    is_triangle_free,
    max_degree,
    max_induced_tree,
    max_induced_tree_naive,
    max_up_growing_top_count,
    parse_graph6,
    path_of_bicliques,
    path_of_bicliques_subgraph,
    random_connected_bipartite,
    random_connected_triangle_free,
    select_up_forest,
    split_is_or_im,
    verify_extraction,
    verify_split,
    verify_up_forest_selection,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
