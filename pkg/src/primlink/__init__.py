"""Single-linkage dendrograms from Prim's order, without a pairwise distance matrix."""

from .dendrogram import Dendrogram, Partition, build_dendrogram, cut_k, cut_threshold, members
from .estimator import PrimSingleLinkage
from .export import (
    MergeTable,
    dendrogram_to_json,
    export_merge_table,
    export_newick,
    newick_clusters,
    parse_newick,
)
from .ingest import (
    Dataset,
    DissimilaritySource,
    EdgeWeightedGraph,
    InputError,
    dissimilarity,
    load_edge_graph,
    load_points,
)
from .prim import DisconnectedGraphError, PrimResult, mst_total_weight, prim_mst

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "Dendrogram",
    "DisconnectedGraphError",
    "DissimilaritySource",
    "EdgeWeightedGraph",
    "InputError",
    "MergeTable",
    "Partition",
    "PrimResult",
    "PrimSingleLinkage",
    "build_dendrogram",
    "cut_k",
    "cut_threshold",
    "dendrogram_to_json",
    "dissimilarity",
    "export_merge_table",
    "export_newick",
    "load_edge_graph",
    "load_points",
    "members",
    "mst_total_weight",
    "newick_clusters",
    "parse_newick",
    "prim_mst",
]
