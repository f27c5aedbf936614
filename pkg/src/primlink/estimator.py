"""scikit-learn estimator wrapping the Prim / interval-dendrogram pipeline."""

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_metric, check_n_clusters, check_threshold, check_points
from .dendrogram import build_dendrogram, cut_k, cut_threshold
from .export import export_merge_table
from .ingest import Dataset, DissimilaritySource, EdgeWeightedGraph
from .prim import prim_mst


class PrimSingleLinkage(ClusterMixin, BaseEstimator):
    """Single-linkage clustering without a pairwise distance matrix.

    Parameters
    ----------
    n_clusters : int or None, default=2
        Number of flat clusters to extract. Must be None when
        ``distance_threshold`` is set.
    distance_threshold : float or None, default=None
        Points joined by MST edges strictly lighter than this end up in the
        same cluster.
    metric : str, default="euclidean"
        One of "euclidean", "squared-euclidean", "manhattan", "chebyshev".
        Ignored when fitting an :class:`EdgeWeightedGraph`.
    seed_vertex : int, default=0
        Vertex where Prim's algorithm starts. Flat partitions do not depend on
        it when pairwise distances are distinct; node ranges do.

    Attributes
    ----------
    prim_ : PrimResult
    dendrogram_ : Dendrogram
    labels_ : ndarray of shape (n_samples,)
    n_clusters_ : int
    n_leaves_ : int
    order_ : ndarray of shape (n_samples,)
        Vertex ids in Prim order.
    children_ : ndarray of shape (n_samples - 1, 2)
        Merged cluster ids per merge, in the scipy/sklearn id scheme.
    distances_ : ndarray of shape (n_samples - 1,)
        Merge heights, ascending.
    """

    def __init__(self, n_clusters=2, *, distance_threshold=None, metric="euclidean", seed_vertex=0):
        self.n_clusters = n_clusters
        self.distance_threshold = distance_threshold
        self.metric = metric
        self.seed_vertex = seed_vertex

    def _check_cut(self):
        if (self.n_clusters is None) == (self.distance_threshold is None):
            raise ValueError(
                "exactly one of n_clusters and distance_threshold must be None, got "
                f"n_clusters={self.n_clusters!r}, distance_threshold={self.distance_threshold!r}"
            )

    def fit(self, X, y=None):
        """Fit on an (n_samples, n_features) array or an :class:`EdgeWeightedGraph`."""
        self._check_cut()
        if isinstance(X, EdgeWeightedGraph):
            src = DissimilaritySource(X)
        else:
            X = check_points(X, allow_1d=False)
            src = DissimilaritySource(Dataset(X), check_metric(self.metric))
            self.n_features_in_ = X.shape[1]
        if self.n_clusters is not None:
            check_n_clusters(self.n_clusters, src.n)
        else:
            check_threshold(self.distance_threshold)

        self.prim_ = prim_mst(src, self.seed_vertex)
        self.dendrogram_ = build_dendrogram(self.prim_)
        table = export_merge_table(self.dendrogram_)
        self.n_leaves_ = src.n
        self.order_ = np.asarray(self.prim_.order)
        self.children_ = np.column_stack([table.left, table.right])
        self.distances_ = table.height
        partition = self._cut(self.n_clusters, self.distance_threshold)
        self.labels_ = partition.labels
        self.n_clusters_ = partition.k
        return self

    def _cut(self, n_clusters, distance_threshold):
        if distance_threshold is not None:
            return cut_threshold(self.dendrogram_, distance_threshold)
        return cut_k(self.dendrogram_, n_clusters)

    def cut(self, n_clusters=None, distance_threshold=None):
        """Labels for a different cut of the fitted tree, without refitting."""
        check_is_fitted(self, "dendrogram_")
        if (n_clusters is None) == (distance_threshold is None):
            raise ValueError("pass exactly one of n_clusters and distance_threshold")
        return self._cut(n_clusters, distance_threshold).labels

    def merge_table(self):
        check_is_fitted(self, "dendrogram_")
        return export_merge_table(self.dendrogram_)
