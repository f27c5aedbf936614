"""Single-linkage dendrogram over Prim positions, and flat partitions cut from it.

Every node's members are the vertices at a contiguous run ``[lo, hi]`` of Prim
positions. Breaking the heaviest attach edge inside a run, ties going to the
edge with the largest position, leaves two runs ``[lo, s-1]`` and ``[s, hi]``
that are exactly the two subtrees of the MST; the same holds recursively
inside each run using the global order. So a node is fully described by its
range and its split position, and no adjacency structure is ever built.
"""

from dataclasses import dataclass

import numba
import numpy as np

from ._validation import check_n_clusters, check_threshold


@dataclass(frozen=True, eq=False)
class Dendrogram:
    """Binary merge tree with ``2n - 1`` nodes stored column-wise.

    Node ids: leaf ``p - 1`` holds Prim position ``p``; internal nodes are
    ``n .. 2n - 2`` in ascending ``(height, split_pos)`` order, so the root is
    the last node. Leaves have ``height = nan``, ``split_pos = 0`` and
    ``left = right = -1``.
    """

    n: int
    order: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    height: np.ndarray
    split_pos: np.ndarray
    left: np.ndarray
    right: np.ndarray

    @property
    def root(self):
        return 2 * self.n - 2

    @property
    def internal_nodes(self):
        return range(self.n, 2 * self.n - 1)

    def is_leaf(self, node):
        return node < self.n

    def node_range(self, node):
        return int(self.lo[node]), int(self.hi[node])

    def children(self, node):
        if self.is_leaf(node):
            return ()
        return int(self.left[node]), int(self.right[node])

    def split_weights(self):
        """Attach weight at every position ``2..n`` (index ``p - 2``)."""
        w = np.empty(self.n - 1, dtype=np.float64)
        internal = slice(self.n, 2 * self.n - 1)
        w[self.split_pos[internal] - 2] = self.height[internal]
        return w

    def members(self, node):
        return members(self, node)


@dataclass(frozen=True, eq=False)
class Partition:
    """Cluster label per original vertex id; labels ``0..k-1`` follow the
    lowest Prim position of each cluster."""

    labels: np.ndarray
    k: int

    def clusters(self):
        return [np.flatnonzero(self.labels == c) for c in range(self.k)]


@numba.njit(cache=True, nogil=True)
def _merge_runs(sweep, weight, n, lo, hi, height, split_pos, left, right, end_of, start_of, node_at):
    node = n
    for s in sweep:
        a = start_of[s - 1]
        b = end_of[s]
        lo[node] = a
        hi[node] = b
        height[node] = weight[s - 2]
        split_pos[node] = s
        left[node] = node_at[a]
        right[node] = node_at[s]
        node_at[a] = node
        end_of[a] = b
        start_of[b] = a
        node += 1


def build_dendrogram(result):
    """Build the dendrogram from a :class:`~primlink.prim.PrimResult`.

    Positions ``2..n`` are swept in ascending ``(weight, position)`` order; at
    position ``s`` the run ending at ``s - 1`` merges with the run starting at
    ``s``. The last merge is therefore the lexicographically largest edge,
    which is the edge a top-down split would break first. Sort-dominated,
    O(n log n).
    """
    order = np.asarray(result.order)
    weight = np.asarray(result.weight, dtype=np.float64)
    n = len(order)
    if n < 1:
        raise ValueError("cannot build a dendrogram with no leaves")
    size = 2 * n - 1
    lo = np.empty(size, dtype=np.int64)
    hi = np.empty(size, dtype=np.int64)
    height = np.full(size, np.nan)
    split_pos = np.zeros(size, dtype=np.int64)
    left = np.full(size, -1, dtype=np.int64)
    right = np.full(size, -1, dtype=np.int64)
    lo[:n] = hi[:n] = np.arange(1, n + 1)

    positions = np.arange(2, n + 1, dtype=np.int64)
    sweep = positions[np.lexsort((positions, weight))]
    # run bookkeeping keyed by position: start -> end, end -> start, start -> node
    end_of = np.arange(n + 1, dtype=np.int64)
    start_of = np.arange(n + 1, dtype=np.int64)
    node_at = np.arange(-1, n, dtype=np.int64)
    _merge_runs(sweep, weight, n, lo, hi, height, split_pos, left, right, end_of, start_of, node_at)

    order = order.copy()
    for arr in (order, lo, hi, height, split_pos, left, right):
        arr.flags.writeable = False
    return Dendrogram(n, order, lo, hi, height, split_pos, left, right)


def members(dendrogram, node):
    """Original vertex ids under ``node``."""
    lo, hi = dendrogram.node_range(node)
    return set(dendrogram.order[lo - 1 : hi].tolist())


def _partition_from_breaks(dendrogram, breaks):
    # breaks[p - 2] marks that a new cluster starts at position p
    n = dendrogram.n
    by_position = np.zeros(n, dtype=np.int64)
    np.cumsum(breaks, out=by_position[1:])
    labels = np.empty(n, dtype=np.int64)
    labels[dendrogram.order] = by_position
    return Partition(labels, int(by_position[-1]) + 1)


def cut_threshold(dendrogram, t):
    """Flat clusters joined by edges strictly lighter than ``t``.

    Equivalent to dropping every merge of height ``>= t``; each cluster is a
    run of Prim positions.
    """
    t = check_threshold(t)
    return _partition_from_breaks(dendrogram, dendrogram.split_weights() >= t)


def cut_k(dendrogram, k):
    """Exactly ``k`` clusters by undoing the ``k - 1`` last merges.

    The last merges are the largest ``(height, split_pos)`` pairs, the order in
    which a top-down construction breaks edges.
    """
    n = dendrogram.n
    k = check_n_clusters(k, n)
    breaks = np.zeros(n - 1, dtype=bool)
    top = dendrogram.split_pos[2 * n - k : 2 * n - 1]
    breaks[top - 2] = True
    return _partition_from_breaks(dendrogram, breaks)
