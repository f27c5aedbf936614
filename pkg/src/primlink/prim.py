"""Prim's algorithm producing the MST as an attach-edge list in Prim order."""

import heapq
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._validation import check_vertex
from .ingest import Dataset, DissimilaritySource, EdgeWeightedGraph


class DisconnectedGraphError(ValueError):
    """Prim's frontier emptied before every vertex joined the fragment."""

    def __init__(self, unreached):
        self.unreached = sorted(int(v) for v in unreached)
        shown = " ".join(map(str, self.unreached[:20]))
        more = " ..." if len(self.unreached) > 20 else ""
        super().__init__(
            f"graph is disconnected; {len(self.unreached)} unreached vertex ids: {shown}{more}"
        )


@dataclass(frozen=True, eq=False)
class PrimResult:
    """Vertices in the order Prim attached them, plus the attaching MST edges.

    ``order[k - 1]`` is the vertex at (1-based) Prim position ``k``. For
    positions ``k = 2..n`` the edge added at step ``k`` joins ``order[k - 1]``
    to ``parent[k - 2]`` with weight ``weight[k - 2]``, so the edge's own
    position is ``k``.
    """

    order: np.ndarray
    parent: np.ndarray
    weight: np.ndarray
    seed: int

    @property
    def n(self):
        return len(self.order)

    def positions(self):
        """1-based Prim position of every vertex, indexed by vertex id."""
        pos = np.empty(self.n, dtype=np.int64)
        pos[self.order] = np.arange(1, self.n + 1)
        return pos

    def attach(self, k):
        """``(parent, weight)`` of the edge added at position ``k`` (2 <= k <= n)."""
        if not 2 <= k <= self.n:
            raise IndexError(f"position {k} has no attach edge (n={self.n})")
        return int(self.parent[k - 2]), float(self.weight[k - 2])

    def edges(self):
        """MST edges ``(parent, child, weight)`` in Prim order."""
        return list(
            zip(self.parent.tolist(), self.order[1:].tolist(), self.weight.tolist())
        )


def _freeze(*arrays):
    for a in arrays:
        a.flags.writeable = False


def _prim_points(dataset, metric_code, seed):
    n = dataset.n
    order = np.empty(n, dtype=np.int64)
    parent = np.empty(n - 1, dtype=np.int64)
    weight = np.empty(n - 1, dtype=np.float64)
    out_ids = np.empty(n - 1, dtype=np.int64)
    out_pts = np.empty((n - 1, dataset.d), dtype=np.float64)
    best = np.empty(n - 1, dtype=np.float64)
    best_parent = np.empty(n - 1, dtype=np.int64)
    dist = np.empty(n - 1, dtype=np.float64)
    _kernels.prim_dense(
        dataset.points, seed, metric_code, order, parent, weight,
        out_ids, out_pts, best, best_parent, dist,
    )
    return order, parent, weight


def _prim_graph(graph, seed):
    n = graph.n
    indptr, nbrs, wts = graph.adjacency()
    indptr, nbrs, wts = indptr.tolist(), nbrs.tolist(), wts.tolist()
    joined = bytearray(n)
    order, parent, weight = [seed], [], []
    joined[seed] = 1
    # (weight, outside vertex, inside vertex): heap order realises the
    # smallest-outside-id tie-break
    heap = [(wts[e], nbrs[e], seed) for e in range(indptr[seed], indptr[seed + 1])]
    heapq.heapify(heap)
    while heap and len(order) < n:
        w, v, u = heapq.heappop(heap)
        if joined[v]:
            continue
        joined[v] = 1
        order.append(v)
        parent.append(u)
        weight.append(w)
        for e in range(indptr[v], indptr[v + 1]):
            x = nbrs[e]
            if not joined[x]:
                heapq.heappush(heap, (wts[e], x, v))
    if len(order) < n:
        raise DisconnectedGraphError(i for i in range(n) if not joined[i])
    return (
        np.array(order, dtype=np.int64),
        np.array(parent, dtype=np.int64),
        np.array(weight, dtype=np.float64),
    )


def prim_mst(src, seed=0):
    """Run Prim's algorithm from ``seed``.

    ``src`` is a :class:`DissimilaritySource`, or a bare :class:`Dataset` /
    :class:`EdgeWeightedGraph` (datasets default to the euclidean metric).
    Each step attaches the out-vertex with the lightest edge to the fragment;
    equal weights go to the smallest out-vertex id.

    Points mode scans per-vertex frontier arrays, O(n^2) time and O(n) extra
    memory, and never stores pairwise distances. Graph mode uses a binary heap
    over adjacency lists and raises :class:`DisconnectedGraphError` when some
    vertices cannot be reached.
    """
    if isinstance(src, (Dataset, EdgeWeightedGraph)):
        src = DissimilaritySource(src)
    n = src.n
    if n < 1:
        raise ValueError("prim_mst needs at least one vertex")
    seed = check_vertex(seed, n, "seed")
    if n == 1:
        order = np.array([seed], dtype=np.int64)
        parent = np.empty(0, dtype=np.int64)
        weight = np.empty(0, dtype=np.float64)
    elif src.mode == "points":
        order, parent, weight = _prim_points(src.backing, src.metric_code, seed)
    else:
        order, parent, weight = _prim_graph(src.backing, seed)
    _freeze(order, parent, weight)
    return PrimResult(order, parent, weight, seed)


def mst_total_weight(result):
    """Exactly rounded sum of the attach weights (independent of summation order)."""
    return math.fsum(result.weight.tolist())
