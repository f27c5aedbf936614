"""Brute-force reference implementations for tests.

Nothing here shares code with the Prim / interval pipeline. Every routine
materialises whatever it needs (including the full distance matrix) and is
meant for n up to a few hundred.
"""

import math
from collections import defaultdict, deque

import numpy as np


def distance_matrix(points, metric="euclidean"):
    """Dense pairwise distances, evaluated pair by pair with plain Python floats."""
    X = np.asarray(points, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    rows = X.tolist()
    n = len(rows)

    def dist(a, b):
        diffs = [x - y for x, y in zip(a, b)]
        if metric == "chebyshev":
            return max(abs(t) for t in diffs)
        if metric == "manhattan":
            s = 0.0
            for t in diffs:
                s += abs(t)
            return s
        s = 0.0
        for t in diffs:
            s += t * t
        if metric in ("squared-euclidean", "sqeuclidean"):
            return s
        if metric != "euclidean":
            raise ValueError(f"unknown metric {metric!r}")
        return math.sqrt(s)

    m = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = m[j, i] = dist(rows[i], rows[j])
    return m


class _DisjointSets:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def naive_single_linkage(m):
    """Agglomerative single linkage on a full distance matrix.

    Returns rows ``(left, right, height, size)`` in merge order; leaves are
    ids ``0..n-1`` and the cluster formed in row ``i`` is ``n + i``. Ties on
    distance go to the pair with the smallest (min member of first cluster,
    min member of second cluster).
    """
    D = np.array(m, dtype=np.float64)
    n = D.shape[0]
    # slot i holds the cluster whose smallest member is i
    active = np.ones(n, dtype=bool)
    cluster_id = list(range(n))
    sizes = [1] * n
    np.fill_diagonal(D, np.inf)
    rows = []
    for step in range(n - 1):
        masked = np.where(active[:, None] & active[None, :], D, np.inf)
        masked[np.tril_indices(n)] = np.inf
        flat = int(np.argmin(masked))  # row-major: smallest i, then smallest j
        i, j = divmod(flat, n)
        h = float(masked[i, j])
        rows.append((cluster_id[i], cluster_id[j], h, sizes[i] + sizes[j]))
        # single linkage update: distance to the union is the smaller one
        D[i, :] = np.minimum(D[i, :], D[j, :])
        D[:, i] = D[i, :]
        D[i, i] = np.inf
        active[j] = False
        sizes[i] += sizes[j]
        cluster_id[i] = n + step
    return rows


def partition_at(rows, n, t):
    """Canonical labels after applying every merge with height strictly below ``t``."""
    ds = _DisjointSets(2 * n - 1)
    for step, (a, b, h, _) in enumerate(rows):
        if h < t:
            ds.union(a, n + step)
            ds.union(b, n + step)
    return canonical_labels([ds.find(i) for i in range(n)])


def canonical_labels(labels):
    """Relabel so clusters are numbered by their smallest member id."""
    seen = {}
    out = np.empty(len(labels), dtype=np.int64)
    for i, c in enumerate(labels):
        c = int(c)
        if c not in seen:
            seen[c] = len(seen)
        out[i] = seen[c]
    return out


def _edge_list(g):
    if isinstance(g, np.ndarray):
        n = g.shape[0]
        return n, [(float(g[i, j]), i, j) for i in range(n) for j in range(i + 1, n)]
    n = g.n
    return n, [(w, u, v) for u, v, w in g.edges()]


def kruskal_edges(g):
    """MST edges ``(u, v, w)`` of a distance matrix or EdgeWeightedGraph by sort + union-find."""
    n, edges = _edge_list(g)
    edges.sort()
    ds = _DisjointSets(n)
    tree = []
    for w, u, v in edges:
        if ds.union(u, v):
            tree.append((u, v, w))
    if len(tree) != n - 1:
        raise ValueError("input graph is disconnected")
    return tree


def kruskal_weight(g):
    """Exactly rounded MST weight."""
    return math.fsum(w for _, _, w in kruskal_edges(g))


def components_after_removal(mst_edges, removed=(), n=None):
    """Connected components (canonical labels) of a tree after deleting ``removed``.

    Edges are ``(u, v)`` or ``(u, v, w)``; removal matches the unordered pair.
    """
    pairs = [(int(e[0]), int(e[1])) for e in mst_edges]
    if n is None:
        n = len(pairs) + 1
    if len(pairs) != n - 1:
        raise ValueError(f"not a tree: {len(pairs)} edges for {n} vertices")
    adj = defaultdict(list)
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    cut = {frozenset((int(e[0]), int(e[1]))) for e in removed}

    label = [-1] * n
    next_label = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = next_label
        queue = deque([(start, -1)])
        while queue:
            x, came_from = queue.popleft()
            for y in adj[x]:
                if y == came_from or frozenset((x, y)) in cut:
                    continue
                if label[y] >= 0:
                    raise ValueError("not a tree: cycle detected")
                label[y] = next_label
                queue.append((y, x))
        next_label += 1
    return np.array(label, dtype=np.int64)
