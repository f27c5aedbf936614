"""Compiled inner loops for points mode.

The kernels never allocate: every buffer is created by the caller with numpy so
that allocation tracking (tracemalloc) sees the whole working set.
"""

import numba
import numpy as np

EUCLIDEAN = 0
SQEUCLIDEAN = 1
MANHATTAN = 2
CHEBYSHEV = 3


@numba.njit(cache=True, nogil=True)
def pair_distance(X, a, b, metric):
    d = X.shape[1]
    if metric == CHEBYSHEV:
        s = 0.0
        for c in range(d):
            t = abs(X[a, c] - X[b, c])
            if t > s:
                s = t
        return s
    if metric == MANHATTAN:
        s = 0.0
        for c in range(d):
            s += abs(X[a, c] - X[b, c])
        return s
    s = 0.0
    for c in range(d):
        t = X[a, c] - X[b, c]
        s += t * t
    if metric == EUCLIDEAN:
        return np.sqrt(s)
    return s


# Row kernels: distance from X[a] to each of the first m packed rows of P,
# with the same arithmetic, in the same order, as pair_distance.


@numba.njit(cache=True, nogil=True)
def _rows_euclidean(X, a, P, m, out):
    d = X.shape[1]
    for j in range(m):
        s = 0.0
        for c in range(d):
            t = X[a, c] - P[j, c]
            s += t * t
        out[j] = np.sqrt(s)


@numba.njit(cache=True, nogil=True)
def _rows_sqeuclidean(X, a, P, m, out):
    d = X.shape[1]
    for j in range(m):
        s = 0.0
        for c in range(d):
            t = X[a, c] - P[j, c]
            s += t * t
        out[j] = s


@numba.njit(cache=True, nogil=True)
def _rows_manhattan(X, a, P, m, out):
    d = X.shape[1]
    for j in range(m):
        s = 0.0
        for c in range(d):
            s += abs(X[a, c] - P[j, c])
        out[j] = s


@numba.njit(cache=True, nogil=True)
def _rows_chebyshev(X, a, P, m, out):
    d = X.shape[1]
    for j in range(m):
        s = 0.0
        for c in range(d):
            t = abs(X[a, c] - P[j, c])
            if t > s:
                s = t
        out[j] = s


@numba.njit(cache=True, nogil=True)
def prim_dense(X, seed, metric, order, parent, weight, out_ids, out_pts, best, best_parent, dist):
    """Array-scan Prim over the implicit complete graph on the rows of ``X``.

    Scratch buffers, length n - 1: ``out_ids`` (out-vertices), ``out_pts``
    (their coordinates, packed so each step streams through memory), ``best``
    and ``best_parent`` (lightest edge to the fragment and its inside end),
    ``dist`` (distances to the newest fragment vertex). Ties on weight go to
    the smallest out-vertex id.
    """
    n, d = X.shape
    m = 0
    for i in range(n):
        if i != seed:
            out_ids[m] = i
            for c in range(d):
                out_pts[m, c] = X[i, c]
            best[m] = np.inf
            best_parent[m] = seed
            m += 1
    order[0] = seed
    newest = seed
    for k in range(1, n):
        if metric == EUCLIDEAN:
            _rows_euclidean(X, newest, out_pts, m, dist)
        elif metric == SQEUCLIDEAN:
            _rows_sqeuclidean(X, newest, out_pts, m, dist)
        elif metric == MANHATTAN:
            _rows_manhattan(X, newest, out_pts, m, dist)
        else:
            _rows_chebyshev(X, newest, out_pts, m, dist)
        jmin = -1
        wmin = np.inf
        vmin = n
        for j in range(m):
            if dist[j] < best[j]:
                best[j] = dist[j]
                best_parent[j] = newest
            b = best[j]
            if b < wmin or (b == wmin and out_ids[j] < vmin):
                wmin = b
                vmin = out_ids[j]
                jmin = j
        order[k] = vmin
        parent[k - 1] = best_parent[jmin]
        weight[k - 1] = wmin
        newest = vmin
        # swap-remove; scan order does not matter because ties compare ids
        m -= 1
        out_ids[jmin] = out_ids[m]
        best[jmin] = best[m]
        best_parent[jmin] = best_parent[m]
        for c in range(d):
            out_pts[jmin, c] = out_pts[m, c]
