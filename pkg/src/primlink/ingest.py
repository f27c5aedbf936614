"""Point datasets, explicit edge-weighted graphs and the dissimilarity source over them."""

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from ._validation import METRICS, check_metric, check_points, check_vertex


class InputError(ValueError):
    """Raised when an input file cannot be turned into a dataset or graph."""


@dataclass(frozen=True, eq=False)
class Dataset:
    """``n`` points in ``d`` dimensions, rows in original index order."""

    points: np.ndarray
    row_labels: tuple | None = None

    def __post_init__(self):
        points = check_points(self.points)
        if points is self.points:
            points = points.copy()
        points.flags.writeable = False
        object.__setattr__(self, "points", points)
        if self.row_labels is not None:
            labels = tuple(str(s) for s in self.row_labels)
            if len(labels) != points.shape[0]:
                raise ValueError(
                    f"row_labels has length {len(labels)}, expected {points.shape[0]}"
                )
            object.__setattr__(self, "row_labels", labels)

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def d(self):
        return self.points.shape[1]


@dataclass(frozen=True, eq=False)
class EdgeWeightedGraph:
    """Undirected graph on vertices ``0..n-1``.

    Edges are stored once with ``u < v``, sorted by ``(u, v)``; parallel input
    edges are collapsed to their minimum weight.
    """

    n: int
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    @classmethod
    def from_edges(cls, n, edges):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        n = int(n)
        lightest = {}
        for u, v, w in edges:
            u = check_vertex(u, n, "edge endpoint")
            v = check_vertex(v, n, "edge endpoint")
            w = float(w)
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"edge ({u}, {v}) has invalid weight {w!r}")
            key = (u, v) if u < v else (v, u)
            if key not in lightest or w < lightest[key]:
                lightest[key] = w
        keys = sorted(lightest)
        u = np.array([k[0] for k in keys], dtype=np.int64)
        v = np.array([k[1] for k in keys], dtype=np.int64)
        w = np.array([lightest[k] for k in keys], dtype=np.float64)
        for a in (u, v, w):
            a.flags.writeable = False
        return cls(n, u, v, w)

    def edges(self):
        return list(zip(self.u.tolist(), self.v.tolist(), self.w.tolist()))

    def weight(self, i, j):
        """Weight of edge ``{i, j}`` or ``None`` when the vertices are not adjacent."""
        a, b = (i, j) if i < j else (j, i)
        lo = np.searchsorted(self.u, a, side="left")
        hi = np.searchsorted(self.u, a, side="right")
        k = lo + np.searchsorted(self.v[lo:hi], b)
        if k < hi and self.v[k] == b:
            return float(self.w[k])
        return None

    def adjacency(self):
        """CSR arrays ``(indptr, neighbors, weights)`` over both edge directions."""
        src = np.concatenate([self.u, self.v])
        dst = np.concatenate([self.v, self.u])
        wts = np.concatenate([self.w, self.w])
        perm = np.lexsort((dst, src))
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.n), out=indptr[1:])
        return indptr, dst[perm], wts[perm]


@dataclass(frozen=True, eq=False)
class DissimilaritySource:
    """Uniform view of ``d(i, j)`` over either a point dataset or an explicit graph."""

    backing: Dataset | EdgeWeightedGraph
    metric: str = "euclidean"

    def __post_init__(self):
        if isinstance(self.backing, Dataset):
            object.__setattr__(self, "metric", check_metric(self.metric))
        elif not isinstance(self.backing, EdgeWeightedGraph):
            raise TypeError(
                f"backing must be a Dataset or EdgeWeightedGraph, got {type(self.backing).__name__}"
            )

    @classmethod
    def from_points(cls, points, metric="euclidean"):
        return cls(Dataset(points), metric)

    @property
    def mode(self):
        return "points" if isinstance(self.backing, Dataset) else "graph"

    @property
    def n(self):
        return self.backing.n

    @property
    def metric_code(self):
        return METRICS[self.metric]

    def __call__(self, i, j):
        return dissimilarity(self, i, j)


def dissimilarity(src, i, j):
    """Dissimilarity between vertices ``i`` and ``j``.

    Points mode evaluates the metric on demand; graph mode returns the edge
    weight, or ``None`` for a non-adjacent pair.
    """
    i = check_vertex(i, src.n, "i")
    j = check_vertex(j, src.n, "j")
    if i == j:
        raise ValueError("dissimilarity requires i != j")
    if src.mode == "points":
        return float(_kernels.pair_distance(src.backing.points, i, j, src.metric_code))
    return src.backing.weight(i, j)


def _parse_float(field, lineno, col):
    try:
        value = float(field)
    except ValueError:
        raise InputError(
            f"line {lineno}: non-numeric coordinate {field!r} in column {col}"
        ) from None
    if not math.isfinite(value):
        raise InputError(f"line {lineno}: non-finite coordinate {field!r} in column {col}")
    return value


def _is_number(field):
    try:
        float(field)
    except ValueError:
        return False
    return True


def load_points(path, has_header=None, label_column=None):
    """Read a CSV of coordinates, one point per row.

    ``has_header=None`` treats the first row as a header when none of its
    coordinate fields is a number. ``label_column`` is a column name
    (requires a header) or a 0-based index; that column becomes ``row_labels``.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        rows = [(i, r) for i, r in enumerate(csv.reader(fh), start=1) if any(f.strip() for f in r)]
    if not rows:
        raise InputError(f"{path}: empty file")

    first = rows[0][1]
    label_idx = None
    if isinstance(label_column, (int, np.integer)):
        label_idx = int(label_column)
        if not -len(first) <= label_idx < len(first):
            raise InputError(f"{path}: label column {label_idx} out of range")
        label_idx %= len(first)

    if has_header is None:
        coord_fields = [f for c, f in enumerate(first) if c != label_idx]
        has_header = isinstance(label_column, str) or not any(
            _is_number(f) for f in coord_fields
        )
    header = None
    if has_header:
        header = [f.strip() for f in first]
        rows = rows[1:]
        if not rows:
            raise InputError(f"{path}: no data rows after header")

    if isinstance(label_column, str):
        if header is None or label_column not in header:
            raise InputError(f"{path}: label column {label_column!r} not found in header")
        label_idx = header.index(label_column)

    width = len(header) if header is not None else len(rows[0][1])
    coords, labels = [], []
    for lineno, row in rows:
        if len(row) != width:
            raise InputError(f"line {lineno}: expected {width} fields, got {len(row)} (ragged rows)")
        coords.append(
            [_parse_float(f, lineno, c) for c, f in enumerate(row) if c != label_idx]
        )
        if label_idx is not None:
            labels.append(row[label_idx].strip())
    if not coords[0]:
        raise InputError(f"{path}: no coordinate columns")
    return Dataset(np.array(coords, dtype=np.float64), tuple(labels) if label_idx is not None else None)


def load_edge_graph(path, n=None):
    """Read whitespace-separated ``u v w`` lines; ``#`` starts a comment line.

    ``n`` defaults to one more than the largest vertex id seen. Connectivity is
    not checked here.
    """
    path = Path(path)
    edges = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'u v w', got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
                w = float(parts[2])
            except ValueError:
                raise InputError(f"line {lineno}: cannot parse {line!r}") from None
            edges.append((lineno, u, v, w))
    if n is None:
        if not edges:
            raise InputError(f"{path}: no edges and no vertex count given")
        n = max(max(u, v) for _, u, v, _ in edges) + 1
    for lineno, u, v, w in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: vertex id out of range for n={n}")
        if not math.isfinite(w) or w < 0:
            raise InputError(f"line {lineno}: negative or non-finite weight {w!r}")
        if u == v:
            raise InputError(f"line {lineno}: self-loop on vertex {u}")
    return EdgeWeightedGraph.from_edges(n, [(u, v, w) for _, u, v, w in edges])
