"""Input validation helpers shared by the loaders, the Prim core and the estimator."""

import numbers

import numpy as np
from sklearn.utils import check_array

# canonical metric name -> kernel code
METRICS = {
    "euclidean": 0,
    "squared-euclidean": 1,
    "manhattan": 2,
    "chebyshev": 3,
}

_METRIC_ALIASES = {
    "sqeuclidean": "squared-euclidean",
    "cityblock": "manhattan",
    "l2": "euclidean",
    "l1": "manhattan",
}


def check_metric(metric):
    """Return the canonical name for ``metric`` or raise ``ValueError``."""
    if not isinstance(metric, str):
        raise ValueError(f"metric must be a string, got {metric!r}")
    name = _METRIC_ALIASES.get(metric, metric)
    if name not in METRICS:
        raise ValueError(
            f"unknown metric {metric!r}; expected one of {sorted(METRICS)}"
        )
    return name


def check_points(X, allow_1d=True):
    """Coerce ``X`` to a C-contiguous float64 array of shape (n, d) with finite values.

    With ``allow_1d`` a flat sequence is read as n one-dimensional points.
    """
    X = np.asarray(X) if not hasattr(X, "shape") else X
    if allow_1d and getattr(X, "ndim", 2) == 1:
        X = np.asarray(X).reshape(-1, 1)
    return check_array(
        X,
        dtype=np.float64,
        order="C",
        ensure_all_finite=True,
        ensure_min_samples=1,
        copy=False,
    )


def check_vertex(v, n, name="vertex"):
    if not isinstance(v, numbers.Integral) or isinstance(v, bool):
        raise ValueError(f"{name} must be an integer, got {v!r}")
    if not 0 <= v < n:
        raise ValueError(f"{name} {v} out of range for n={n}")
    return int(v)


def check_threshold(t):
    t = float(t)
    if np.isnan(t) or t < 0:
        raise ValueError(f"threshold must be a non-negative number, got {t!r}")
    return t


def check_n_clusters(k, n):
    if not isinstance(k, numbers.Integral) or isinstance(k, bool):
        raise ValueError(f"number of clusters must be an integer, got {k!r}")
    if not 1 <= k <= n:
        raise ValueError(f"number of clusters k={k} must satisfy 1 <= k <= n={n}")
    return int(k)
