"""Timing and peak-memory benchmarks for points mode on seeded uniform point clouds.

Run as ``python -m primlink.bench --sizes 1000 2000 4000 8000``; emits CSV
``n,ms,peak_bytes,weight`` on stdout.
"""

import argparse
import sys
import time
import tracemalloc
from dataclasses import dataclass, field

import numpy as np

from .dendrogram import build_dendrogram
from .export import format_float
from .ingest import Dataset, DissimilaritySource
from .prim import mst_total_weight, prim_mst

# documented peak-memory budget for points mode, bytes per point (measured ~185 at d=2)
BYTES_PER_POINT = 512


def memory_budget(n, d=2):
    """Upper bound on peak bytes for ``n`` points: ``BYTES_PER_POINT * n`` plus the
    coordinates themselves beyond two dimensions."""
    return BYTES_PER_POINT * n + 8 * max(0, d - 2) * n


@dataclass(frozen=True)
class BenchRecord:
    n: int
    ms: float
    peak_bytes: int
    weight: float


@dataclass
class BenchReport:
    d: int
    seed: int
    records: list = field(default_factory=list)

    def to_csv(self):
        lines = ["n,ms,peak_bytes,weight"]
        lines += [
            f"{r.n},{r.ms:.3f},{r.peak_bytes},{format_float(r.weight)}" for r in self.records
        ]
        return "\n".join(lines) + "\n"

    def memory_fit(self):
        """Least-squares line ``peak_bytes ~ slope * n + intercept`` and its R^2."""
        n = np.array([r.n for r in self.records], dtype=np.float64)
        m = np.array([r.peak_bytes for r in self.records], dtype=np.float64)
        slope, intercept = np.polyfit(n, m, 1)
        resid = m - (slope * n + intercept)
        total = np.sum((m - m.mean()) ** 2)
        r2 = 1.0 - np.sum(resid**2) / total if total > 0 else 1.0
        return float(slope), float(intercept), float(r2)


def uniform_cube(n, d, seed):
    return np.random.default_rng(seed).random((n, d))


def _pipeline(points, metric):
    src = DissimilaritySource(Dataset(points), metric)
    result = prim_mst(src, 0)
    build_dendrogram(result)
    return result


def peak_memory(points, metric="euclidean"):
    """Peak bytes allocated while building the MST and dendrogram for ``points``.

    The compiled kernels are loaded first so one-off code loading is not counted.
    """
    _pipeline(points[:2], metric)
    was_tracing = tracemalloc.is_tracing()
    if not was_tracing:
        tracemalloc.start()
    try:
        tracemalloc.reset_peak()
        base = tracemalloc.get_traced_memory()[0]
        _pipeline(points, metric)
        peak = tracemalloc.get_traced_memory()[1]
    finally:
        if not was_tracing:
            tracemalloc.stop()
    return peak - base


def run_bench(sizes, d=2, seed=42, repeats=3, metric="euclidean"):
    sizes = [int(s) for s in sizes]
    if any(s < 2 for s in sizes):
        raise ValueError("benchmark sizes must be >= 2")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("benchmark sizes must be strictly increasing")
    # load the kernels outside the timed region
    _pipeline(uniform_cube(4, d, seed), metric)

    report = BenchReport(d=d, seed=seed)
    for n in sizes:
        points = uniform_cube(n, d, seed)
        best = float("inf")
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter()
            result = _pipeline(points, metric)
            best = min(best, time.perf_counter() - t0)
        report.records.append(
            BenchRecord(n, best * 1e3, peak_memory(points, metric), mst_total_weight(result))
        )
    return report


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m primlink.bench", description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 4000, 8000])
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--rng-seed", type=int, default=42)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args(argv)
    report = run_bench(args.sizes, args.dim, args.rng_seed, args.repeats)
    sys.stdout.write(report.to_csv())
    slope, _, r2 = report.memory_fit() if len(report.records) >= 2 else (float("nan"),) * 3
    print(f"# memory slope {slope:.1f} bytes/point, R^2 {r2:.4f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
