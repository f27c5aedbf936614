"""Command-line driver: load input, run Prim, build the dendrogram, write exports."""

import argparse
import resource
import sys
import tracemalloc

from .dendrogram import build_dendrogram, cut_k, cut_threshold
from .export import (
    dendrogram_to_json,
    export_merge_table,
    export_newick,
    partition_to_csv,
)
from .ingest import DissimilaritySource, load_edge_graph, load_points
from .prim import prim_mst

PROG = "primlink"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{PROG}: error: {message}\n")


def _label_column(value):
    return int(value) if value.lstrip("-").isdigit() else value


def build_parser():
    p = _Parser(
        prog=PROG,
        description="Single-linkage dendrogram via Prim's order, without a distance matrix.",
        allow_abbrev=False,
    )
    p.add_argument("--input", required=True, help="points CSV or 'u v w' edge list")
    p.add_argument("--mode", choices=["points", "graph"], default="points")
    p.add_argument(
        "--metric",
        choices=["euclidean", "squared-euclidean", "manhattan", "chebyshev"],
        default="euclidean",
    )
    p.add_argument("--seed-vertex", type=int, default=0)
    cut = p.add_mutually_exclusive_group()
    cut.add_argument("--cut-height", type=float, help="threshold t: keep edges lighter than t")
    cut.add_argument("--k", type=int, help="number of clusters")
    p.add_argument("--format", choices=["merge", "newick", "json"], default="merge")
    p.add_argument("--output", help="write the serialization here instead of stdout")
    p.add_argument("--labels-out", help="labels CSV path (default: stdout after the serialization)")
    p.add_argument("--graph-n", type=int, help="vertex count in graph mode (default: max id + 1)")
    p.add_argument("--label-column", type=_label_column, help="points mode: row-name column (name or index)")
    p.add_argument("--mem-stats", action="store_true", help="report peak memory on stderr")
    return p


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def run(args, stdout=None):
    stdout = stdout or sys.stdout
    if args.mode == "graph":
        if args.label_column is not None:
            raise ValueError("--label-column only applies to --mode points")
        src = DissimilaritySource(load_edge_graph(args.input, args.graph_n))
        names = None
    else:
        if args.graph_n is not None:
            raise ValueError("--graph-n only applies to --mode graph")
        dataset = load_points(args.input, label_column=args.label_column)
        src = DissimilaritySource(dataset, args.metric)
        names = dataset.row_labels

    result = prim_mst(src, args.seed_vertex)
    dendrogram = build_dendrogram(result)

    partition = None
    if args.cut_height is not None:
        partition = cut_threshold(dendrogram, args.cut_height)
    elif args.k is not None:
        partition = cut_k(dendrogram, args.k)

    if args.format == "merge":
        text = export_merge_table(dendrogram).to_csv()
    elif args.format == "newick":
        text = export_newick(dendrogram, names) + "\n"
    else:
        text = dendrogram_to_json(dendrogram)

    if args.output:
        _write(args.output, text)
    else:
        stdout.write(text)

    if partition is not None:
        labels = partition_to_csv(partition, names)
        if args.labels_out:
            _write(args.labels_out, labels)
        else:
            stdout.write(labels)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.mem_stats:
        tracemalloc.start()
    try:
        status = run(args)
    except (OSError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"{PROG}: error: {msg}", file=sys.stderr)
        return 1
    finally:
        traced = tracemalloc.get_traced_memory()[1] if args.mem_stats else 0
        if args.mem_stats:
            tracemalloc.stop()
    if args.mem_stats:
        # ru_maxrss is KiB on Linux
        rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
        print(f"peak_traced_bytes={traced} max_rss_bytes={rss}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
