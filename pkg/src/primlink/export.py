"""Serializations of a dendrogram: merge table CSV, Newick, JSON, and partition labels."""

import json
import re
from dataclasses import dataclass

import numpy as np


def format_float(x):
    """Shortest round-trip decimal for ``x``, without a trailing ``.0``."""
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


@dataclass(frozen=True, eq=False)
class MergeTable:
    """One row per merge, ascending by ``(height, split_pos)``.

    Leaves carry their original vertex id; the cluster created in row ``i``
    gets id ``n + i``. The layout matches a scipy linkage matrix.
    """

    n: int
    left: np.ndarray
    right: np.ndarray
    height: np.ndarray
    size: np.ndarray

    def __len__(self):
        return len(self.height)

    def rows(self):
        return list(
            zip(self.left.tolist(), self.right.tolist(), self.height.tolist(), self.size.tolist())
        )

    def to_linkage(self):
        return np.column_stack([self.left, self.right, self.height, self.size]).astype(np.float64)

    def to_csv(self):
        lines = ["left,right,height,size"]
        lines += [
            f"{a},{b},{format_float(h)},{s}" for a, b, h, s in self.rows()
        ]
        return "\n".join(lines) + "\n"


def export_merge_table(dendrogram):
    n = dendrogram.n
    internal = slice(n, 2 * n - 1)
    # leaf node p-1 -> original id order[p-1]; internal ids are already n + row
    ids = np.concatenate([dendrogram.order, np.arange(n, 2 * n - 1)])
    left = ids[dendrogram.left[internal]]
    right = ids[dendrogram.right[internal]]
    size = dendrogram.hi[internal] - dendrogram.lo[internal] + 1
    height = np.array(dendrogram.height[internal], dtype=np.float64)
    return MergeTable(n, left, right, height, size)


_NEEDS_QUOTES = re.compile(r"[\s(),:;'\[\]]")


def _newick_label(name):
    if name == "" or _NEEDS_QUOTES.search(name):
        return "'" + name.replace("'", "''") + "'"
    return name


def export_newick(dendrogram, labels=None):
    """Newick text; each branch length is parent height minus child height,
    with leaves at height 0. Leaves are named by ``labels[id]`` or by id."""
    n = dendrogram.n
    if labels is not None:
        labels = [str(s) for s in labels]
        if len(labels) != n:
            raise ValueError(f"got {len(labels)} labels for {n} leaves")

    def leaf_name(node):
        vid = int(dendrogram.order[node])
        return _newick_label(labels[vid] if labels is not None else str(vid))

    def node_height(node):
        return 0.0 if node < n else float(dendrogram.height[node])

    out = []
    # explicit stack: caterpillars are n deep
    stack = [(dendrogram.root, None)]
    while stack:
        node, parent_h = stack.pop()
        if isinstance(node, str):
            out.append(node)
            continue
        suffix = "" if parent_h is None else ":" + format_float(parent_h - node_height(node))
        if node < n:
            out.append(leaf_name(node) + suffix)
            continue
        h = node_height(node)
        out.append("(")
        stack.append((")" + suffix, None))
        stack.append((int(dendrogram.right[node]), h))
        stack.append((",", None))
        stack.append((int(dendrogram.left[node]), h))
    return "".join(out) + ";"


@dataclass
class NewickNode:
    name: str | None = None
    length: float | None = None
    children: list = None

    def __post_init__(self):
        if self.children is None:
            self.children = []


_TOKEN = re.compile(r"\s*('(?:[^']|'')*'|[(),:;]|[^\s(),:;']+)")


def parse_newick(text):
    """Parse a Newick string into a :class:`NewickNode` tree (iteratively)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad Newick near offset {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens or tokens[-1] != ";":
        raise ValueError("Newick string must end with ';'")

    root = NewickNode()
    stack = [root]
    current = root
    i = 0
    while i < len(tokens) - 1:
        tok = tokens[i]
        if tok == "(":
            child = NewickNode()
            current.children.append(child)
            stack.append(child)
            current = child
        elif tok == ",":
            stack.pop()
            child = NewickNode()
            stack[-1].children.append(child)
            stack.append(child)
            current = child
        elif tok == ")":
            stack.pop()
            current = stack[-1]
        elif tok == ":":
            i += 1
            current.length = float(tokens[i])
        else:
            if tok.startswith("'"):
                tok = tok[1:-1].replace("''", "'")
            current.name = tok
        i += 1
    if len(stack) != 1:
        raise ValueError("unbalanced parentheses in Newick string")
    return root


def newick_clusters(text):
    """``(frozenset of leaf names, height)`` for every internal node, heights
    accumulated from leaves at 0 along the left-most path."""
    root = parse_newick(text)
    result = []
    # post-order without recursion
    stack = [(root, False)]
    info = {}
    while stack:
        node, done = stack.pop()
        if not node.children:
            info[id(node)] = (frozenset([node.name]), 0.0)
            continue
        if not done:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children)
            continue
        names = frozenset().union(*(info[id(c)][0] for c in node.children))
        first = node.children[0]
        h = info[id(first)][1] + (first.length or 0.0)
        info[id(node)] = (names, h)
        result.append((names, h))
    return result


def dendrogram_to_json(dendrogram):
    nodes = []
    for node in range(2 * dendrogram.n - 1):
        leaf = dendrogram.is_leaf(node)
        nodes.append(
            {
                "id": node,
                "lo": int(dendrogram.lo[node]),
                "hi": int(dendrogram.hi[node]),
                "height": None if leaf else float(dendrogram.height[node]),
                "split_pos": None if leaf else int(dendrogram.split_pos[node]),
                "left": None if leaf else int(dendrogram.left[node]),
                "right": None if leaf else int(dendrogram.right[node]),
            }
        )
    doc = {
        "n": dendrogram.n,
        "root": dendrogram.root,
        "order": dendrogram.order.tolist(),
        "nodes": nodes,
    }
    return json.dumps(doc, indent=1) + "\n"


def partition_to_csv(partition, names=None):
    """``id,label`` rows, or ``name,label`` when row names are given."""
    labels = partition.labels.tolist()
    if names is None:
        lines = ["id,label"] + [f"{i},{c}" for i, c in enumerate(labels)]
    else:
        lines = ["name,label"] + [f"{_csv_field(s)},{c}" for s, c in zip(names, labels)]
    return "\n".join(lines) + "\n"


def _csv_field(s):
    if any(ch in s for ch in ',"\n\r'):
        return '"' + s.replace('"', '""') + '"'
    return s
