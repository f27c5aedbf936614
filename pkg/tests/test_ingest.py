import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from primlink import (
    Dataset,
    DissimilaritySource,
    EdgeWeightedGraph,
    InputError,
    dissimilarity,
    load_edge_graph,
    load_points,
)
from primlink.oracle import distance_matrix


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_load_points_single_column(tmp_path):
    ds = load_points(write(tmp_path, "p.csv", "0\n1\n3\n7"))
    assert (ds.n, ds.d) == (4, 1)
    assert ds.points.tolist() == [[0.0], [1.0], [3.0], [7.0]]
    assert ds.row_labels is None


def test_load_points_header(tmp_path):
    ds = load_points(write(tmp_path, "p.csv", "x,y\n0,0\n1,2\n3,4\n"), has_header=True)
    assert (ds.n, ds.d) == (3, 2)
    # autodetected as well
    assert load_points(tmp_path / "p.csv").n == 3


def test_load_points_non_numeric(tmp_path):
    with pytest.raises(InputError, match="non-numeric"):
        load_points(write(tmp_path, "p.csv", "0,1\n1,foo\n"))
    with pytest.raises(InputError, match="non-numeric"):
        load_points(write(tmp_path, "q.csv", "1,foo\n0,1\n"))


def test_load_points_ragged(tmp_path):
    with pytest.raises(InputError, match="ragged"):
        load_points(write(tmp_path, "p.csv", "0,1\n1\n"))


def test_load_points_empty(tmp_path):
    with pytest.raises(InputError, match="empty"):
        load_points(write(tmp_path, "p.csv", "\n\n"))


def test_load_points_non_finite(tmp_path):
    with pytest.raises(InputError, match="non-finite"):
        load_points(write(tmp_path, "p.csv", "0,1\ninf,2\n"))


def test_load_points_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_points(tmp_path / "nope.csv")


def test_load_points_label_column_by_name(tmp_path):
    ds = load_points(write(tmp_path, "p.csv", "name,x,y\na,0,0\nb,1,1\n"), label_column="name")
    assert ds.row_labels == ("a", "b")
    assert ds.points.tolist() == [[0.0, 0.0], [1.0, 1.0]]


def test_load_points_label_column_by_index(tmp_path):
    ds = load_points(write(tmp_path, "p.csv", "0,0,a\n1,1,b\n"), label_column=2)
    assert ds.row_labels == ("a", "b")
    assert ds.d == 2
    with pytest.raises(InputError, match="not found"):
        load_points(tmp_path / "p.csv", label_column="name")


def test_dataset_validation():
    with pytest.raises(ValueError):
        Dataset(np.array([[0.0], [np.nan]]))
    with pytest.raises(ValueError, match="row_labels"):
        Dataset(np.zeros((2, 1)), ("a",))


def test_dataset_is_immutable():
    raw = np.zeros((3, 2))
    ds = Dataset(raw)
    raw[0, 0] = 5.0
    assert ds.points[0, 0] == 0.0
    with pytest.raises(ValueError):
        ds.points[0, 0] = 1.0


def test_load_edge_graph_basic(tmp_path):
    g = load_edge_graph(write(tmp_path, "g.txt", "0 1 1.0\n1 2 2.0\n"), 3)
    assert g.n == 3
    assert g.edges() == [(0, 1, 1.0), (1, 2, 2.0)]


def test_load_edge_graph_dedup_min(tmp_path):
    g = load_edge_graph(write(tmp_path, "g.txt", "# parallel\n0 1 5.0\n1 0 2.0\n"), 2)
    assert g.edges() == [(0, 1, 2.0)]


def test_load_edge_graph_errors(tmp_path):
    with pytest.raises(InputError, match="out of range"):
        load_edge_graph(write(tmp_path, "a.txt", "0 3 1.0\n"), 3)
    with pytest.raises(InputError, match="negative"):
        load_edge_graph(write(tmp_path, "b.txt", "0 1 -1.0\n"), 3)
    with pytest.raises(InputError, match="non-finite"):
        load_edge_graph(write(tmp_path, "c.txt", "0 1 nan\n"), 3)
    with pytest.raises(InputError, match="self-loop"):
        load_edge_graph(write(tmp_path, "d.txt", "1 1 1\n"), 3)
    with pytest.raises(InputError, match="expected"):
        load_edge_graph(write(tmp_path, "e.txt", "0 1\n"), 3)


def test_load_edge_graph_infers_n(tmp_path):
    assert load_edge_graph(write(tmp_path, "g.txt", "0 4 1\n")).n == 5


def test_dissimilarity_examples():
    assert dissimilarity(DissimilaritySource.from_points([[0.0], [3.0]]), 0, 1) == 3.0
    assert dissimilarity(DissimilaritySource.from_points([[0.0, 0.0], [3.0, 4.0]]), 0, 1) == 5.0
    g = EdgeWeightedGraph.from_edges(3, [(0, 1, 1.0)])
    src = DissimilaritySource(g)
    assert dissimilarity(src, 0, 2) is None
    assert dissimilarity(src, 1, 0) == 1.0


def test_dissimilarity_metrics():
    pts = [[0.0, 0.0], [3.0, -4.0]]
    got = {m: DissimilaritySource.from_points(pts, m)(0, 1) for m in
           ("euclidean", "squared-euclidean", "manhattan", "chebyshev")}
    assert got == {"euclidean": 5.0, "squared-euclidean": 25.0, "manhattan": 7.0, "chebyshev": 4.0}
    assert DissimilaritySource.from_points(pts, "sqeuclidean").metric == "squared-euclidean"
    with pytest.raises(ValueError, match="unknown metric"):
        DissimilaritySource.from_points(pts, "cosine")


def test_dissimilarity_preconditions():
    src = DissimilaritySource.from_points([[0.0], [1.0]])
    with pytest.raises(ValueError):
        dissimilarity(src, 0, 0)
    with pytest.raises(ValueError):
        dissimilarity(src, 0, 2)


finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(
    pts=arrays(np.float64, st.tuples(st.integers(2, 6), st.integers(1, 4)), elements=finite),
    metric=st.sampled_from(["euclidean", "squared-euclidean", "manhattan", "chebyshev"]),
)
def test_dissimilarity_symmetric_pure_and_matches_oracle(pts, metric):
    src = DissimilaritySource.from_points(pts, metric)
    ref = distance_matrix(pts, metric)
    n = len(pts)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            d = src(i, j)
            assert d == src(j, i)
            assert d == src(i, j)
            assert d >= 0
            assert d == ref[i, j]
