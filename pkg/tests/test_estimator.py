import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler
from sklearn.utils.estimator_checks import parametrize_with_checks

from primlink import EdgeWeightedGraph, PrimSingleLinkage
from primlink.oracle import canonical_labels, distance_matrix, naive_single_linkage, partition_at


@parametrize_with_checks([PrimSingleLinkage()])
def test_sklearn_compatible(estimator, check):
    check(estimator)


def test_fit_four_points(four_points):
    est = PrimSingleLinkage(n_clusters=2).fit(four_points)
    assert est.labels_.tolist() == [0, 0, 0, 1]
    assert est.n_clusters_ == 2
    assert est.order_.tolist() == [0, 1, 2, 3]
    assert est.children_.tolist() == [[0, 1], [4, 2], [5, 3]]
    assert est.distances_.tolist() == [1.0, 2.0, 4.0]
    assert est.n_features_in_ == 1


def test_distance_threshold(four_points):
    est = PrimSingleLinkage(None, distance_threshold=1.5).fit(four_points)
    assert est.labels_.tolist() == [0, 0, 1, 2]
    assert est.cut(n_clusters=4).tolist() == [0, 1, 2, 3]
    assert est.cut(distance_threshold=10).tolist() == [0, 0, 0, 0]


def test_cut_params_validated(four_points):
    with pytest.raises(ValueError, match="exactly one"):
        PrimSingleLinkage(2, distance_threshold=1.0).fit(four_points)
    with pytest.raises(ValueError, match="exactly one"):
        PrimSingleLinkage(None).fit(four_points)
    with pytest.raises(ValueError, match="k=5"):
        PrimSingleLinkage(5).fit(four_points)
    with pytest.raises(ValueError, match="unknown metric"):
        PrimSingleLinkage(metric="cosine").fit(four_points)
    with pytest.raises(ValueError, match="seed"):
        PrimSingleLinkage(seed_vertex=9).fit(four_points)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        PrimSingleLinkage().cut(n_clusters=2)


def test_fit_graph():
    g = EdgeWeightedGraph.from_edges(4, [(0, 1, 1.0), (1, 2, 5.0), (2, 3, 1.0), (0, 3, 9.0)])
    est = PrimSingleLinkage(2).fit(g)
    assert est.labels_.tolist() == [0, 0, 1, 1]
    assert est.distances_.tolist() == [1.0, 1.0, 5.0]


def test_params_and_clone():
    est = PrimSingleLinkage(3, metric="manhattan", seed_vertex=2)
    assert est.get_params() == {
        "n_clusters": 3,
        "distance_threshold": None,
        "metric": "manhattan",
        "seed_vertex": 2,
    }
    twin = clone(est).set_params(n_clusters=4)
    assert twin.n_clusters == 4 and est.n_clusters == 3


def test_in_pipeline_matches_oracle(rng):
    pts = rng.normal(size=(70, 3)) * [1.0, 10.0, 100.0]
    labels = make_pipeline(StandardScaler(), PrimSingleLinkage(n_clusters=4)).fit_predict(pts)
    scaled = StandardScaler().fit_transform(pts)
    rows = naive_single_linkage(distance_matrix(scaled))
    t = (rows[-4][2] + rows[-3][2]) / 2
    assert np.array_equal(canonical_labels(labels), partition_at(rows, 70, t))


def test_merge_table_method(four_points):
    est = PrimSingleLinkage().fit(four_points)
    assert est.merge_table().rows()[-1] == (5, 3, 4.0, 4)
