from itertools import combinations
from math import comb

import numpy as np
import pytest

from coclust_api.errors import InvalidInputError
from coclust_api.metrics import (
    GiniScope,
    accl,
    ari,
    cluster_size_histogram,
    cluster_sizes,
    cross_cluster_edges,
    gini,
    gini_by_scope,
    pair_item_clusters,
)
from coclust_api.sketch import SketchAssignment
from tests.helpers import graph_of, random_labeling


def pair_counting_ari(a, b):
    """ARI from agreements over all node pairs."""
    same_both = same_a = same_b = 0
    for i, j in combinations(range(len(a)), 2):
        in_a, in_b = a[i] == a[j], b[i] == b[j]
        same_a += in_a
        same_b += in_b
        same_both += in_a and in_b
    total = comb(len(a), 2)
    expected = same_a * same_b / total
    maximum = (same_a + same_b) / 2
    if maximum == expected:
        return 1.0
    return (same_both - expected) / (maximum - expected)


class TestGini:
    """Test the Gini coefficient of cluster sizes."""

    def test_equal_sizes(self):
        """Test equal sizes give 0."""
        assert gini([5, 5, 5, 5]) == pytest.approx(0.0, abs=1e-12)

    def test_one_and_three(self):
        """Test sizes [1, 3] give 0.25."""
        assert gini([1, 3]) == pytest.approx(0.25, abs=1e-12)
        assert gini([3, 1]) == pytest.approx(0.25, abs=1e-12)

    def test_single_cluster(self):
        """Test a single cluster gives 0."""
        assert gini([1]) == 0.0

    def test_scale_invariant(self):
        """Test multiplying every size by a constant leaves the coefficient unchanged."""
        sizes = [1, 2, 2, 7, 11]
        for factor in (2, 3, 10, 1000):
            assert gini([factor * s for s in sizes]) == pytest.approx(gini(sizes), abs=1e-12)

    def test_grows_with_imbalance(self):
        """Test gini([1, n]) rises strictly with n from 0 at n = 1."""
        values = [gini([1, n]) for n in range(1, 11)]
        assert values[0] == pytest.approx(0.0, abs=1e-12)
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_invalid_sizes(self):
        """Test empty and non-positive sizes are rejected."""
        with pytest.raises(InvalidInputError):
            gini([])
        with pytest.raises(InvalidInputError):
            gini([2, 0])

    def test_scopes(self):
        """Test user, item and joint scopes count the right members."""
        graph = graph_of(("a", "x"), ("b", "x"), ("c", "y"))
        labels = [0, 0, 1, 0, 1]
        assert cluster_sizes(graph, labels, GiniScope.USER).tolist() == [2, 1]
        assert cluster_sizes(graph, labels, GiniScope.ITEM).tolist() == [1, 1]
        assert cluster_sizes(graph, labels, GiniScope.JOINT).tolist() == [3, 2]
        assert gini_by_scope(graph, labels, GiniScope.ITEM) == pytest.approx(0.0, abs=1e-12)


class TestAccl:
    """Test averaged cross-cluster links."""

    def test_one_cluster(self, k22_graph):
        """Test one cluster gives 0."""
        assert accl(k22_graph, [0, 0, 0, 0]) == 0.0

    def test_one_cross_edge(self):
        """Test two clusters joined by one edge give 1.0."""
        graph = graph_of(("a", "x"), ("b", "y"), ("a", "y"))
        labels = [0, 1, 0, 1]
        assert cross_cluster_edges(graph, labels) == 1
        assert accl(graph, labels) == 1.0

    def test_planted_blocks(self, planted_blocks):
        """Test the planted labeling of disconnected blocks has no cross links."""
        graph, truth = planted_blocks
        assert accl(graph, truth) == 0.0


class TestHistogram:
    """Test cluster size histograms."""

    def test_small(self):
        """Test labels [0, 0, 1]."""
        assert cluster_size_histogram([0, 0, 1]) == {0: 2, 1: 1}

    def test_singletons(self):
        """Test n singletons give n entries of size 1."""
        histogram = cluster_size_histogram(np.arange(7))
        assert len(histogram) == 7
        assert set(histogram.values()) == {1}

    def test_sizes_sum_to_nodes(self, rng):
        """Test sizes always sum to the node count."""
        for _ in range(20):
            n = int(rng.integers(1, 200))
            assert sum(cluster_size_histogram(random_labeling(rng, n)).values()) == n


class TestAri:
    """Test the adjusted Rand index."""

    def test_identical(self):
        """Test identical labelings give 1."""
        assert ari([0, 0, 1, 1, 2], [0, 0, 1, 1, 2]) == 1.0

    def test_permuted_labels(self):
        """Test renaming labels keeps ARI at 1."""
        assert ari([0, 0, 1, 1, 2], [5, 5, 3, 3, 9]) == pytest.approx(1.0)

    def test_independent(self, rng):
        """Test independent random labelings score near 0."""
        a = rng.integers(0, 10, size=1000)
        b = rng.integers(0, 10, size=1000)
        assert abs(ari(a, b)) < 0.05

    def test_symmetric(self, rng):
        """Test swapping the two labelings gives the same score."""
        for _ in range(20):
            n = int(rng.integers(2, 30))
            a, b = random_labeling(rng, n), random_labeling(rng, n)
            assert ari(a, b) == pytest.approx(ari(b, a), abs=1e-12)

    def test_matches_pair_counting(self, rng):
        """Test ARI agrees with counting node pairs directly on small labelings."""
        for _ in range(30):
            n = int(rng.integers(2, 13))
            a, b = random_labeling(rng, n), random_labeling(rng, n)
            assert ari(a, b) == pytest.approx(pair_counting_ari(a, b), abs=1e-9)

    def test_length_mismatch(self):
        """Test labelings must have equal length."""
        with pytest.raises(InvalidInputError):
            ari([0, 1], [0, 1, 2])


class TestPairItemClusters:
    """Test rebuilding joint labels from a saved assignment."""

    def test_majority_partner(self):
        """Test each item cluster joins the user cluster it shares most edges with."""
        graph = graph_of(("a", "x"), ("a", "y"), ("b", "y"), ("c", "z"))
        assignment = SketchAssignment(
            user_primary=np.array([0, 0, 1]), item_cluster=np.array([0, 0, 1]),
            k_user=2, k_item=2, gamma=0.0, scheme="hws",
        )
        assert pair_item_clusters(graph, assignment).tolist() == [0, 0, 1, 0, 0, 1]

    def test_size_mismatch(self, k22_graph):
        """Test an assignment for another graph size is rejected."""
        assignment = SketchAssignment(
            user_primary=np.array([0]), item_cluster=np.array([0]), k_user=1, k_item=1, gamma=0.0, scheme="hws",
        )
        with pytest.raises(InvalidInputError):
            pair_item_clusters(k22_graph, assignment)
