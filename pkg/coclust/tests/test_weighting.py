import math

import numpy as np
import pytest

from coclust_api.errors import InvalidInputError
from coclust_api.weighting import SchemeName, WeightScheme, compute_weights
from tests.helpers import graph_of, random_small_graph


class TestComputeWeights:
    """Test weighting schemes."""

    def test_hws_user_weight(self):
        """Test HWS user weight is degree over sqrt(|E|)."""
        graph = graph_of(("u1", "a"), ("u1", "b"), ("u2", "a"), ("u3", "c"))
        weights = compute_weights(graph, WeightScheme.of("hws"))
        assert weights.w_user[0] == pytest.approx(1.0)
        assert weights.w_item.tolist() == pytest.approx([1 / math.sqrt(3)] * 3)

    def test_cpm_unit(self, k22_graph):
        """Test CpmUnit gives every node weight 1."""
        weights = compute_weights(k22_graph, WeightScheme.of("cpm-unit"))
        assert np.all(weights.joint == 1.0)

    def test_hws_totals(self, rng):
        """Test HWS totals equal sqrt(|E|) and sqrt(n_items)."""
        for _ in range(20):
            graph = random_small_graph(rng, 40)
            weights = compute_weights(graph, WeightScheme.of("hws"))
            assert weights.total_user == pytest.approx(math.sqrt(graph.n_edges), rel=1e-12)
            assert weights.total_item == pytest.approx(math.sqrt(graph.n_items), rel=1e-12)

    def test_cpm_unit_totals(self, rng):
        """Test CpmUnit totals equal the user and item counts exactly."""
        for _ in range(20):
            graph = random_small_graph(rng, 40)
            weights = compute_weights(graph, WeightScheme.of("cpm-unit"))
            assert weights.total_user == graph.n_users
            assert weights.total_item == graph.n_items

    def test_modularity_totals(self, rng):
        """Test Modularity totals equal sqrt(|E|) on both sides."""
        for _ in range(20):
            graph = random_small_graph(rng, 40)
            weights = compute_weights(graph, WeightScheme.of("modularity"))
            assert weights.total_user == pytest.approx(math.sqrt(graph.n_edges), rel=1e-12)
            assert weights.total_item == pytest.approx(math.sqrt(graph.n_edges), rel=1e-12)

    def test_modularity_and_reverse(self, k22_graph):
        """Test degree-based schemes."""
        modularity = compute_weights(k22_graph, WeightScheme.of("modularity"))
        assert modularity.w_item.tolist() == pytest.approx([1.0, 1.0])
        reverse = compute_weights(k22_graph, WeightScheme.of("reverse-hws"))
        assert reverse.w_user.tolist() == pytest.approx([1 / math.sqrt(2)] * 2)
        assert reverse.w_item.tolist() == pytest.approx([1.0, 1.0])

    def test_totals_match_sums(self, rng):
        """Test totals equal array sums and all weights are positive."""
        graph = random_small_graph(rng, 30)
        for name in ("hws", "modularity", "cpm-unit", "reverse-hws"):
            weights = compute_weights(graph, WeightScheme.of(name))
            assert np.all(weights.joint > 0)
            assert weights.total_user == pytest.approx(weights.w_user.sum(), rel=1e-12)
            assert weights.total_item == pytest.approx(weights.w_item.sum(), rel=1e-12)
            assert weights.scheme is SchemeName(name)

    def test_custom_weights(self, two_edge_graph):
        """Test custom weights pass through."""
        weights = compute_weights(two_edge_graph, WeightScheme.custom([0.5, 2.0], [1.0, 3.0]))
        assert weights.total_user == 2.5
        assert weights.total_item == 4.0

    def test_custom_weights_invalid(self, two_edge_graph):
        """Test custom weights of the wrong shape or sign are rejected."""
        with pytest.raises(InvalidInputError):
            compute_weights(two_edge_graph, WeightScheme.custom([1.0], [1.0, 1.0]))
        with pytest.raises(InvalidInputError):
            compute_weights(two_edge_graph, WeightScheme.custom([1.0, 0.0], [1.0, 1.0]))

    def test_unknown_scheme(self):
        """Test unknown and custom names are rejected by ``of``."""
        with pytest.raises(InvalidInputError):
            WeightScheme.of("pagerank")
        with pytest.raises(InvalidInputError):
            WeightScheme.of("custom")

    def test_weights_read_only(self, k22_graph):
        """Test weight arrays are frozen."""
        weights = compute_weights(k22_graph, WeightScheme.of("hws"))
        with pytest.raises(ValueError):
            weights.w_user[0] = 5.0
