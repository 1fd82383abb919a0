import numpy as np
import pytest
from scipy.sparse.csgraph import connected_components

from coclust_api.errors import InvalidInputError
from coclust_api.metrics import ari
from coclust_api.objective import objective_pairsum
from coclust_api.solver import SolverConfig, run_basic
from coclust_api.synth import (
    HARD_MAX_NODES,
    brute_force_optimum,
    planted_bipartite,
    random_bipartite,
    restricted_growth_strings,
)
from coclust_api.weighting import WeightScheme, compute_weights
from tests.helpers import graph_of, random_small_graph


class TestPlantedBipartite:
    """Test the planted-partition generator."""

    def test_disjoint_complete_blocks(self):
        """Test p_in 1 and p_out 0 give disjoint complete blocks."""
        graph, truth = planted_bipartite(2, 3, 3, 1.0, 0.0, seed=0)
        assert graph.n_edges == 18
        n_components, component = connected_components(graph.adjacency(), directed=False)
        assert n_components == 2
        assert ari(component, truth) == 1.0

    def test_empty_rejected(self):
        """Test zero probabilities produce no graph."""
        with pytest.raises(InvalidInputError):
            planted_bipartite(2, 3, 3, 0.0, 0.0, seed=0)

    def test_bad_arguments(self):
        """Test invalid probabilities and block counts are rejected."""
        with pytest.raises(InvalidInputError):
            planted_bipartite(2, 3, 3, 1.5, 0.0, seed=0)
        with pytest.raises(InvalidInputError):
            planted_bipartite(0, 3, 3, 1.0, 0.0, seed=0)

    def test_seeded(self):
        """Test a fixed seed reproduces the graph."""
        first, truth_a = planted_bipartite(3, 4, 4, 0.6, 0.1, seed=42)
        second, truth_b = planted_bipartite(3, 4, 4, 0.6, 0.1, seed=42)
        assert list(first.token_pairs()) == list(second.token_pairs())
        assert np.array_equal(truth_a, truth_b)


class TestRandomBipartite:
    """Test the uniform random generator."""

    def test_complete(self):
        """Test requesting every pair gives the complete graph."""
        graph = random_bipartite(4, 5, 20, seed=1)
        assert (graph.n_users, graph.n_items, graph.n_edges) == (4, 5, 20)

    def test_exact_edge_count(self):
        """Test the edge count is exact after dedup."""
        for seed in range(5):
            assert random_bipartite(100, 80, 700, seed=seed).n_edges == 700

    def test_seeded(self):
        """Test a fixed seed reproduces the graph."""
        a = random_bipartite(50, 50, 300, seed=3)
        b = random_bipartite(50, 50, 300, seed=3)
        assert list(a.token_pairs()) == list(b.token_pairs())

    def test_too_many_edges(self):
        """Test more edges than pairs are rejected."""
        with pytest.raises(InvalidInputError):
            random_bipartite(2, 2, 5, seed=0)


class TestOracle:
    """Test exhaustive search."""

    def test_restricted_growth_strings(self):
        """Test partitions of 4 elements are the 15 Bell-number strings in order."""
        strings = list(restricted_growth_strings(4))
        assert len(strings) == 15
        assert strings[0] == [0, 0, 0, 0]
        assert strings[-1] == [0, 1, 2, 3]
        assert strings == sorted(strings)

    def test_two_edge_instance(self, two_edge_graph):
        """Test the 2×2 two-edge instance has optimum 1.0 on the matched pairs."""
        weights = compute_weights(two_edge_graph, WeightScheme.of("cpm-unit"))
        labels, score = brute_force_optimum(two_edge_graph, weights, 0.5)
        assert score == pytest.approx(1.0)
        assert labels[0] == labels[2] and labels[1] == labels[3] and labels[0] != labels[1]

    def test_gamma_zero_connected(self, k22_graph):
        """Test gamma 0 on a connected graph is optimized by one cluster."""
        weights = compute_weights(k22_graph, WeightScheme.of("hws"))
        labels, score = brute_force_optimum(k22_graph, weights, 0.0)
        assert score == k22_graph.n_edges
        assert labels.tolist() == [0, 0, 0, 0]

    def test_size_caps(self, planted_blocks):
        """Test graphs above the cap and caps above the hard limit are rejected."""
        graph, _ = planted_blocks
        weights = compute_weights(graph, WeightScheme.of("hws"))
        with pytest.raises(InvalidInputError):
            brute_force_optimum(graph, weights, 1.0)
        with pytest.raises(InvalidInputError):
            brute_force_optimum(graph, weights, 1.0, max_nodes=HARD_MAX_NODES + 1)

    def test_solver_never_beats_oracle(self, rng):
        """Test the solver's objective never exceeds the exhaustive optimum on 50 tiny graphs."""
        for i in range(50):
            graph = random_small_graph(rng, 8)
            weights = compute_weights(graph, WeightScheme.of(("hws", "cpm-unit", "modularity")[i % 3]))
            gamma = float(rng.uniform(0, 3))
            _, best = brute_force_optimum(graph, weights, gamma)
            state, report = run_basic(graph, weights, SolverConfig(gamma=gamma, budget=1))
            assert report.objective_value <= best + 1e-9
            assert objective_pairsum(graph, weights, state.labels, gamma) <= best + 1e-9

    @pytest.mark.parametrize("scheme", ["hws", "cpm-unit"])
    @pytest.mark.parametrize("gamma", [0.0, 0.5, 2.0])
    def test_oracle_dominates_solver_grid(self, rng, gamma, scheme):
        """Test the exhaustive optimum bounds the solver for each gamma and scheme."""
        for _ in range(10):
            graph = random_small_graph(rng, 8)
            weights = compute_weights(graph, WeightScheme.of(scheme))
            _, best = brute_force_optimum(graph, weights, gamma)
            state, report = run_basic(graph, weights, SolverConfig(gamma=gamma, budget=1, scheme=scheme))
            assert report.objective_value <= best + 1e-9
            assert objective_pairsum(graph, weights, state.labels, gamma) <= best + 1e-9

    def test_solver_reaches_oracle_on_two_edges(self, two_edge_graph):
        """Test the solver hits the optimum on the 2×2 two-edge instance."""
        weights = compute_weights(two_edge_graph, WeightScheme.of("cpm-unit"))
        _, report = run_basic(two_edge_graph, weights, SolverConfig(gamma=0.5, budget=2, scheme="cpm-unit"))
        assert report.objective_value == pytest.approx(1.0)

    def test_matches_graph_of(self):
        """Test tokens of literal graphs map onto oracle labels in node order."""
        graph = graph_of(("a", "x"))
        weights = compute_weights(graph, WeightScheme.of("cpm-unit"))
        labels, score = brute_force_optimum(graph, weights, 0.5)
        assert labels.tolist() == [0, 0]
        assert score == pytest.approx(0.5)
