import logging

import pytest

from coclust_api.errors import ConfigurationError, InvalidInputError
from coclust_api.pipeline import budget_from_ratio, calibrate_gamma, cluster_graph
from coclust_api.solver import SolverConfig
from coclust_api.weighting import WeightScheme

REPORT_KEYS = {"iterations", "k_user", "k_item", "objective", "budget_met", "wall_ms", "gini_user", "gini_item", "accl"}


class TestBudgetFromRatio:
    """Test compression-ratio budgets."""

    def test_rows_from_ratio(self, planted_blocks):
        """Test the budget is the floored share of all rows."""
        graph, _ = planted_blocks
        assert budget_from_ratio(graph, 0.5) == 10
        assert budget_from_ratio(graph, 1.0) == 20

    def test_low_ratio_warns(self, planted_blocks, caplog):
        """Test ratios below the advised minimum log a warning."""
        graph, _ = planted_blocks
        with caplog.at_level(logging.WARNING, logger="coclust_api.pipeline"):
            assert budget_from_ratio(graph, 0.1) == 2
        assert any("below" in record.message for record in caplog.records)

    def test_invalid_ratio(self, planted_blocks):
        """Test ratios outside (0, 1] are rejected."""
        graph, _ = planted_blocks
        with pytest.raises(InvalidInputError):
            budget_from_ratio(graph, 0.0)
        with pytest.raises(InvalidInputError):
            budget_from_ratio(graph, 1.5)


class TestClusterGraph:
    """Test the end-to-end pipeline."""

    def test_basic(self, planted_blocks):
        """Test a plain run reports exact planted statistics and no parameter accounting."""
        graph, _ = planted_blocks
        result = cluster_graph(graph, SolverConfig(gamma=0.1, budget=4))
        summary = result.summary()
        assert REPORT_KEYS <= set(summary)
        assert (summary["k_user"], summary["k_item"]) == (2, 2)
        assert summary["budget_met"] is True
        assert summary["accl"] == 0.0
        assert summary["gini_user"] == pytest.approx(0.0, abs=1e-12)
        assert summary["params"] is None
        assert not result.assignment.scu

    def test_with_secondary_clusters(self, planted_blocks):
        """Test SCU runs use the reduced budget and charge one index per user."""
        graph, _ = planted_blocks
        result = cluster_graph(graph, SolverConfig(gamma=0.1, budget=12, dim=8, scu=True))
        assert result.report.effective_budget == (12 * 8 - 10) // 8
        assert result.assignment.scu
        assert result.params is not None
        assert result.params.scu_extra == graph.n_users
        assert result.params.reported_params == (result.assignment.k_user + result.assignment.k_item) * 8 + 10
        assert result.summary()["scu_overflow"] == 0

    def test_custom_scheme_override(self, two_edge_graph):
        """Test an explicit weighting scheme replaces the configured one."""
        scheme = WeightScheme.custom([1.0, 1.0], [1.0, 1.0])
        result = cluster_graph(two_edge_graph, SolverConfig(gamma=0.5, budget=2), scheme=scheme)
        assert result.report.objective_value == pytest.approx(1.0)
        assert result.assignment.scheme == "custom"

    def test_sweep_history(self, planted_blocks):
        """Test the history starts at one label per node and never grows."""
        graph, _ = planted_blocks
        result = cluster_graph(graph, SolverConfig(gamma=0.1, budget=4, dim=8))
        history = result.report.history
        assert history[0] == graph.n_nodes
        assert len(history) == result.report.iterations_run + 1
        assert all(later <= earlier for earlier, later in zip(history, history[1:]))
        ratios = result.param_ratio_history()
        assert ratios[0] == 1.0
        assert ratios[-1] == pytest.approx(result.params.ratio)

    def test_no_ratio_history_without_dim(self, planted_blocks):
        """Test table ratios need the embedding dimension."""
        graph, _ = planted_blocks
        assert cluster_graph(graph, SolverConfig(gamma=0.1, budget=4)).param_ratio_history() is None


class TestCalibrateGamma:
    """Test searching gamma against a budget."""

    def test_calibrated_gamma_fits(self, planted_blocks):
        """Test the calibrated gamma meets the budget and one past the move threshold does not."""
        graph, _ = planted_blocks
        config = SolverConfig(gamma=0.0, budget=4)
        gamma = calibrate_gamma(graph, config)
        assert cluster_graph(graph, config.model_copy(update={"gamma": gamma})).report.budget_met
        assert not cluster_graph(graph, config.model_copy(update={"gamma": gamma + 5.0})).report.budget_met

    def test_unreachable_budget(self, planted_blocks):
        """Test a budget below the component count cannot be calibrated."""
        graph, _ = planted_blocks
        with pytest.raises(ConfigurationError):
            calibrate_gamma(graph, SolverConfig(gamma=0.0, budget=1))

    def test_reduced_budget_target(self, planted_blocks):
        """Test secondary-cluster runs calibrate against the reduced budget."""
        graph, _ = planted_blocks
        config = SolverConfig(gamma=0.0, budget=12, dim=8, scu=True)
        gamma = calibrate_gamma(graph, config)
        result = cluster_graph(graph, config.model_copy(update={"gamma": gamma}))
        assert result.report.budget_met
        assert result.report.effective_budget == 10
