"""
End-to-end sketch construction: weights → solve → finalize → accounting.
"""

import logging
import math
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np
from numpy.typing import NDArray

from coclust_api.config import settings
from coclust_api.errors import ConfigurationError, InvalidInputError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.metrics.clustering import GiniScope, accl, gini_by_scope
from coclust_api.sketch.assignment import finalize, param_count
from coclust_api.sketch.models import ParamCount, SketchAssignment
from coclust_api.solver.models import ClusterState, SolveReport, SolverConfig
from coclust_api.solver.propagation import reduced_budget, run_basic, run_complete
from coclust_api.weighting.schemes import WeightScheme, WeightVector, compute_weights

logger = logging.getLogger(__name__)


@dataclass
class ClusterResult:
    state: ClusterState
    secondary: Optional[NDArray[np.int64]]
    weights: WeightVector
    report: SolveReport
    assignment: SketchAssignment
    params: Optional[ParamCount]
    gini_user: float
    gini_item: float
    accl: float
    wall_time: float

    def summary(self) -> Dict[str, Any]:
        """The fixed-key report printed by the CLI."""
        return {
            "iterations": self.report.iterations_run,
            "k_user": self.assignment.k_user,
            "k_item": self.assignment.k_item,
            "objective": self.report.objective_value,
            "budget_met": self.report.budget_met,
            "wall_ms": round(self.wall_time * 1000.0, 3),
            "gini_user": self.gini_user,
            "gini_item": self.gini_item,
            "accl": self.accl,
            "converged": self.report.converged_no_moves,
            "effective_budget": self.report.effective_budget,
            "scu_overflow": self.report.scu_overflow,
            "params": self.params.model_dump() if self.params else None,
            "gamma": self.assignment.gamma,
            "history": self.report.history,
            "param_ratio_history": self.param_ratio_history(),
        }

    def param_ratio_history(self) -> Optional[List[float]]:
        """Sketch size over full table size before and after each sweep; None without ``dim``."""
        if self.params is None:
            return None
        n_rows = self.assignment.n_users + self.assignment.n_items
        dim = self.params.full_params // n_rows
        return [(k * dim + self.params.scu_extra) / self.params.full_params for k in self.report.history]


def budget_from_ratio(graph: BipartiteGraph, ratio: float) -> int:
    """Codebook rows for a compression ratio of the full (n_users + n_items) rows."""
    if not 0 < ratio <= 1:
        raise InvalidInputError(f"compression ratio must lie in (0, 1], got {ratio}")
    if ratio < settings.MIN_COMPRESSION_RATIO:
        logger.warning(
            f"⚠️ Compression ratio {ratio} is below {settings.MIN_COMPRESSION_RATIO}; "
            "clusters this small tend to behave like random hashing"
        )
    return max(1, math.floor(ratio * graph.n_nodes))


CALIBRATION_STEPS = 12
CALIBRATION_MAX_GAMMA = 1024.0


def calibrate_gamma(graph: BipartiteGraph, config: SolverConfig,
                    scheme: Optional[WeightScheme] = None, steps: int = CALIBRATION_STEPS) -> float:
    """
    Largest γ whose run still fits the codebook budget.

    Larger γ keeps clusters smaller and the table bigger, so γ is doubled
    until a run misses the budget and then bisected ``steps`` times. With
    secondary user clusters the target is the reduced budget B′. The
    returned γ always fits; the search assumes fit is monotone in γ.
    """
    weights = compute_weights(graph, scheme or WeightScheme.of(config.scheme.value))
    target = config.budget
    if config.scu and config.dim is not None:
        target = reduced_budget(config.budget, config.dim, graph.n_users)
        if target < 2:
            raise ConfigurationError(f"budget {config.budget} with dim {config.dim} leaves B′={target} rows")
    trial = config.model_copy(update={"strict_budget": False})

    def fits(gamma: float) -> bool:
        _, report = run_basic(graph, weights, trial.model_copy(update={"gamma": gamma}), budget=target)
        return report.budget_met

    logger.info(f"🚀 Calibrating γ for budget {target} ({steps} bisection steps)")
    if not fits(0.0):
        raise ConfigurationError(f"budget {target} is out of reach within {config.max_iters} sweeps even at γ=0")

    low, high = 0.0, 1.0
    while fits(high):
        low = high
        if high >= CALIBRATION_MAX_GAMMA:
            logger.warning(f"⚠️ Budget {target} still fits at γ={high}; stopping the search there")
            return high
        high *= 2.0
    for _ in range(steps):
        mid = (low + high) / 2.0
        if fits(mid):
            low = mid
        else:
            high = mid
    logger.info(f"📊 Calibrated γ={low:.6g} (first miss at {high:.6g})")
    return low


def cluster_graph(graph: BipartiteGraph, config: SolverConfig,
                  scheme: Optional[WeightScheme] = None) -> ClusterResult:
    """
    Run the full pipeline on ``graph``.

    ``scheme`` overrides ``config.scheme`` (needed for custom weights).
    """
    start = time.perf_counter()
    weights = compute_weights(graph, scheme or WeightScheme.of(config.scheme.value))

    secondary: Optional[NDArray[np.int64]] = None
    if config.scu:
        state, secondary, report = run_complete(graph, weights, config)
    else:
        state, report = run_basic(graph, weights, config)

    assignment = finalize(
        state, secondary, graph,
        gamma=config.gamma,
        scheme=weights.scheme.value,
        max_rows=report.effective_budget if config.strict_budget and config.scu else None,
    )
    if config.scu:
        overflow = max(0, assignment.k_user + assignment.k_item - report.effective_budget)
        if overflow:
            logger.warning(f"⚠️ Secondary user clusters add {overflow} rows beyond B′={report.effective_budget}")
        report = report.model_copy(update={"scu_overflow": overflow})

    params = param_count(assignment, config.dim) if config.dim else None
    wall = time.perf_counter() - start
    result = ClusterResult(
        state=state,
        secondary=secondary,
        weights=weights,
        report=report,
        assignment=assignment,
        params=params,
        gini_user=gini_by_scope(graph, state.labels, GiniScope.USER),
        gini_item=gini_by_scope(graph, state.labels, GiniScope.ITEM),
        accl=accl(graph, state.labels),
        wall_time=wall,
    )
    if params:
        logger.info(
            f"📊 Parameters: {params.reported_params:,} of {params.full_params:,} "
            f"({-100.0 * params.reduction:+.1f}%)"
        )
    logger.info(f"✅ Pipeline finished in {wall * 1000.0:.1f}ms")
    return result
