"""
Greedy label propagation for the balanced co-clustering objective.

``run_basic`` sweeps nodes until the distinct label count K(u)+K(v) fits the
budget, the iteration cap is hit, or a sweep makes no move. ``run_complete``
shrinks the budget to make room for one extra index per user and then gives
every user a secondary label.
"""

import logging
import time
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from coclust_api.errors import BudgetNotMetError, ConfigurationError, SolverInvariantError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.objective.quality import objective_pairsum
from coclust_api.solver import kernels
from coclust_api.solver.models import ClusterState, NodeOrder, SolveReport, SolverConfig
from coclust_api.weighting.schemes import WeightVector

logger = logging.getLogger(__name__)

# Called after every accepted move with (state, node, old_label, new_label).
MoveAuditor = Callable[[ClusterState, int, int, int], None]


@dataclass
class _Scratch:
    counts: NDArray[np.int64]
    touched: NDArray[np.int64]

    @classmethod
    def for_graph(cls, graph: BipartiteGraph) -> "_Scratch":
        max_degree = max(int(graph.user_degree.max()), int(graph.item_degree.max()))
        return cls(np.zeros(graph.n_nodes, dtype=np.int64), np.zeros(max_degree, dtype=np.int64))


def likelihood(state: ClusterState, graph: BipartiteGraph, weights: WeightVector, gamma: float,
               node: int, candidate_label: int) -> float:
    """
    p(k) for moving ``node`` into label ``candidate_label``.

    Candidates are the node's own label and the labels of its neighbors.
    """
    labels = state.labels
    nu = graph.n_users
    if not 0 <= candidate_label < labels.shape[0] or state.node_count[candidate_label] == 0:
        raise SolverInvariantError(f"label {candidate_label} is not held by any node")
    if node < nu:
        neighbor_labels = labels[nu + graph.user_neighbors(node)]
        weight, opposite_sum = float(weights.w_user[node]), float(state.sum_item_weight[candidate_label])
    else:
        neighbor_labels = labels[graph.item_neighbors(node - nu)]
        weight, opposite_sum = float(weights.w_item[node - nu]), float(state.sum_user_weight[candidate_label])
    in_k = int(np.count_nonzero(neighbor_labels == candidate_label))
    if in_k == 0 and candidate_label != labels[node]:
        raise SolverInvariantError(
            f"label {candidate_label} is neither the label of node {node} nor of any of its neighbors"
        )
    return in_k - gamma * weight * opposite_sum


def _best_label(state: ClusterState, graph: BipartiteGraph, weights: WeightVector, gamma: float,
                node: int, scratch: _Scratch, exclude_current: bool = False) -> int:
    return int(kernels.best_label(
        node, graph.n_users, graph.user_indptr, graph.user_indices, graph.item_indptr, graph.item_indices,
        state.labels, weights.w_user, weights.w_item, state.sum_user_weight, state.sum_item_weight,
        float(gamma), scratch.counts, scratch.touched, exclude_current,
    ))


def _move(state: ClusterState, weights: WeightVector, node: int, new: int) -> bool:
    return bool(kernels.move_node(
        node, new, state.n_users, state.labels, weights.w_user, weights.w_item,
        state.sum_user_weight, state.sum_item_weight, state.user_count, state.item_count,
        state.node_count, state.k_counts,
    ))


def update_node(state: ClusterState, graph: BipartiteGraph, weights: WeightVector, gamma: float,
                node: int, scratch: Optional[_Scratch] = None) -> bool:
    """Move ``node`` to its maximum-likelihood label; returns whether it changed."""
    scratch = scratch or _Scratch.for_graph(graph)
    return _move(state, weights, node, _best_label(state, graph, weights, gamma, node, scratch))


def _sweep_order(graph: BipartiteGraph, config: SolverConfig, rng: np.random.Generator) -> NDArray[np.int64]:
    if config.order is NodeOrder.SHUFFLED:
        return rng.permutation(graph.n_nodes).astype(np.int64)
    return np.arange(graph.n_nodes, dtype=np.int64)


def _sweep(state: ClusterState, graph: BipartiteGraph, weights: WeightVector, gamma: float,
           order: NDArray[np.int64], scratch: _Scratch, on_move: Optional[MoveAuditor]) -> int:
    if on_move is None:
        return int(kernels.sweep(
            order, graph.n_users, graph.user_indptr, graph.user_indices, graph.item_indptr, graph.item_indices,
            state.labels, weights.w_user, weights.w_item, state.sum_user_weight, state.sum_item_weight,
            state.user_count, state.item_count, state.node_count, state.k_counts,
            float(gamma), scratch.counts, scratch.touched,
        ))

    moves = 0
    for node in order.tolist():
        old = int(state.labels[node])
        new = _best_label(state, graph, weights, gamma, node, scratch)
        if _move(state, weights, node, new):
            moves += 1
            on_move(state, node, old, new)
    return moves


def run_basic(graph: BipartiteGraph, weights: WeightVector, config: SolverConfig,
              budget: Optional[int] = None, on_move: Optional[MoveAuditor] = None) -> Tuple[ClusterState, SolveReport]:
    """
    Label propagation from unique initial labels.

    ``budget`` overrides ``config.budget`` (used for the reduced SCU budget);
    ``on_move`` switches to an interpreted sweep that reports every move.
    """
    if weights.w_user.shape != (graph.n_users,) or weights.w_item.shape != (graph.n_items,):
        raise ConfigurationError("weights do not match the graph")

    target = config.budget if budget is None else budget
    rng = np.random.default_rng(config.seed)
    state = ClusterState.initial(graph, weights)
    scratch = _Scratch.for_graph(graph)

    logger.info(
        f"🚀 Label propagation: γ={config.gamma}, budget={target}, T={config.max_iters}, order={config.order.value}"
    )
    start = time.perf_counter()
    iterations = 0
    converged = False
    history = [state.k_total]
    while state.k_total > target and iterations < config.max_iters:
        moves = _sweep(state, graph, weights, config.gamma, _sweep_order(graph, config, rng), scratch, on_move)
        iterations += 1
        history.append(state.k_total)
        logger.debug(f"🔄 Sweep {iterations}: {moves} moves, K(u)={state.k_user}, K(v)={state.k_item}")
        if moves == 0:
            converged = True
            break
    wall = time.perf_counter() - start

    report = SolveReport(
        iterations_run=iterations,
        converged_no_moves=converged,
        budget_met=state.k_total <= target,
        final_k_user=state.k_user,
        final_k_item=state.k_item,
        objective_value=objective_pairsum(graph, weights, state.labels, config.gamma),
        wall_time=wall,
        effective_budget=target,
        neighbor_visits=2 * graph.n_edges * iterations,
        history=history,
    )
    logger.info(
        f"⏱️ Solved in {wall:.2f}s after {iterations} sweeps: "
        f"K(u)={report.final_k_user}, K(v)={report.final_k_item}, objective={report.objective_value:.6g}"
    )
    if not report.budget_met:
        logger.warning(f"⚠️ Budget not met: K(u)+K(v)={state.k_total} > {target}")
        if config.strict_budget:
            raise BudgetNotMetError(f"K(u)+K(v)={state.k_total} exceeds budget {target}", report)
    return state, report


def secondary_pass(state: ClusterState, graph: BipartiteGraph, weights: WeightVector, gamma: float,
                   scu_distinct: bool = False) -> NDArray[np.int64]:
    """
    Best label per user against the frozen final state; primary labels stay put.

    A user's likelihood only reads item labels and item aggregates, so the
    result does not depend on the order users are visited.
    """
    scratch = _Scratch.for_graph(graph)
    return kernels.secondary_labels(
        graph.n_users, graph.user_indptr, graph.user_indices, graph.item_indptr, graph.item_indices,
        state.labels, weights.w_user, weights.w_item, state.sum_user_weight, state.sum_item_weight,
        float(gamma), scratch.counts, scratch.touched, scu_distinct,
    )


def reduced_budget(budget: int, dim: int, n_users: int) -> int:
    """B′ = floor((B·d − |U|) / d): rows left after charging one index per user."""
    return (budget * dim - n_users) // dim


def run_complete(graph: BipartiteGraph, weights: WeightVector, config: SolverConfig,
                 on_move: Optional[MoveAuditor] = None) -> Tuple[ClusterState, NDArray[np.int64], SolveReport]:
    """Label propagation under the reduced budget B′ followed by the secondary user pass."""
    if not config.scu or config.dim is None:
        raise ConfigurationError("run_complete requires scu=True and dim")
    b_prime = reduced_budget(config.budget, config.dim, graph.n_users)
    if b_prime < 2:
        raise ConfigurationError(
            f"budget {config.budget} with dim {config.dim} leaves B′={b_prime} codebook rows "
            f"after {graph.n_users} secondary user indices; need at least 2"
        )
    logger.info(f"📊 Secondary user clusters on: B′={b_prime} (from B={config.budget}, d={config.dim})")

    state, report = run_basic(graph, weights, config, budget=b_prime, on_move=on_move)
    secondary = secondary_pass(state, graph, weights, config.gamma, config.scu_distinct)
    report = report.model_copy(update={"neighbor_visits": report.neighbor_visits + graph.n_edges})
    return state, secondary, report
