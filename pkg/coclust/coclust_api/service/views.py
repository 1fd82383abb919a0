import logging
import time
from typing import Dict, List

import numpy as np
from fastapi import APIRouter, HTTPException

from coclust_api.config import settings
from coclust_api.errors import BudgetNotMetError, CoclusterError
from coclust_api.graph import BipartiteGraph, EdgeList, build_graph
from coclust_api.metrics import accl
from coclust_api.objective import bipartite_modularity, cpm_score, exclusive_lasso, objective_pairsum
from coclust_api.pipeline import budget_from_ratio, cluster_graph
from coclust_api.service.schemas import (
    AssignmentOut,
    ClusterIn,
    ClusterOut,
    Edge,
    ObjectiveIn,
    ObjectiveOut,
    OracleIn,
    OracleOut,
)
from coclust_api.solver import SolverConfig
from coclust_api.synth import brute_force_optimum
from coclust_api.weighting import WeightScheme, compute_weights

logger = logging.getLogger(__name__)

sketch_router = APIRouter()


def graph_from_request(edges: List[Edge]) -> BipartiteGraph:
    """Build a graph from request edges, enforcing the request size cap."""
    if len(edges) > settings.MAX_REQUEST_EDGES:
        raise HTTPException(
            status_code=413,
            detail=f"{len(edges)} edges exceed the per-request limit of {settings.MAX_REQUEST_EDGES}",
        )
    return build_graph(EdgeList(pairs=[(u, i) for u, i in edges]))


def _token_labels(tokens: tuple, labels: np.ndarray) -> Dict[str, int]:
    return dict(zip(tokens, labels.tolist()))


@sketch_router.post("/cluster", response_model=ClusterOut)
def cluster(inp: ClusterIn) -> ClusterOut:
    """Co-cluster the posted graph and return the report with the per-token assignment."""
    logger.info(f"🚀 Cluster request: {len(inp.edges)} edges, γ={inp.gamma}, scheme={inp.scheme.value}")
    try:
        start_time = time.perf_counter()
        graph = graph_from_request(inp.edges)
        budget = inp.budget if inp.budget is not None else budget_from_ratio(graph, inp.ratio)
        config = SolverConfig(
            gamma=inp.gamma,
            budget=budget,
            dim=inp.dim,
            max_iters=inp.max_iters,
            scheme=inp.scheme,
            scu=inp.scu,
            scu_distinct=inp.scu_distinct,
            strict_budget=inp.strict_budget,
            order=inp.order,
            seed=inp.seed,
        )
        result = cluster_graph(graph, config)
        a = result.assignment
        logger.info(f"⏱️ Cluster request took {time.perf_counter() - start_time:.2f} seconds")
        return ClusterOut(
            report=result.summary(),
            assignment=AssignmentOut(
                users=_token_labels(graph.user_tokens, a.user_primary),
                items=_token_labels(graph.item_tokens, a.item_cluster),
                secondary=_token_labels(graph.user_tokens, a.user_secondary) if a.user_secondary is not None else None,
            ),
        )
    except HTTPException:
        raise
    except BudgetNotMetError as e:
        logger.error(f"❌ Budget not met: {e}")
        raise HTTPException(status_code=409, detail=str(e))
    except (CoclusterError, ValueError) as e:
        logger.error(f"❌ Invalid cluster request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ Error in cluster endpoint: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error processing request: {str(e)}")


@sketch_router.post("/objective", response_model=ObjectiveOut)
def objective(inp: ObjectiveIn) -> ObjectiveOut:
    """Score a given co-clustering under every quality function."""
    logger.info(f"🚀 Objective request: {len(inp.edges)} edges, γ={inp.gamma}")
    try:
        graph = graph_from_request(inp.edges)
        missing = [t for t in graph.user_tokens if t not in inp.user_labels]
        missing += [t for t in graph.item_tokens if t not in inp.item_labels]
        if missing:
            raise HTTPException(status_code=400, detail=f"no label for tokens: {missing[:10]}")
        labels = np.array(
            [inp.user_labels[t] for t in graph.user_tokens] + [inp.item_labels[t] for t in graph.item_tokens],
            dtype=np.int64,
        )
        weights = compute_weights(graph, WeightScheme.of(inp.scheme.value))
        deviation, _ = exclusive_lasso(weights, labels)
        return ObjectiveOut(
            objective=objective_pairsum(graph, weights, labels, inp.gamma),
            modularity=bipartite_modularity(graph, labels, inp.gamma),
            cpm=cpm_score(graph, labels, inp.gamma),
            accl=accl(graph, labels),
            exclusive_lasso=deviation,
            clusters=int(np.unique(labels).shape[0]),
        )
    except HTTPException:
        raise
    except (CoclusterError, ValueError) as e:
        logger.error(f"❌ Invalid objective request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ Error in objective endpoint: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error processing request: {str(e)}")


@sketch_router.post("/oracle", response_model=OracleOut)
def oracle(inp: OracleIn) -> OracleOut:
    """Exhaustive optimum of a tiny graph."""
    logger.info(f"🚀 Oracle request: {len(inp.edges)} edges, γ={inp.gamma}")
    try:
        graph = graph_from_request(inp.edges)
        weights = compute_weights(graph, WeightScheme.of(inp.scheme.value))
        labels, score = brute_force_optimum(graph, weights, inp.gamma, max_nodes=inp.max_nodes)
        nu = graph.n_users
        return OracleOut(
            score=score,
            users=_token_labels(graph.user_tokens, labels[:nu]),
            items=_token_labels(graph.item_tokens, labels[nu:]),
        )
    except HTTPException:
        raise
    except (CoclusterError, ValueError) as e:
        logger.error(f"❌ Invalid oracle request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"❌ Error in oracle endpoint: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Error processing request: {str(e)}")
