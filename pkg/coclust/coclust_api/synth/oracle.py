"""
Exhaustive search over all set partitions of a tiny graph.
"""

import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from coclust_api.config import settings
from coclust_api.errors import InvalidInputError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.objective.quality import objective_pairsum
from coclust_api.weighting.schemes import WeightVector

logger = logging.getLogger(__name__)

HARD_MAX_NODES = 12  # Bell(12) = 4,213,597
_CHUNK = 4096


def restricted_growth_strings(n: int) -> Iterator[List[int]]:
    """All set partitions of n elements as restricted growth strings, in lexicographic order."""
    if n < 1:
        return
    a = [0] * n
    # ceiling[j] = 1 + max(a[:j]), the largest value a[j] may take
    ceiling = [1] * n
    yield list(a)
    while True:
        i = n - 1
        while i > 0 and a[i] == ceiling[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0
            ceiling[j] = max(ceiling[j - 1], a[j - 1] + 1)
        yield list(a)


def brute_force_optimum(graph: BipartiteGraph, weights: WeightVector, gamma: float,
                        max_nodes: Optional[int] = None) -> Tuple[NDArray[np.int64], float]:
    """
    Best labeling of the pair-sum objective over every set partition.

    Ties go to the lexicographically smallest restricted growth string.
    """
    cap = settings.ORACLE_MAX_NODES if max_nodes is None else max_nodes
    if cap > HARD_MAX_NODES:
        raise InvalidInputError(f"max_nodes {cap} exceeds the hard limit {HARD_MAX_NODES}")
    if graph.n_nodes > cap:
        raise InvalidInputError(f"graph has {graph.n_nodes} nodes; exhaustive search is capped at {cap}")
    if not gamma >= 0:
        raise InvalidInputError(f"gamma must be >= 0, got {gamma}")

    nu = graph.n_users
    gain = graph.biadjacency().toarray() - gamma * np.outer(weights.w_user, weights.w_item)

    best: Optional[NDArray[np.int64]] = None
    best_score = -np.inf
    chunk: List[List[int]] = []
    evaluated = 0

    def flush() -> None:
        nonlocal best, best_score
        block = np.asarray(chunk, dtype=np.int64)
        together = block[:, :nu, None] == block[:, None, nu:]
        scores = (together * gain).sum(axis=(1, 2))
        top = int(np.argmax(scores))
        if scores[top] > best_score:
            best_score = float(scores[top])
            best = block[top].copy()

    for rgs in restricted_growth_strings(graph.n_nodes):
        chunk.append(rgs)
        if len(chunk) == _CHUNK:
            flush()
            evaluated += len(chunk)
            chunk = []
    if chunk:
        flush()
        evaluated += len(chunk)

    assert best is not None
    score = objective_pairsum(graph, weights, best, gamma)
    logger.info(f"✅ Exhaustive search over {evaluated} partitions: optimum {score:.6g}")
    return best, score
