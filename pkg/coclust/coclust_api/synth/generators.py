"""
Seeded synthetic bipartite graphs: planted blocks and uniform random edges.
"""

import logging
from typing import Tuple

import numpy as np
from numpy.typing import NDArray

from coclust_api.errors import InvalidInputError
from coclust_api.graph.builder import build_graph
from coclust_api.graph.models import BipartiteGraph, EdgeList

logger = logging.getLogger(__name__)


def _graph_from_codes(rows: NDArray[np.int64], cols: NDArray[np.int64]) -> BipartiteGraph:
    pairs = [(f"u{r}", f"i{c}") for r, c in zip(rows.tolist(), cols.tolist())]
    return build_graph(EdgeList(pairs=pairs))


def planted_bipartite(blocks: int, users_per_block: int, items_per_block: int,
                      p_in: float, p_out: float, seed: int) -> Tuple[BipartiteGraph, NDArray[np.int64]]:
    """
    Planted-partition bipartite graph and its block labels.

    Every user–item pair inside a block is an edge with probability ``p_in``,
    across blocks with ``p_out``. Entities left without edges do not exist in
    the graph; the truth labeling covers the nodes that do.
    """
    if blocks < 1 or users_per_block < 1 or items_per_block < 1:
        raise InvalidInputError("blocks and block sizes must be >= 1")
    if not (0.0 <= p_in <= 1.0 and 0.0 <= p_out <= 1.0):
        raise InvalidInputError(f"probabilities must lie in [0, 1], got p_in={p_in}, p_out={p_out}")

    rng = np.random.default_rng(seed)
    user_block = np.arange(blocks * users_per_block) // users_per_block
    item_block = np.arange(blocks * items_per_block) // items_per_block
    prob = np.where(user_block[:, None] == item_block[None, :], p_in, p_out)
    rows, cols = np.nonzero(rng.random(prob.shape) < prob)
    if rows.size == 0:
        raise InvalidInputError(f"planted sample with seed {seed} has no edges")

    graph = _graph_from_codes(rows, cols)
    truth = np.concatenate([
        user_block[[int(t[1:]) for t in graph.user_tokens]],
        item_block[[int(t[1:]) for t in graph.item_tokens]],
    ]).astype(np.int64)
    logger.info(f"🧪 Planted graph: {blocks} blocks, {graph.n_edges} edges (p_in={p_in}, p_out={p_out})")
    return graph, truth


def random_bipartite(n_users: int, n_items: int, n_edges: int, seed: int) -> BipartiteGraph:
    """
    ``n_edges`` distinct user–item pairs drawn uniformly.

    Users or items that draw no edge are absent, so the graph can be smaller
    than ``n_users`` × ``n_items``.
    """
    if n_users < 1 or n_items < 1:
        raise InvalidInputError("n_users and n_items must be >= 1")
    population = n_users * n_items
    if not 1 <= n_edges <= population:
        raise InvalidInputError(f"n_edges must lie in [1, {population}], got {n_edges}")

    rng = np.random.default_rng(seed)
    if 2 * n_edges >= population:
        codes = rng.choice(population, size=n_edges, replace=False)
    else:
        pool = np.empty(0, dtype=np.int64)
        while pool.size < n_edges:
            draw = rng.integers(0, population, size=int(1.1 * (n_edges - pool.size)) + 16, dtype=np.int64)
            pool = np.unique(np.concatenate([pool, draw]))
        codes = rng.choice(pool, size=n_edges, replace=False)
    codes = np.sort(codes)

    graph = _graph_from_codes(codes // n_items, codes % n_items)
    logger.info(f"🧪 Random graph: {graph.n_users} users, {graph.n_items} items, {graph.n_edges} edges")
    return graph
