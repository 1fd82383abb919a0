import numpy as np

from coclust_api.graph import BipartiteGraph, EdgeList, build_graph


def graph_of(*pairs) -> BipartiteGraph:
    """Build a graph from literal (user, item) token pairs."""
    return build_graph(EdgeList(pairs=list(pairs)))


def random_small_graph(rng: np.random.Generator, max_nodes: int = 20) -> BipartiteGraph:
    """A random graph of at most ``max_nodes`` nodes with every node incident to some edge."""
    n_users = int(rng.integers(1, max_nodes // 2 + 1))
    n_items = int(rng.integers(1, max_nodes - n_users + 1))
    mask = rng.random((n_users, n_items)) < 0.4
    # keep every user and item present
    mask[np.arange(n_users), rng.integers(0, n_items, size=n_users)] = True
    mask[rng.integers(0, n_users, size=n_items), np.arange(n_items)] = True
    rows, cols = np.nonzero(mask)
    return graph_of(*[(f"u{r}", f"i{c}") for r, c in zip(rows.tolist(), cols.tolist())])


def random_labeling(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random labels over ``n`` nodes using between 1 and n distinct values."""
    k = int(rng.integers(1, n + 1))
    return rng.integers(0, k, size=n).astype(np.int64)
