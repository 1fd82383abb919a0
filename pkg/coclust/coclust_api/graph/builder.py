"""
Construction of the bidirectional CSR graph from an edge list.
"""

import logging
from typing import Dict, List

import numpy as np

from coclust_api.errors import InvalidInputError
from coclust_api.graph.models import BipartiteGraph, EdgeList

logger = logging.getLogger(__name__)


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def build_graph(edges: EdgeList) -> BipartiteGraph:
    """
    Assign dense ids by first appearance (users and items independently),
    collapse duplicate interactions and build both CSR halves.
    """
    if len(edges) == 0:
        raise InvalidInputError("edge list is empty; a graph needs at least one interaction")

    user_ids: Dict[str, int] = {}
    item_ids: Dict[str, int] = {}
    rows: List[int] = []
    cols: List[int] = []
    for user, item in edges:
        rows.append(user_ids.setdefault(user, len(user_ids)))
        cols.append(item_ids.setdefault(item, len(item_ids)))

    n_users, n_items = len(user_ids), len(item_ids)
    codes = np.unique(np.asarray(rows, dtype=np.int64) * n_items + np.asarray(cols, dtype=np.int64))
    src = codes // n_items
    dst = codes % n_items

    # codes are sorted user-major, so each user's items come out ascending
    user_indptr = np.zeros(n_users + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n_users), out=user_indptr[1:])

    order = np.lexsort((src, dst))
    item_indptr = np.zeros(n_items + 1, dtype=np.int64)
    np.cumsum(np.bincount(dst, minlength=n_items), out=item_indptr[1:])

    graph = BipartiteGraph(
        n_users=n_users,
        n_items=n_items,
        user_indptr=_readonly(user_indptr),
        user_indices=_readonly(dst.astype(np.int64)),
        item_indptr=_readonly(item_indptr),
        item_indices=_readonly(src[order].astype(np.int64)),
        user_tokens=tuple(user_ids),
        item_tokens=tuple(item_ids),
    )
    duplicates = len(edges) - graph.n_edges
    logger.info(
        f"✅ Built graph: {n_users} users, {n_items} items, {graph.n_edges} edges"
        + (f" ({duplicates} duplicates collapsed)" if duplicates else "")
    )
    return graph
