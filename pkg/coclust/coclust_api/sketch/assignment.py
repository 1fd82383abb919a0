"""
Turning solver labels into sketching assignments, and what they cost.
"""

import logging
from dataclasses import replace
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from coclust_api.errors import InvalidInputError, TokenMismatchError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.sketch.models import Codebook, ParamCount, SketchAssignment
from coclust_api.solver.models import ClusterState

logger = logging.getLogger(__name__)


def relabel_first_appearance(raw: NDArray[np.int64]) -> Tuple[NDArray[np.int64], NDArray[np.int64]]:
    """
    Map raw labels to 0..K-1 in order of first appearance.

    Returns the new ids and the raw labels listed by their new id.
    """
    raw = np.asarray(raw, dtype=np.int64)
    codes, first, inverse = np.unique(raw, return_index=True, return_inverse=True)
    by_first = np.argsort(first, kind="stable")
    rank = np.empty(codes.shape[0], dtype=np.int64)
    rank[by_first] = np.arange(codes.shape[0], dtype=np.int64)
    return rank[inverse], codes[by_first]


def finalize(state: ClusterState, secondary: Optional[NDArray[np.int64]], graph: BipartiteGraph, *,
             gamma: float = 0.0, scheme: str = "hws", max_rows: Optional[int] = None) -> SketchAssignment:
    """
    Build the sketching assignment from a finished solve.

    Item labels are relabeled on their own. User labels share one map across
    primary and secondary labels, so a secondary label naming a cluster that
    holds no primary user opens a new user column. With ``max_rows`` set,
    secondary labels that would push K(u)+K(v) past it fall back to the
    user's primary id.
    """
    item_ids, item_raw = relabel_first_appearance(state.item_labels)
    user_ids, user_raw = relabel_first_appearance(state.user_labels)
    k_item = int(item_raw.shape[0])

    secondary_ids = None
    if secondary is not None:
        secondary = np.asarray(secondary, dtype=np.int64)
        if secondary.shape != (graph.n_users,):
            raise InvalidInputError(f"secondary labels have shape {secondary.shape}, expected ({graph.n_users},)")
        column: Dict[int, int] = {int(raw): i for i, raw in enumerate(user_raw.tolist())}
        secondary_ids = np.empty(graph.n_users, dtype=np.int64)
        collapsed = 0
        for u, raw in enumerate(secondary.tolist()):
            idx = column.get(raw)
            if idx is None:
                if max_rows is not None and len(column) + 1 + k_item > max_rows:
                    idx = int(user_ids[u])
                    collapsed += 1
                else:
                    idx = len(column)
                    column[raw] = idx
            secondary_ids[u] = idx
        k_user = len(column)
        if collapsed:
            logger.warning(
                f"⚠️ {collapsed} secondary user ids collapsed onto their primary id to stay within {max_rows} rows"
            )
    else:
        k_user = int(user_raw.shape[0])

    assignment = SketchAssignment(
        user_primary=user_ids,
        item_cluster=item_ids,
        k_user=k_user,
        k_item=k_item,
        gamma=float(gamma),
        scheme=scheme,
        user_secondary=secondary_ids,
        user_tokens=graph.user_tokens,
        item_tokens=graph.item_tokens,
    )
    logger.info(f"✅ Sketch finalized: K(u)={k_user}, K(v)={k_item}, secondary={'yes' if assignment.scu else 'no'}")
    return assignment


def param_count(assignment: SketchAssignment, d: int) -> ParamCount:
    """
    Codebook parameters against full (n_users + n_items) × d tables.

    Secondary user indices are charged one parameter each; plain index
    storage is reported but not charged.
    """
    if d < 1:
        raise InvalidInputError(f"embedding dimension must be >= 1, got {d}")
    n_users, n_items = assignment.n_users, assignment.n_items
    codebook = (assignment.k_user + assignment.k_item) * d
    scu_extra = n_users if assignment.scu else 0
    full = (n_users + n_items) * d
    return ParamCount(
        codebook_params=codebook,
        index_ints=n_users + n_items + scu_extra,
        full_params=full,
        scu_extra=scu_extra,
        reported_params=codebook + scu_extra,
        ratio=(codebook + scu_extra) / full,
        reduction=1.0 - (codebook + scu_extra) / full,
    )


def materialize(assignment: SketchAssignment, user_codebook: Codebook,
                item_codebook: Codebook) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """U = Y(u) Z(u) and V = Y(v) Z(v); a secondary id equal to the primary counts once."""
    if user_codebook.k != assignment.k_user or item_codebook.k != assignment.k_item:
        raise InvalidInputError(
            f"codebooks have {user_codebook.k}/{item_codebook.k} rows, "
            f"assignment needs {assignment.k_user}/{assignment.k_item}"
        )
    if user_codebook.dim != item_codebook.dim:
        raise InvalidInputError(f"codebook dimensions differ: {user_codebook.dim} vs {item_codebook.dim}")

    users = user_codebook.rows[assignment.user_primary].copy()
    if assignment.user_secondary is not None:
        extra = assignment.user_secondary != assignment.user_primary
        users[extra] += user_codebook.rows[assignment.user_secondary[extra]]
    items = item_codebook.rows[assignment.item_cluster]
    return users, items


def align_to_graph(assignment: SketchAssignment, graph: BipartiteGraph) -> SketchAssignment:
    """
    Reorder a loaded assignment to the graph's dense ids, matching by token.

    Raises ``TokenMismatchError`` unless both sides name exactly the same
    users and items.
    """
    if assignment.user_tokens is None or assignment.item_tokens is None:
        raise TokenMismatchError("assignment carries no tokens")
    if set(assignment.user_tokens) != set(graph.user_tokens) or len(assignment.user_tokens) != graph.n_users:
        raise TokenMismatchError("user tokens of the assignment and the graph differ")
    if set(assignment.item_tokens) != set(graph.item_tokens) or len(assignment.item_tokens) != graph.n_items:
        raise TokenMismatchError("item tokens of the assignment and the graph differ")

    user_pos = {t: i for i, t in enumerate(assignment.user_tokens)}
    item_pos = {t: i for i, t in enumerate(assignment.item_tokens)}
    u_order = np.fromiter((user_pos[t] for t in graph.user_tokens), dtype=np.int64, count=graph.n_users)
    i_order = np.fromiter((item_pos[t] for t in graph.item_tokens), dtype=np.int64, count=graph.n_items)
    return replace(
        assignment,
        user_primary=assignment.user_primary[u_order],
        item_cluster=assignment.item_cluster[i_order],
        user_secondary=None if assignment.user_secondary is None else assignment.user_secondary[u_order],
        user_tokens=graph.user_tokens,
        item_tokens=graph.item_tokens,
    )
