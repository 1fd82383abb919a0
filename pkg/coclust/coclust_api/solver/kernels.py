"""
Compiled CSR kernels for label selection and label moves.

Every function works on the raw arrays of a ``ClusterState`` so that the
per-node Python API and the full sweeps run exactly the same code.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def best_label(node, n_users, user_indptr, user_indices, item_indptr, item_indices,
               labels, w_user, w_item, sum_user, sum_item, gamma, counts, touched,
               exclude_current):
    """
    Argmax of p(k) = |N(x) ∩ C_k| − γ·w(x)·S_other(k) over neighbor labels ∪ {current}.

    Ties keep the current label, otherwise go to the smallest label. With
    ``exclude_current`` the current label is only returned when no other
    candidate exists. ``counts`` must be all zero on entry and is left so.
    """
    cur = labels[node]
    if node < n_users:
        start = user_indptr[node]
        end = user_indptr[node + 1]
        indices = user_indices
        offset = n_users
        w = w_user[node]
        other = sum_item
    else:
        j = node - n_users
        start = item_indptr[j]
        end = item_indptr[j + 1]
        indices = item_indices
        offset = 0
        w = w_item[j]
        other = sum_user

    n_touched = 0
    for e in range(start, end):
        lab = labels[indices[e] + offset]
        if counts[lab] == 0:
            touched[n_touched] = lab
            n_touched += 1
        counts[lab] += 1

    if exclude_current:
        best = -1
        best_p = -np.inf
    else:
        best = cur
        best_p = counts[cur] - gamma * w * other[cur]

    for t in range(n_touched):
        lab = touched[t]
        if lab == cur:
            continue
        p = counts[lab] - gamma * w * other[lab]
        if p > best_p or (p == best_p and best != cur and lab < best):
            best = lab
            best_p = p

    for t in range(n_touched):
        counts[touched[t]] = 0

    if best < 0:
        best = cur
    return best


@njit(cache=True)
def move_node(node, new, n_users, labels, w_user, w_item, sum_user, sum_item,
              user_count, item_count, node_count, k_counts):
    """Relabel ``node`` and update aggregates and distinct-label counts in O(1)."""
    old = labels[node]
    if old == new:
        return False
    if node < n_users:
        w = w_user[node]
        sum_user[new] += w
        user_count[old] -= 1
        if user_count[old] == 0:
            sum_user[old] = 0.0
            k_counts[0] -= 1
        else:
            sum_user[old] -= w
        if user_count[new] == 0:
            k_counts[0] += 1
        user_count[new] += 1
    else:
        w = w_item[node - n_users]
        sum_item[new] += w
        item_count[old] -= 1
        if item_count[old] == 0:
            sum_item[old] = 0.0
            k_counts[1] -= 1
        else:
            sum_item[old] -= w
        if item_count[new] == 0:
            k_counts[1] += 1
        item_count[new] += 1

    node_count[old] -= 1
    if node_count[old] == 0:
        k_counts[2] -= 1
    if node_count[new] == 0:
        k_counts[2] += 1
    node_count[new] += 1
    labels[node] = new
    return True


@njit(cache=True)
def sweep(order, n_users, user_indptr, user_indices, item_indptr, item_indices,
          labels, w_user, w_item, sum_user, sum_item, user_count, item_count,
          node_count, k_counts, gamma, counts, touched):
    """One pass of sequential updates over ``order``; returns the number of moves."""
    moves = 0
    for node in order:
        new = best_label(node, n_users, user_indptr, user_indices, item_indptr, item_indices,
                         labels, w_user, w_item, sum_user, sum_item, gamma, counts, touched,
                         False)
        if move_node(node, new, n_users, labels, w_user, w_item, sum_user, sum_item,
                     user_count, item_count, node_count, k_counts):
            moves += 1
    return moves


@njit(cache=True)
def secondary_labels(n_users, user_indptr, user_indices, item_indptr, item_indices,
                     labels, w_user, w_item, sum_user, sum_item, gamma, counts, touched,
                     exclude_current):
    """Best label of every user against the frozen state, without moving anyone."""
    out = np.empty(n_users, dtype=np.int64)
    for u in range(n_users):
        out[u] = best_label(u, n_users, user_indptr, user_indices, item_indptr, item_indices,
                            labels, w_user, w_item, sum_user, sum_item, gamma, counts, touched,
                            exclude_current)
    return out
