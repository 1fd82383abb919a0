"""
Balanced co-clustering objective and the classical bipartite quality functions.

Each quantity has a grouped O(|E| + K) evaluation; ``objective_trace`` and the
trace half of ``exclusive_lasso`` recompute through the indicator matrix Y so
the algebraic identities between the forms can be checked numerically.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np
import scipy.sparse as sp
from numpy.typing import NDArray

from coclust_api.errors import InvalidInputError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.weighting.schemes import WeightVector

logger = logging.getLogger(__name__)

Labeling = NDArray[np.int64]
LabelingLike = Union[Labeling, Sequence[int]]


@dataclass(frozen=True)
class ClusterGroups:
    """Labels compacted to 0..K-1 plus per-cluster intra-edge counts s_k."""
    codes: NDArray[np.int64]
    inverse: NDArray[np.int64]
    intra: NDArray[np.float64]

    @property
    def k(self) -> int:
        return int(self.codes.shape[0])


def as_labeling(graph: BipartiteGraph, labeling: LabelingLike) -> Labeling:
    labels = np.asarray(labeling, dtype=np.int64)
    if labels.shape != (graph.n_nodes,):
        raise InvalidInputError(
            f"labeling has shape {labels.shape}, expected ({graph.n_nodes},) "
            "(users first, then items)"
        )
    return labels


def _check_gamma(gamma: float) -> None:
    if not gamma >= 0:
        raise InvalidInputError(f"gamma must be >= 0, got {gamma}")


def group_clusters(graph: BipartiteGraph, labeling: LabelingLike) -> ClusterGroups:
    labels = as_labeling(graph, labeling)
    codes, inverse = np.unique(labels, return_inverse=True)
    inverse = inverse.astype(np.int64)
    cu = inverse[graph.edge_users]
    cv = inverse[graph.n_users + graph.user_indices]
    same = cu == cv
    intra = np.bincount(cu[same], minlength=codes.shape[0]).astype(np.float64)
    return ClusterGroups(codes=codes, inverse=inverse, intra=intra)


def intra_cluster_edges(graph: BipartiteGraph, labeling: LabelingLike) -> int:
    """Number of edges whose endpoints share a label."""
    return int(group_clusters(graph, labeling).intra.sum())


def objective_pairsum(graph: BipartiteGraph, weights: WeightVector, labeling: LabelingLike, gamma: float) -> float:
    """Σ_k [ s_k − γ · (Σ_{u∈U_k} w(u)) · (Σ_{v∈V_k} w(v)) ], each user–item pair counted once."""
    _check_gamma(gamma)
    groups = group_clusters(graph, labeling)
    nu = graph.n_users
    su = np.bincount(groups.inverse[:nu], weights=weights.w_user, minlength=groups.k)
    sv = np.bincount(groups.inverse[nu:], weights=weights.w_item, minlength=groups.k)
    return float(np.sum(groups.intra - gamma * (su * sv)))


def objective_trace(graph: BipartiteGraph, weights: WeightVector, labeling: LabelingLike, gamma: float) -> float:
    """
    Trace(YᵀAY) − γ·Trace(Yᵀ w wᵀ Y) evaluated with dense matrices over all node pairs.

    A is symmetric so every user–item pair is seen twice; the edge term is
    halved and the weight outer product is masked to its user×item blocks
    (also halved) so the result matches ``objective_pairsum``. Quadratic in
    the node count; meant for cross-checking on small graphs.
    """
    _check_gamma(gamma)
    labels = as_labeling(graph, labeling)
    _, inverse = np.unique(labels, return_inverse=True)
    y = np.eye(int(inverse.max()) + 1)[inverse]

    a = graph.adjacency().toarray()
    edge_term = np.trace(y.T @ a @ y) / 2.0

    nu = graph.n_users
    w = weights.joint
    outer = np.outer(w, w)
    outer[:nu, :nu] = 0.0
    outer[nu:, nu:] = 0.0
    penalty = np.trace(y.T @ outer @ y) / 2.0

    return float(edge_term - gamma * penalty)


def bipartite_modularity(graph: BipartiteGraph, labeling: LabelingLike, gamma: float) -> float:
    """(1/|E|) Σ_k ( s_k − γ · σ(u)_k · σ(v)_k / |E| ) with σ the per-cluster degree sums."""
    groups = group_clusters(graph, labeling)
    nu = graph.n_users
    m = float(graph.n_edges)
    sigma_u = np.bincount(groups.inverse[:nu], weights=graph.user_degree, minlength=groups.k)
    sigma_v = np.bincount(groups.inverse[nu:], weights=graph.item_degree, minlength=groups.k)
    return float(np.sum(groups.intra - gamma * sigma_u * sigma_v / m) / m)


def cpm_score(graph: BipartiteGraph, labeling: LabelingLike, gamma: float) -> float:
    """Bipartite Constant Potts Model Σ_k ( s_k − γ · |U_k| · |V_k| )."""
    groups = group_clusters(graph, labeling)
    nu = graph.n_users
    count_u = np.bincount(groups.inverse[:nu], minlength=groups.k).astype(np.float64)
    count_v = np.bincount(groups.inverse[nu:], minlength=groups.k).astype(np.float64)
    return float(np.sum(groups.intra - gamma * (count_u * count_v)))


def exclusive_lasso(weights: WeightVector, labeling: LabelingLike) -> Tuple[float, float]:
    """
    Weighted exclusive lasso of the cluster volumes.

    Returns ``(deviation_form, trace_form)`` where deviation_form is
    Σ_k (vol(C_k) − (W(u)+W(v))/K)² and trace_form is Trace(Yᵀ w wᵀ Y) = Σ_k vol(C_k)².
    They satisfy deviation_form = trace_form − (W(u)+W(v))²/K.
    """
    w = weights.joint
    labels = np.asarray(labeling, dtype=np.int64)
    if labels.shape != w.shape:
        raise InvalidInputError(f"labeling has shape {labels.shape}, expected {w.shape}")
    if labels.size == 0:
        raise InvalidInputError("exclusive lasso needs at least one cluster")

    codes, inverse = np.unique(labels, return_inverse=True)
    k = codes.shape[0]
    total = weights.total_user + weights.total_item

    volumes = np.bincount(inverse, weights=w, minlength=k)
    deviation = float(np.sum((volumes - total / k) ** 2))

    y = sp.csr_matrix((np.ones(labels.size), (np.arange(labels.size), inverse)), shape=(labels.size, k))
    yw = y.T @ w
    trace_form = float(yw @ yw)

    return deviation, trace_form
