"""
Clustering diagnostics: size inequality, cross-cluster links, size histograms
and partition agreement.
"""

import logging
from enum import Enum
from math import comb
from typing import Dict, Sequence

import numpy as np
import scipy.sparse as sp
from numpy.typing import NDArray
from sklearn.metrics import adjusted_rand_score

from coclust_api.errors import InvalidInputError
from coclust_api.graph.models import BipartiteGraph
from coclust_api.objective.quality import LabelingLike, as_labeling, intra_cluster_edges
from coclust_api.sketch.models import SketchAssignment

logger = logging.getLogger(__name__)


class GiniScope(str, Enum):
    USER = "user"
    ITEM = "item"
    JOINT = "joint"


def gini(sizes: Sequence[int]) -> float:
    """(2/K) Σ_i (i/K − cumsum_i/total) over sizes sorted ascending."""
    values = np.sort(np.asarray(sizes, dtype=np.float64))
    if values.size == 0:
        raise InvalidInputError("gini needs at least one cluster size")
    if np.any(values <= 0):
        raise InvalidInputError("cluster sizes must be positive")
    k = values.size
    ranks = np.arange(1, k + 1, dtype=np.float64) / k
    shares = np.cumsum(values) / values.sum()
    return float(2.0 / k * np.sum(ranks - shares))


def cluster_sizes(graph: BipartiteGraph, labeling: LabelingLike,
                  scope: GiniScope = GiniScope.JOINT) -> NDArray[np.int64]:
    """Member counts per cluster, over users, items, or all nodes."""
    labels = as_labeling(graph, labeling)
    if scope is GiniScope.USER:
        labels = labels[:graph.n_users]
    elif scope is GiniScope.ITEM:
        labels = labels[graph.n_users:]
    _, counts = np.unique(labels, return_counts=True)
    return counts


def gini_by_scope(graph: BipartiteGraph, labeling: LabelingLike, scope: GiniScope = GiniScope.JOINT) -> float:
    return gini(cluster_sizes(graph, labeling, scope))


def cross_cluster_edges(graph: BipartiteGraph, labeling: LabelingLike) -> int:
    """Edges whose endpoints carry different labels."""
    return graph.n_edges - intra_cluster_edges(graph, labeling)


def accl(graph: BipartiteGraph, labeling: LabelingLike) -> float:
    """Averaged cross-cluster links: cross edges / C(K, 2); 0 when K < 2."""
    labels = as_labeling(graph, labeling)
    k = int(np.unique(labels).shape[0])
    if k < 2:
        return 0.0
    return cross_cluster_edges(graph, labels) / comb(k, 2)


def cluster_size_histogram(labeling: LabelingLike) -> Dict[int, int]:
    """label → number of nodes carrying it."""
    codes, counts = np.unique(np.asarray(labeling, dtype=np.int64), return_counts=True)
    return dict(zip(codes.tolist(), counts.tolist()))


def ari(labeling_a: LabelingLike, labeling_b: LabelingLike) -> float:
    """Adjusted Rand index of two labelings of the same nodes."""
    a = np.asarray(labeling_a, dtype=np.int64)
    b = np.asarray(labeling_b, dtype=np.int64)
    if a.shape != b.shape:
        raise InvalidInputError(f"labelings differ in length: {a.shape[0]} vs {b.shape[0]}")
    return float(adjusted_rand_score(a, b))


def pair_item_clusters(graph: BipartiteGraph, assignment: SketchAssignment) -> NDArray[np.int64]:
    """
    Joint labeling rebuilt from a saved assignment.

    Users keep their primary id; each item cluster joins the user cluster it
    shares the most edges with (ties to the smallest user id).
    """
    if assignment.n_users != graph.n_users or assignment.n_items != graph.n_items:
        raise InvalidInputError("assignment does not match the graph sizes")
    user_of_edge = assignment.user_primary[graph.edge_users]
    item_of_edge = assignment.item_cluster[graph.user_indices]
    links = sp.csr_matrix(
        (np.ones(graph.n_edges, dtype=np.int64), (item_of_edge, user_of_edge)),
        shape=(assignment.k_item, assignment.k_user),
    )
    links.sum_duplicates()
    partner = np.asarray(links.argmax(axis=1)).ravel()
    return np.concatenate([assignment.user_primary, partner[assignment.item_cluster]]).astype(np.int64)
