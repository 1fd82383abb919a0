"""
Clustering metrics (Gini, ACCL, histograms, ARI).
"""

from .clustering import (
    GiniScope,
    accl,
    ari,
    cluster_size_histogram,
    cluster_sizes,
    cross_cluster_edges,
    gini,
    gini_by_scope,
    pair_item_clusters,
)

__all__ = [
    'GiniScope',
    'accl',
    'ari',
    'cluster_size_histogram',
    'cluster_sizes',
    'cross_cluster_edges',
    'gini',
    'gini_by_scope',
    'pair_item_clusters',
]
