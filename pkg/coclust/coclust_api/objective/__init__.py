"""
Objective functions: pair-sum and trace forms, bipartite modularity, CPM, exclusive lasso.
"""

from .quality import (
    ClusterGroups,
    Labeling,
    as_labeling,
    bipartite_modularity,
    cpm_score,
    exclusive_lasso,
    group_clusters,
    intra_cluster_edges,
    objective_pairsum,
    objective_trace,
)

__all__ = [
    'ClusterGroups',
    'Labeling',
    'as_labeling',
    'bipartite_modularity',
    'cpm_score',
    'exclusive_lasso',
    'group_clusters',
    'intra_cluster_edges',
    'objective_pairsum',
    'objective_trace',
]
