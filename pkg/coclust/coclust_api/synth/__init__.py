"""
Synthetic graph generators and the exhaustive-search oracle.
"""

from .generators import planted_bipartite, random_bipartite
from .oracle import HARD_MAX_NODES, brute_force_optimum, restricted_growth_strings

__all__ = [
    'HARD_MAX_NODES',
    'brute_force_optimum',
    'planted_bipartite',
    'random_bipartite',
    'restricted_growth_strings',
]
