"""
Node weighting schemes (HWS, modularity, CPM, reverse HWS, custom).
"""

from .schemes import SchemeName, WeightScheme, WeightVector, compute_weights

__all__ = [
    'SchemeName',
    'WeightScheme',
    'WeightVector',
    'compute_weights',
]
