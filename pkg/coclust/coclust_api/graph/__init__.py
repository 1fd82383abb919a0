"""
Bipartite interaction graphs: parsing and CSR construction.
"""

from .builder import build_graph
from .models import BipartiteGraph, EdgeList
from .parser import parse_edge_list, read_edge_list, write_edge_list

__all__ = [
    'BipartiteGraph',
    'EdgeList',
    'build_graph',
    'parse_edge_list',
    'read_edge_list',
    'write_edge_list',
]
