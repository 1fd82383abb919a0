"""
Sketching assignments: finalization, parameter accounting, embeddings and file format.
"""

from .assignment import align_to_graph, finalize, materialize, param_count, relabel_first_appearance
from .models import Codebook, ParamCount, SketchAssignment
from .persistence import load_assignment, read_assignment, save_assignment, write_assignment

__all__ = [
    'Codebook',
    'align_to_graph',
    'ParamCount',
    'SketchAssignment',
    'finalize',
    'load_assignment',
    'materialize',
    'param_count',
    'read_assignment',
    'relabel_first_appearance',
    'save_assignment',
    'write_assignment',
]
