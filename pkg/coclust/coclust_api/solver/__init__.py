"""
Label-propagation solver (basic and with secondary user clusters).
"""

from .models import DEFAULT_MAX_ITERS, ClusterState, NodeOrder, SolveReport, SolverConfig
from .propagation import (
    MoveAuditor,
    likelihood,
    reduced_budget,
    run_basic,
    run_complete,
    secondary_pass,
    update_node,
)

__all__ = [
    'DEFAULT_MAX_ITERS',
    'ClusterState',
    'MoveAuditor',
    'NodeOrder',
    'SolveReport',
    'SolverConfig',
    'likelihood',
    'reduced_budget',
    'run_basic',
    'run_complete',
    'secondary_pass',
    'update_node',
]
