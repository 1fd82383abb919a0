"""
Configuration, state and report models for the label-propagation solver.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from coclust_api.graph.models import BipartiteGraph
from coclust_api.weighting.schemes import SchemeName, WeightVector

DEFAULT_MAX_ITERS = 5  # sweeps usually converge well before 8


class NodeOrder(str, Enum):
    BY_INDEX = "index"
    SHUFFLED = "shuffle"


class SolverConfig(BaseModel):
    """Solver parameters. ``budget`` is B, the number of codebook rows."""
    model_config = ConfigDict(frozen=True)

    gamma: float = Field(..., ge=0)
    budget: int = Field(..., gt=0)
    dim: Optional[int] = Field(default=None, gt=0)
    max_iters: int = Field(default=DEFAULT_MAX_ITERS, gt=0)
    scheme: SchemeName = SchemeName.HWS
    scu: bool = False
    scu_distinct: bool = False
    strict_budget: bool = False
    order: NodeOrder = NodeOrder.BY_INDEX
    seed: int = 0

    @model_validator(mode="after")
    def _scu_needs_dim(self) -> "SolverConfig":
        if self.scu and self.dim is None:
            raise ValueError("secondary user clusters (scu) require the embedding dimension dim")
        return self


@dataclass
class ClusterState:
    """
    Mutable labels plus per-label aggregates, all indexed by raw label.

    Raw labels start unique (user i → i, item j → n_users + j) and only ever
    take values already present, so every aggregate fits in an array of
    length n_users + n_items.
    """
    n_users: int
    labels: NDArray[np.int64]
    sum_user_weight: NDArray[np.float64]
    sum_item_weight: NDArray[np.float64]
    user_count: NDArray[np.int64]
    item_count: NDArray[np.int64]
    node_count: NDArray[np.int64]
    # [K(u), K(v), distinct labels over all nodes]
    k_counts: NDArray[np.int64]

    @classmethod
    def initial(cls, graph: BipartiteGraph, weights: WeightVector) -> "ClusterState":
        n, nu = graph.n_nodes, graph.n_users
        labels = np.arange(n, dtype=np.int64)
        sum_user = np.zeros(n)
        sum_item = np.zeros(n)
        sum_user[:nu] = weights.w_user
        sum_item[nu:] = weights.w_item
        user_count = np.zeros(n, dtype=np.int64)
        item_count = np.zeros(n, dtype=np.int64)
        user_count[:nu] = 1
        item_count[nu:] = 1
        return cls(
            n_users=nu,
            labels=labels,
            sum_user_weight=sum_user,
            sum_item_weight=sum_item,
            user_count=user_count,
            item_count=item_count,
            node_count=np.ones(n, dtype=np.int64),
            k_counts=np.array([nu, graph.n_items, n], dtype=np.int64),
        )

    @property
    def k_user(self) -> int:
        return int(self.k_counts[0])

    @property
    def k_item(self) -> int:
        return int(self.k_counts[1])

    @property
    def k_total(self) -> int:
        return self.k_user + self.k_item

    @property
    def k_joint(self) -> int:
        return int(self.k_counts[2])

    @property
    def user_labels(self) -> NDArray[np.int64]:
        return self.labels[:self.n_users]

    @property
    def item_labels(self) -> NDArray[np.int64]:
        return self.labels[self.n_users:]

    def copy(self) -> "ClusterState":
        return ClusterState(
            n_users=self.n_users,
            labels=self.labels.copy(),
            sum_user_weight=self.sum_user_weight.copy(),
            sum_item_weight=self.sum_item_weight.copy(),
            user_count=self.user_count.copy(),
            item_count=self.item_count.copy(),
            node_count=self.node_count.copy(),
            k_counts=self.k_counts.copy(),
        )


class SolveReport(BaseModel):
    iterations_run: int
    converged_no_moves: bool
    budget_met: bool
    final_k_user: int
    final_k_item: int
    objective_value: float
    wall_time: float = Field(..., description="seconds")
    effective_budget: int
    neighbor_visits: int = 0
    scu_overflow: int = 0
    # K(u)+K(v) before the first sweep and after each sweep
    history: List[int] = Field(default_factory=list)
