"""
Per-node weights for the instantiations of the balanced co-clustering framework.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from coclust_api.errors import InvalidInputError
from coclust_api.graph.models import BipartiteGraph

logger = logging.getLogger(__name__)


class SchemeName(str, Enum):
    HWS = "hws"
    MODULARITY = "modularity"
    CPM_UNIT = "cpm-unit"
    REVERSE_HWS = "reverse-hws"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class WeightScheme:
    """Scheme selector; ``CUSTOM`` carries explicit weight arrays."""
    name: SchemeName
    user_weights: Optional[NDArray[np.float64]] = None
    item_weights: Optional[NDArray[np.float64]] = None

    @classmethod
    def of(cls, name: str) -> "WeightScheme":
        try:
            scheme = SchemeName(name)
        except ValueError:
            raise InvalidInputError(f"unknown weighting scheme: {name!r}") from None
        if scheme is SchemeName.CUSTOM:
            raise InvalidInputError("custom schemes need explicit weights; use WeightScheme.custom")
        return cls(scheme)

    @classmethod
    def custom(cls, user_weights: Sequence[float], item_weights: Sequence[float]) -> "WeightScheme":
        return cls(
            SchemeName.CUSTOM,
            np.asarray(user_weights, dtype=np.float64),
            np.asarray(item_weights, dtype=np.float64),
        )


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Frozen user and item weights with their totals W(u), W(v)."""
    w_user: NDArray[np.float64]
    w_item: NDArray[np.float64]
    total_user: float
    total_item: float
    scheme: SchemeName

    @classmethod
    def from_arrays(cls, w_user: NDArray[np.float64], w_item: NDArray[np.float64],
                    scheme: SchemeName) -> "WeightVector":
        w_user = np.ascontiguousarray(w_user, dtype=np.float64)
        w_item = np.ascontiguousarray(w_item, dtype=np.float64)
        w_user.setflags(write=False)
        w_item.setflags(write=False)
        return cls(w_user, w_item, math.fsum(w_user.tolist()), math.fsum(w_item.tolist()), scheme)

    @property
    def joint(self) -> NDArray[np.float64]:
        """Weights over the joint node space (users then items)."""
        return np.concatenate([self.w_user, self.w_item])


def compute_weights(graph: BipartiteGraph, scheme: WeightScheme) -> WeightVector:
    """Evaluate the scheme's weight formulas on ``graph``."""
    sqrt_edges = math.sqrt(graph.n_edges)
    du = graph.user_degree.astype(np.float64)
    dv = graph.item_degree.astype(np.float64)

    if scheme.name is SchemeName.HWS:
        w_user = du / sqrt_edges
        w_item = np.full(graph.n_items, 1.0 / math.sqrt(graph.n_items))
    elif scheme.name is SchemeName.MODULARITY:
        w_user = du / sqrt_edges
        w_item = dv / sqrt_edges
    elif scheme.name is SchemeName.CPM_UNIT:
        w_user = np.ones(graph.n_users)
        w_item = np.ones(graph.n_items)
    elif scheme.name is SchemeName.REVERSE_HWS:
        w_user = np.full(graph.n_users, 1.0 / math.sqrt(graph.n_users))
        w_item = dv / sqrt_edges
    else:
        w_user, w_item = _validate_custom(graph, scheme)

    weights = WeightVector.from_arrays(w_user, w_item, scheme.name)
    logger.debug(f"📊 Weights ({scheme.name.value}): W(u)={weights.total_user:.6g}, W(v)={weights.total_item:.6g}")
    return weights


def _validate_custom(graph: BipartiteGraph, scheme: WeightScheme):
    w_user, w_item = scheme.user_weights, scheme.item_weights
    if w_user is None or w_item is None:
        raise InvalidInputError("custom scheme requires both user and item weights")
    if w_user.shape != (graph.n_users,) or w_item.shape != (graph.n_items,):
        raise InvalidInputError(
            f"custom weights have shapes {w_user.shape}/{w_item.shape}, "
            f"expected ({graph.n_users},)/({graph.n_items},)"
        )
    if not (np.all(w_user > 0) and np.all(w_item > 0)):
        raise InvalidInputError("custom weights must be strictly positive")
    return w_user, w_item
