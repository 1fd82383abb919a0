"""
Data models for sketching assignments and codebooks.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel

from coclust_api.errors import InvalidInputError


@dataclass(frozen=True, eq=False)
class SketchAssignment:
    """
    Consecutive codebook-row ids per user (primary and optional secondary) and per item.

    User and item ids live in separate column spaces [0, k_user) and [0, k_item).
    """
    user_primary: NDArray[np.int64]
    item_cluster: NDArray[np.int64]
    k_user: int
    k_item: int
    gamma: float
    scheme: str
    user_secondary: Optional[NDArray[np.int64]] = None
    user_tokens: Optional[Tuple[str, ...]] = None
    item_tokens: Optional[Tuple[str, ...]] = None

    @property
    def scu(self) -> bool:
        return self.user_secondary is not None

    @property
    def n_users(self) -> int:
        return int(self.user_primary.shape[0])

    @property
    def n_items(self) -> int:
        return int(self.item_cluster.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SketchAssignment):
            return NotImplemented
        if (self.user_secondary is None) != (other.user_secondary is None):
            return False
        return (
            self.k_user == other.k_user
            and self.k_item == other.k_item
            and self.gamma == other.gamma
            and self.scheme == other.scheme
            and self.user_tokens == other.user_tokens
            and self.item_tokens == other.item_tokens
            and np.array_equal(self.user_primary, other.user_primary)
            and np.array_equal(self.item_cluster, other.item_cluster)
            and (self.user_secondary is None or np.array_equal(self.user_secondary, other.user_secondary))
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class Codebook:
    """A K × d table of shared embedding rows."""
    rows: NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.rows.ndim != 2 or self.rows.shape[1] < 1:
            raise InvalidInputError(f"codebook must be a K × d matrix with d >= 1, got shape {self.rows.shape}")

    @property
    def k(self) -> int:
        return int(self.rows.shape[0])

    @property
    def dim(self) -> int:
        return int(self.rows.shape[1])


class ParamCount(BaseModel):
    """Parameter accounting of a sketch against the full embedding tables."""
    codebook_params: int
    index_ints: int
    full_params: int
    scu_extra: int
    reported_params: int
    ratio: float
    reduction: float
