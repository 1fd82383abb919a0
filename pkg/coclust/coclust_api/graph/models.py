"""
Data models for user–item interaction graphs.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Tuple

import numpy as np
import scipy.sparse as sp
from numpy.typing import NDArray


@dataclass(frozen=True)
class EdgeList:
    """Interactions in file order; order of first appearance defines dense ids."""
    pairs: List[Tuple[str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Tuple[str, str]]:
        return iter(self.pairs)


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """
    Immutable bipartite graph stored as CSR in both directions.

    Users occupy node ids ``0..n_users`` and items ``n_users..n_users+n_items``
    wherever a joint node space is needed (labelings, solver state).
    """
    n_users: int
    n_items: int
    user_indptr: NDArray[np.int64]
    user_indices: NDArray[np.int64]
    item_indptr: NDArray[np.int64]
    item_indices: NDArray[np.int64]
    user_tokens: Tuple[str, ...]
    item_tokens: Tuple[str, ...]

    @property
    def n_edges(self) -> int:
        return int(self.user_indices.shape[0])

    @property
    def n_nodes(self) -> int:
        return self.n_users + self.n_items

    @cached_property
    def user_degree(self) -> NDArray[np.int64]:
        return np.diff(self.user_indptr)

    @cached_property
    def item_degree(self) -> NDArray[np.int64]:
        return np.diff(self.item_indptr)

    @cached_property
    def edge_users(self) -> NDArray[np.int64]:
        """User endpoint of every edge, aligned with ``user_indices``."""
        return np.repeat(np.arange(self.n_users, dtype=np.int64), self.user_degree)

    def user_neighbors(self, user: int) -> NDArray[np.int64]:
        return self.user_indices[self.user_indptr[user]:self.user_indptr[user + 1]]

    def item_neighbors(self, item: int) -> NDArray[np.int64]:
        return self.item_indices[self.item_indptr[item]:self.item_indptr[item + 1]]

    def biadjacency(self) -> sp.csr_matrix:
        """The {0,1} user × item matrix B."""
        data = np.ones(self.n_edges, dtype=np.float64)
        return sp.csr_matrix(
            (data, self.user_indices, self.user_indptr),
            shape=(self.n_users, self.n_items),
        )

    def adjacency(self) -> sp.csr_matrix:
        """The symmetric (n_users + n_items)² block matrix [[0, B], [Bᵀ, 0]]."""
        b = self.biadjacency()
        return sp.bmat([[None, b], [b.T, None]], format="csr")

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield ``(user_id, item_id)`` pairs in user-major order."""
        for u, v in zip(self.edge_users.tolist(), self.user_indices.tolist()):
            yield u, v

    def token_pairs(self) -> Iterator[Tuple[str, str]]:
        """Yield ``(user_token, item_token)`` for every edge in user-major order."""
        for u, v in self.edges():
            yield self.user_tokens[u], self.item_tokens[v]
