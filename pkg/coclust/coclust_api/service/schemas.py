from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from coclust_api.solver.models import DEFAULT_MAX_ITERS, NodeOrder
from coclust_api.weighting.schemes import SchemeName

Edge = Tuple[str, str]


class EdgesIn(BaseModel):
    edges: List[Edge] = Field(..., min_length=1, description="(user_token, item_token) pairs")

    @field_validator("edges")
    @classmethod
    def _tokens_not_empty(cls, edges: List[Edge]) -> List[Edge]:
        for user, item in edges:
            if not user or not item:
                raise ValueError("tokens must be non-empty")
        return edges


class ClusterIn(EdgesIn):
    gamma: float = Field(..., ge=0)
    budget: Optional[int] = Field(default=None, gt=0)
    ratio: Optional[float] = Field(default=None, gt=0, le=1)
    dim: Optional[int] = Field(default=None, gt=0)
    max_iters: int = Field(default=DEFAULT_MAX_ITERS, gt=0)
    scheme: SchemeName = SchemeName.HWS
    scu: bool = False
    scu_distinct: bool = False
    strict_budget: bool = False
    order: NodeOrder = NodeOrder.BY_INDEX
    seed: int = 0

    @model_validator(mode="after")
    def _one_budget(self) -> "ClusterIn":
        if (self.budget is None) == (self.ratio is None):
            raise ValueError("give exactly one of budget or ratio")
        if self.scheme is SchemeName.CUSTOM:
            raise ValueError("custom weights are not accepted over HTTP")
        return self


class AssignmentOut(BaseModel):
    users: Dict[str, int]
    items: Dict[str, int]
    secondary: Optional[Dict[str, int]] = None


class ClusterOut(BaseModel):
    report: Dict[str, Any]
    assignment: AssignmentOut


class ObjectiveIn(EdgesIn):
    user_labels: Dict[str, int]
    item_labels: Dict[str, int]
    gamma: float = Field(..., ge=0)
    scheme: SchemeName = SchemeName.HWS


class ObjectiveOut(BaseModel):
    objective: float
    modularity: float
    cpm: float
    accl: float
    exclusive_lasso: float
    clusters: int


class OracleIn(EdgesIn):
    gamma: float = Field(..., ge=0)
    scheme: SchemeName = SchemeName.HWS
    max_nodes: Optional[int] = Field(default=None, gt=0)


class OracleOut(BaseModel):
    score: float
    users: Dict[str, int]
    items: Dict[str, int]
