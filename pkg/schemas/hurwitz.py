"""
Factorization Schemas
Factorizations, move paths and orbit reports as exchanged by the hurwitz command
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from .perm import PermModel


class FactorizationModel(BaseModel):
    """Ordered factors of a permutation; the product is recomputed on load"""
    degree: int = Field(..., ge=1)
    factors: List[PermModel] = Field(..., min_length=1)


class Direction(str, Enum):
    """Move direction: forward is σ_i, backward is σ_i⁻¹"""
    FORWARD = "f"
    BACKWARD = "b"


class MoveModel(BaseModel):
    """One Hurwitz move at positions (i, i+1), 1-based"""
    i: int = Field(..., ge=1)
    dir: Direction


class ReplayRequest(BaseModel):
    """A stored path with its start and expected endpoint"""
    start: FactorizationModel
    path: List[MoveModel] = Field(default_factory=list)
    end: Optional[FactorizationModel] = None


class InvariantSummary(BaseModel):
    """Move-invariant data of an orbit"""
    product: PermModel
    cycle_types: List[List[int]] = Field(..., description="sorted multiset of factor cycle types")
    subgroup_size: Optional[int] = Field(None, description="order of the generated subgroup, if within cap")


class OrbitReport(BaseModel):
    """Result of a Hurwitz orbit enumeration"""
    size: int = Field(..., ge=1)
    exhausted: bool
    mod_conjugation: bool = False
    representatives: List[FactorizationModel] = Field(default_factory=list)
    truncated: bool = False
    invariant_summary: InvariantSummary


class EquivalenceVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class EquivalenceReport(BaseModel):
    """Outcome of an equivalence test; `path` is present exactly for YES"""
    verdict: EquivalenceVerdict
    path: Optional[List[MoveModel]] = None
    reason: str = ""
    explored: int = 0
