"""
Permutation Schemas
JSON form of a permutation: {"degree": n, "cycles": [[...], ...]}, fixed points omitted
"""
from typing import List

from pydantic import BaseModel, Field, field_validator


class PermModel(BaseModel):
    """A permutation in disjoint-cycle form"""
    degree: int = Field(..., ge=1, description="number of points")
    cycles: List[List[int]] = Field(default_factory=list, description="nontrivial disjoint cycles")

    @field_validator("cycles")
    @classmethod
    def _no_empty_cycles(cls, value: List[List[int]]) -> List[List[int]]:
        return [c for c in value if len(c) > 1]


class ElementSetModel(BaseModel):
    """A set of permutations, sorted lexicographically by image sequence"""
    degree: int = Field(..., ge=1)
    size: int = Field(..., ge=0)
    members: List[PermModel] = Field(default_factory=list)
