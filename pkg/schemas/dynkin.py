"""
Curve Configuration Schemas
Config JSON: {"count": k, "edges": [[i, j, mult], ...]}, curves indexed from 0
"""
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator


class CurveConfigModel(BaseModel):
    """A configuration of (-2)-curves"""
    count: int = Field(..., ge=1)
    edges: List[List[int]] = Field(default_factory=list)

    @field_validator("edges")
    @classmethod
    def _edge_shape(cls, value: List[List[int]]) -> List[List[int]]:
        for edge in value:
            if len(edge) not in (2, 3):
                raise ValueError(f"edge must be [i, j] or [i, j, mult], got {edge}")
        return value


class ClassificationModel(BaseModel):
    """Verdict of the ADE / extended classifiers"""
    label: Optional[str] = None
    extended_label: Optional[str] = None
    negative_definite: bool
    reason: Optional[str] = None
    fundamental_cycle: Optional[List[int]] = None
    elliptic_divisor: Optional[List[int]] = None


class RdpEntry(BaseModel):
    """One row of the rational double point table"""
    label: str
    equation: str
    milnor_number: int
    aut_group: str
    binary_group: str
    binary_group_order: int
    rotation_group: str
    triangle_signature: Optional[List[int]] = None
