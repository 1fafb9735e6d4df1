"""
Surface Invariant Schemas
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class SurfaceInvariants(BaseModel):
    """
    Numerical invariants of a minimal surface of general type

    Noether (e = 12χ − K²) and the signature relations are enforced at
    construction; a constructor producing inconsistent values fails here.
    """
    kind: str = Field(..., description="bidouble | abc | manetti | isogenous")
    params: List[int] = Field(default_factory=list)
    chi: int
    p_g: int
    q: int = 0
    K2: int
    e: int
    sigma: int
    r: Optional[int] = Field(None, description="divisibility of the canonical class; None if unknown")
    simply_connected: bool
    moduli_dimension: Optional[int] = None

    @model_validator(mode="after")
    def _noether(self) -> "SurfaceInvariants":
        if self.e != 12 * self.chi - self.K2:
            raise ValueError(f"Noether violated: e={self.e}, 12chi-K2={12 * self.chi - self.K2}")
        if self.sigma != self.K2 - 8 * self.chi:
            raise ValueError(f"signature violated: sigma={self.sigma}, K2-8chi={self.K2 - 8 * self.chi}")
        if 3 * self.sigma != self.K2 - 2 * self.e:
            raise ValueError("index theorem violated: 3 sigma != K2 - 2e")
        return self

    @property
    def b2(self) -> int:
        return self.e - 2 + 4 * self.q


class ClauseReport(BaseModel):
    """Per-clause evaluation of the non-deformation hypotheses"""
    holds: bool
    clauses: Dict[str, bool]
    failed: List[str] = Field(default_factory=list)


class BidoubleTypeModel(BaseModel):
    """Bidouble cover of the quadric of type (2a,2b),(2c,2d)"""
    a: int = Field(..., ge=1)
    b: int = Field(..., ge=1)
    c: int = Field(..., ge=1)
    d: int = Field(..., ge=1)


class BoxFamilyReport(BaseModel):
    """A verified box-principle family"""
    h: int
    exponent: int
    scale: int
    types: List[BidoubleTypeModel]
    invariants: List[SurfaceInvariants]
