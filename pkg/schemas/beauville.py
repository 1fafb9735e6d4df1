"""
Beauville Schemas
Generating pairs and certificates, serialized for regression snapshots
"""
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from .perm import PermModel


class GeneratingPairModel(BaseModel):
    """(a, b, c) with a·b·c = 1"""
    a: PermModel
    b: PermModel
    c: PermModel
    orders: List[int] = Field(..., min_length=3, max_length=3)


class CertificateChecks(BaseModel):
    generation1: bool
    generation2: bool
    disjointness: bool


class BeauvilleCertificate(BaseModel):
    """Certificate of an unmixed Beauville structure"""
    group_order: int = Field(..., ge=1)
    pair1: GeneratingPairModel
    pair2: GeneratingPairModel
    sigma1_size: int
    sigma2_size: int
    checks: CertificateChecks

    @model_validator(mode="after")
    def _all_checks_hold(self) -> "BeauvilleCertificate":
        if not (self.checks.generation1 and self.checks.generation2 and self.checks.disjointness):
            raise ValueError("a certificate requires every check to hold")
        return self


class BeauvilleFailure(BaseModel):
    """First violated Beauville condition"""
    reason: str = Field(..., description="generation1 | generation2 | disjointness")
    detail: str = ""


class AbelianSearchReport(BaseModel):
    """All canonical Beauville structures found on (Z/n)²"""
    n: int
    count: int
    certificates: List[BeauvilleCertificate] = Field(default_factory=list)
    second_pair_matrices: List[List[List[int]]] = Field(default_factory=list)


class WitnessReport(BaseModel):
    """Outcome of an inverting-automorphism scan"""
    found: bool
    witness: Optional[PermModel] = None
    outer_automorphism_caveat: bool = False
