"""
Schemas Package
"""
from .perm import PermModel, ElementSetModel
from .hurwitz import (
    Direction,
    EquivalenceReport,
    EquivalenceVerdict,
    FactorizationModel,
    InvariantSummary,
    MoveModel,
    OrbitReport,
    ReplayRequest,
)
from .beauville import (
    AbelianSearchReport,
    BeauvilleCertificate,
    BeauvilleFailure,
    CertificateChecks,
    GeneratingPairModel,
    WitnessReport,
)
from .dynkin import ClassificationModel, CurveConfigModel, RdpEntry
from .surface import (
    BidoubleTypeModel,
    BoxFamilyReport,
    ClauseReport,
    SurfaceInvariants,
)

__all__ = [
    "PermModel",
    "ElementSetModel",
    "Direction",
    "EquivalenceReport",
    "EquivalenceVerdict",
    "FactorizationModel",
    "InvariantSummary",
    "MoveModel",
    "OrbitReport",
    "ReplayRequest",
    "AbelianSearchReport",
    "BeauvilleCertificate",
    "BeauvilleFailure",
    "CertificateChecks",
    "GeneratingPairModel",
    "WitnessReport",
    "ClassificationModel",
    "CurveConfigModel",
    "RdpEntry",
    "BidoubleTypeModel",
    "BoxFamilyReport",
    "ClauseReport",
    "SurfaceInvariants",
]
