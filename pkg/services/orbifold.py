"""
Orbifold Service
Riemann-Hurwitz arithmetic for orbifold signatures (b; m_1, ..., m_r)
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

from sympy import Integer, Rational

import config
from services import ServiceError
from utils.checks import require_all_at_least, require_positive
from utils.logger import setup_logger

logger = setup_logger("services.orbifold", config.LOG_LEVEL)


class OrbifoldServiceError(ServiceError):
    """Orbifold arithmetic error"""


class NotElliptic(OrbifoldServiceError):
    """Triangle triple is parabolic or hyperbolic"""


class NotIntegral(OrbifoldServiceError):
    """Riemann-Hurwitz data forces a non-integral value"""


class SignatureSyntaxError(OrbifoldServiceError):
    """Unparseable or invalid signature"""


class GroupType(str, Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class OrbifoldSignature:
    """Genus b of the quotient curve and the branching orders m_i >= 2"""
    genus: int
    branch_orders: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch_orders", tuple(self.branch_orders))
        if self.genus < 0:
            raise SignatureSyntaxError(f"genus must be nonnegative, got {self.genus}")
        require_all_at_least(SignatureSyntaxError, "branch order", self.branch_orders, 2)

    def __str__(self) -> str:
        return format_signature(self)


def _type_of(value) -> GroupType:
    if value > 0:
        return GroupType.ELLIPTIC
    if value == 0:
        return GroupType.PARABOLIC
    return GroupType.HYPERBOLIC


def _reciprocal_sum(orders: Sequence[int]):
    return sum((Rational(1, m) for m in orders), Integer(0))


def classify_triangle(m1: int, m2: int, m3: int) -> GroupType:
    """Elliptic iff Σ 1/m_i > 1, parabolic iff = 1, hyperbolic iff < 1"""
    require_all_at_least(SignatureSyntaxError, "branch order", (m1, m2, m3), 2)
    return _type_of(_reciprocal_sum((m1, m2, m3)) - 1)


def elliptic_order(m1: int, m2: int, m3: int) -> int:
    """
    Order of the finite rotation group G' with triangle signature (m1, m2, m3)

    From -2 = |G'|(-2 + Σ(1 - 1/m_i)), so |G'| = 2 / (Σ 1/m_i - 1).

    Raises:
        NotElliptic: the triple is parabolic or hyperbolic
    """
    kind = classify_triangle(m1, m2, m3)
    if kind != GroupType.ELLIPTIC:
        raise NotElliptic(f"({m1},{m2},{m3}) is {kind.value}")
    value = 2 / (_reciprocal_sum((m1, m2, m3)) - 1)
    if not value.is_integer:
        raise NotIntegral(f"elliptic order {value} is not an integer")
    return int(value)


def triangle_quotient_group(m1: int, m2: int, m3: int) -> str:
    """Name of the finite rotation group realizing an elliptic triple"""
    order = elliptic_order(m1, m2, m3)
    triple = tuple(sorted((m1, m2, m3)))
    if triple[:2] == (2, 2):
        return f"D{triple[2]}"
    return {12: "A4", 24: "S4", 60: "A5"}[order]


def orbifold_euler(sig: OrbifoldSignature) -> Rational:
    """2 - 2b - Σ(1 - 1/m_i), exact"""
    return Integer(2 - 2 * sig.genus) - sum(
        (1 - Rational(1, m) for m in sig.branch_orders), Integer(0)
    )


def classify_signature(sig: OrbifoldSignature) -> GroupType:
    """Type of a general signature by the sign of its orbifold Euler number"""
    return _type_of(orbifold_euler(sig))


def is_hyperbolic(sig: OrbifoldSignature) -> bool:
    return bool(orbifold_euler(sig) < 0)


def cover_genus(sig: OrbifoldSignature, group_order: int) -> int:
    """
    Genus g of a Galois cover with group of order `group_order` branched as `sig`

    2g - 2 = |G| · (-orbifold_euler(sig)). The existence of an order
    preserving epimorphism is the caller's claim and is not checked.

    Raises:
        NotIntegral: the forced genus is not a nonnegative integer
    """
    require_positive(NotIntegral, group_order=group_order)
    genus = (group_order * -orbifold_euler(sig) + 2) / 2
    if not genus.is_integer or genus < 0:
        raise NotIntegral(f"{format_signature(sig)} with |G|={group_order} forces g={genus}")
    return int(genus)


def isogenous_invariants(g1: int, g2: int, group_order: int) -> Tuple[int, int, int]:
    """
    (e, χ, K²) of (C_1 × C_2)/G with G acting freely

    e = 4(g1-1)(g2-1)/|G|, χ = e/4, K² = 8χ.
    """
    require_all_at_least(NotIntegral, "curve genus", (g1, g2), 2)
    require_positive(NotIntegral, group_order=group_order)
    e = Rational(4 * (g1 - 1) * (g2 - 1), group_order)
    chi = e / 4
    if not e.is_integer or not chi.is_integer:
        raise NotIntegral(f"e={e}, chi={chi} for genera ({g1},{g2}) and |G|={group_order}")
    return int(e), int(chi), int(8 * chi)


def zeuthen_segre_bound(g: int, b: int) -> int:
    """Lower bound 4(g-1)(b-1) for e(S) of a fibration of genus g over a base of genus b"""
    return 4 * (g - 1) * (b - 1)


def pencil_singular_fibres(eX: int, eY: int, eZ: int, n: int) -> int:
    """μ = (-1)^n (e(X) + e(Z) - 2e(Y)) for a Lefschetz pencil with base locus Z"""
    return (-1) ** n * (eX + eZ - 2 * eY)


_SIGNATURE_RE = re.compile(r"^\(\s*(\d+)\s*(?:;\s*([\d,\s—-]*))?\)$")


def parse_signature(text: str) -> OrbifoldSignature:
    """"(0; 2,3,7)" -> OrbifoldSignature; "(2;)", "(2; —)" and "(2)" have no branching"""
    match = _SIGNATURE_RE.match(text.strip())
    if not match:
        raise SignatureSyntaxError(f"cannot parse signature {text!r}; expected (b; m1,m2,...)")
    body = (match.group(2) or "").strip(" —-")
    try:
        orders = tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise SignatureSyntaxError(f"bad branch orders in {text!r}")
    return OrbifoldSignature(int(match.group(1)), orders)


def format_signature(sig: OrbifoldSignature) -> str:
    return f"({sig.genus}; {','.join(str(m) for m in sig.branch_orders)})"
