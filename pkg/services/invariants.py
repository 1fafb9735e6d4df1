"""
Invariants Service
Closed-form invariants of bidouble covers of the quadric, (a,b,c)-surfaces and
Manetti surfaces; homeomorphism and diffeomorphism tests; the box-principle
family search; plurigenera
"""
import csv
import io
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import config
from schemas.surface import BidoubleTypeModel, BoxFamilyReport, ClauseReport, SurfaceInvariants
from services import ServiceError
from utils.checks import require_all_at_least, require_positive, require_range
from utils.logger import setup_logger

logger = setup_logger("services.invariants", config.LOG_LEVEL)


class InvariantsServiceError(ServiceError):
    """Surface invariant error"""


class OutOfRange(InvariantsServiceError):
    """Parameters outside the formula's range"""


class NotApplicable(InvariantsServiceError):
    """Test preconditions fail (not simply connected, unknown divisibility, chi < 2)"""


class NotFoundWithinBound(InvariantsServiceError):
    """Search bound exhausted"""


class Obstruction(str, Enum):
    OBSTRUCTED = "obstructed"
    NO_OBSTRUCTION = "no_obstruction"


@dataclass(frozen=True, order=True)
class BidoubleType:
    """Bidouble cover of P1×P1 branched on curves of bidegree (2a,2b), (2c,2d)"""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        require_all_at_least(OutOfRange, "bidouble parameter", (self.a, self.b, self.c, self.d), 1)

    @property
    def general_type(self) -> bool:
        return self.a + self.c >= 3 and self.b + self.d >= 3

    def __str__(self) -> str:
        return f"({self.a},{self.b})({self.c},{self.d})"


def _surface(kind: str, params: Sequence[int], chi: int, K2: int, **extra) -> SurfaceInvariants:
    return SurfaceInvariants(
        kind=kind,
        params=list(params),
        chi=chi,
        p_g=chi - 1,
        q=0,
        K2=K2,
        e=12 * chi - K2,
        sigma=K2 - 8 * chi,
        **extra,
    )


def bidouble_invariants(t: BidoubleType) -> SurfaceInvariants:
    """
    p_g = (a-1)(b-1) + (c-1)(d-1) + (a+c-1)(b+d-1), q = 0,
    K² = 8(a+c-2)(b+d-2), r = gcd(a+c-2, b+d-2)

    Raises:
        OutOfRange: outside the general-type range a+c >= 3, b+d >= 3
    """
    if not t.general_type:
        raise OutOfRange(f"bidouble type {t} is not of general type (need a+c >= 3, b+d >= 3)")
    a, b, c, d = t.a, t.b, t.c, t.d
    p_g = (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1)
    return _surface(
        "bidouble",
        (a, b, c, d),
        chi=1 + p_g,
        K2=8 * (a + c - 2) * (b + d - 2),
        r=gcd(a + c - 2, b + d - 2),
        simply_connected=True,
    )


def abc_moduli_dimension(a: int, b: int, c: int) -> int:
    """M = (b+1)(4a+c+3) + 2b(a+c+1) - 8"""
    return (b + 1) * (4 * a + c + 3) + 2 * b * (a + c + 1) - 8


def abc_invariants(a: int, b: int, c: int) -> SurfaceInvariants:
    """
    χ = 2(a+c-2)(b-1) + b(a+c), K² = 16(a+c-2)(b-1), r = gcd(a+c-2, 2(b-1))

    The moduli dimension M is reported alongside; it is the dimension of the
    family only under the non-deformation hypotheses.
    """
    require_positive(OutOfRange, a=a, c=c)
    require_range(OutOfRange, "b", b, 2)
    require_range(OutOfRange, "a+c", a + c, 3)
    s = a + c
    return _surface(
        "abc",
        (a, b, c),
        chi=2 * (s - 2) * (b - 1) + b * s,
        K2=16 * (s - 2) * (b - 1),
        r=gcd(s - 2, 2 * (b - 1)),
        simply_connected=True,
        moduli_dimension=abc_moduli_dimension(a, b, c),
    )


def recover_abc(chi: int, K2: int, M: Optional[int] = None) -> List[Tuple[int, int, int]]:
    """
    All (a, b, c) whose abc_invariants give (chi, K2) and, if given, moduli dimension M

    With s = a+c, t = b: s·t = (8χ - K²)/8 and (s-2)(t-1) = K²/16, hence
    s + 2t = s·t - (s-2)(t-1) + 2.
    """
    if K2 % 16 or (8 * chi - K2) % 8:
        return []
    product = (8 * chi - K2) // 8
    linear = product - K2 // 16 + 2
    # 2t² - linear·t + product = 0
    disc = linear * linear - 8 * product
    if disc < 0 or isqrt(disc) ** 2 != disc:
        return []
    root = isqrt(disc)
    solutions: Set[Tuple[int, int, int]] = set()
    for numerator in (linear - root, linear + root):
        if numerator % 4:
            continue
        t = numerator // 4
        s = linear - 2 * t
        if t < 2 or s < 3:
            continue
        for a in range(1, s):
            if M is None or abc_moduli_dimension(a, t, s - a) == M:
                solutions.add((a, t, s - a))
    return sorted(solutions)


def manetti_baseline_k2(a: int, b: int) -> int:
    """K² = 2(3a-4)(3b-4) with no triple points"""
    return 2 * (3 * a - 4) * (3 * b - 4)


def manetti_invariants(a: int, b: int, n: int) -> SurfaceInvariants:
    """
    K² = 18ab - 24(a+b) + 32 - n, χ = 4 + 3(ab - a - b)

    Each of the n triple points lowers K² by one and leaves χ alone. The
    divisibility of K is not determined by these numbers and is left unknown.
    """
    require_positive(OutOfRange, a=a, b=b)
    require_range(OutOfRange, "n", n, 0)
    logger.debug(f"manetti ({a},{b},{n}): divisibility of K unknown")
    return _surface(
        "manetti",
        (a, b, n),
        chi=4 + 3 * (a * b - a - b),
        K2=18 * a * b - 24 * (a + b) + 32 - n,
        r=None,
        simply_connected=not (a % 2 == 0 and b % 2 == 0),
    )


def homeo_test(s1: SurfaceInvariants, s2: SurfaceInvariants) -> bool:
    """
    Oriented homeomorphism of simply connected minimal surfaces

    Equal χ and K² give equal rank and signature of the intersection form, and
    r mod 2 decides its parity; Freedman's classification does the rest.

    Raises:
        NotApplicable: a surface is not simply connected, has unknown r or χ < 2
    """
    for s in (s1, s2):
        if not s.simply_connected:
            raise NotApplicable(f"{s.kind} {s.params} is not simply connected")
        if s.r is None:
            raise NotApplicable(f"{s.kind} {s.params} has unknown divisibility r")
        if s.chi < 2:
            raise NotApplicable(f"{s.kind} {s.params} has chi < 2")
    return s1.chi == s2.chi and s1.K2 == s2.K2 and s1.r % 2 == s2.r % 2


def diffeo_obstruction(s1: SurfaceInvariants, s2: SurfaceInvariants) -> Obstruction:
    """Obstructed iff the divisibility indices differ; unknown r obstructs nothing"""
    if s1.r is None or s2.r is None:
        return Obstruction.NO_OBSTRUCTION
    return Obstruction.OBSTRUCTED if s1.r != s2.r else Obstruction.NO_OBSTRUCTION


def plurigenus(chi: int, K2: int, m: int) -> int:
    """P_m = χ + m(m-1)/2 · K² for m >= 2"""
    require_range(OutOfRange, "m", m, 2)
    require_positive(OutOfRange, chi=chi, K2=K2)
    return chi + m * (m - 1) * K2 // 2


def hilbert_5canonical(chi: int, K2: int, m: int) -> int:
    """h⁰(5mK) = χ + (5m-1)5m/2 · K²"""
    require_range(OutOfRange, "m", m, 1)
    return plurigenus(chi, K2, 5 * m)


def nondef_hypotheses(a: int, b: int, c: int, k: int) -> ClauseReport:
    """Numerical hypotheses (I), (II), (III), (IV1 or IV2) of the non-deformation theorem"""
    values = (a, b, c, k)
    clauses: Dict[str, bool] = {
        "I": all(x > 0 and x % 2 == 0 for x in values) and a >= 4 and b >= 4 and c - k >= 4,
        "II": a >= 2 * c + 1,
        "III": b >= c + 2,
        "IV1": b >= 2 * a + 2 * k - 1,
        "IV2": a >= b + 2,
    }
    clauses["IV"] = clauses["IV1"] or clauses["IV2"]
    failed = [name for name in ("I", "II", "III", "IV") if not clauses[name]]
    return ClauseReport(holds=not failed, clauses=clauses, failed=failed)


def _even_factorizations(exponent: int) -> List[Tuple[int, int]]:
    """Unordered u'·v' = 6^exponent with both factors even, u' <= v'"""
    total = 6 ** exponent
    pairs = []
    u = 2
    while u * u <= total:
        if total % u == 0 and (total // u) % 2 == 0:
            pairs.append((u, total // u))
        u += 2
    return pairs


def _products(w_max: int, z_max: int) -> Set[int]:
    """Values W·Z with 0 <= W <= w_max and |Z| <= z_max"""
    return {w * z for w in range(w_max + 1) for z in range(-z_max, z_max + 1)}


def _balance(u: int, v: int, target: int) -> Optional[Tuple[int, int]]:
    """Smallest (W, |Z|) with W >= 0 and W·Z = target inside the box"""
    w_max, z_max = u // 2 - 2, v // 2 - 2
    best = None
    for w in range(w_max + 1):
        for z in sorted(range(-z_max, z_max + 1), key=lambda x: (abs(x), x)):
            if w * z == target:
                best = (w, z)
                break
        if best:
            return best
    return None


class InvariantsService:
    """Box-principle search for homeomorphic, non-diffeomorphic bidouble covers"""

    def __init__(self, max_exponent: Optional[int] = None, max_scale: Optional[int] = None):
        if max_exponent is None:
            max_exponent = config.BOX_MAX_EXPONENT
        if max_scale is None:
            max_scale = config.BOX_MAX_SCALE
        self.max_exponent = require_range(OutOfRange, "max_exponent", max_exponent, 1)
        self.max_scale = require_range(OutOfRange, "max_scale", max_scale, 1)

    def _family(self, h: int, exponent: int, scale: int) -> Optional[List[BidoubleType]]:
        factorizations = _even_factorizations(exponent)
        cache: Dict[Tuple[int, int], Set[int]] = {}
        for combo in combinations(factorizations, h):
            if len({gcd(u, v) for u, v in combo}) < h:
                continue
            boxes = [(scale * u, scale * v) for u, v in combo]
            if any(u // 2 - 2 < 0 or v // 2 - 2 < 0 for u, v in boxes):
                continue
            shifts: Optional[Set[int]] = None
            for u, v in boxes:
                if (u, v) not in cache:
                    cache[(u, v)] = {(u + v) // 2 - p for p in _products(u // 2 - 2, v // 2 - 2)}
                candidates = cache[(u, v)]
                shifts = candidates if shifts is None else shifts & candidates
                if not shifts:
                    break
            if not shifts:
                continue
            s = min(shifts)
            family = []
            for u, v in boxes:
                w, z = _balance(u, v, (u + v) // 2 - s)
                family.append(BidoubleType(u // 2 + w + 1, v // 2 - z + 1, u // 2 - w + 1, v // 2 + z + 1))
            return family
        return None

    def box_family(self, h: int) -> BoxFamilyReport:
        """
        h bidouble types, pairwise homeomorphic and pairwise not diffeomorphic

        Distinct even factorizations u'v' = 6^n scaled by T give a+c-2 = T·u',
        b+d-2 = T·v', so K² agrees and r = T·gcd(u', v') differs; the box
        parameters then equalize χ. The search runs over n, then T, and returns
        the first family found.

        Raises:
            NotFoundWithinBound: no family with n <= max_exponent, T <= max_scale
        """
        require_range(OutOfRange, "h", h, 1)
        for exponent in range(1, self.max_exponent + 1):
            for scale in range(1, self.max_scale + 1):
                family = self._family(h, exponent, scale)
                if family is None:
                    continue
                invariants = [bidouble_invariants(t) for t in family]
                for s1, s2 in combinations(invariants, 2):
                    if not homeo_test(s1, s2) or diffeo_obstruction(s1, s2) != Obstruction.OBSTRUCTED:
                        raise InvariantsServiceError(f"box family {[str(t) for t in family]} fails verification")
                logger.info(f"box family h={h} found at 6^{exponent}, scale {scale}")
                return BoxFamilyReport(
                    h=h,
                    exponent=exponent,
                    scale=scale,
                    types=[to_model(t) for t in family],
                    invariants=invariants,
                )
        raise NotFoundWithinBound(
            f"no box family for h={h} within 6^{self.max_exponent}, scale {self.max_scale}",
            detail={"exponent": self.max_exponent, "scale": self.max_scale},
        )


def to_model(t: BidoubleType) -> BidoubleTypeModel:
    return BidoubleTypeModel(a=t.a, b=t.b, c=t.c, d=t.d)


def from_model(model: BidoubleTypeModel) -> BidoubleType:
    return BidoubleType(model.a, model.b, model.c, model.d)


TABLE_FIELDS = ["kind", "params", "chi", "p_g", "q", "K2", "e", "sigma", "r", "simply_connected", "moduli_dimension"]


def _row(s: SurfaceInvariants) -> Dict[str, str]:
    data = s.model_dump()
    data["params"] = " ".join(str(x) for x in s.params)
    return {k: "" if data[k] is None else str(data[k]) for k in TABLE_FIELDS}


def to_csv(rows: Iterable[SurfaceInvariants]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for s in rows:
        writer.writerow(_row(s))
    return buffer.getvalue()


def to_markdown(rows: Iterable[SurfaceInvariants]) -> str:
    lines = ["| " + " | ".join(TABLE_FIELDS) + " |", "|" + "---|" * len(TABLE_FIELDS)]
    for s in rows:
        row = _row(s)
        lines.append("| " + " | ".join(row[k] for k in TABLE_FIELDS) + " |")
    return "\n".join(lines) + "\n"


# Singleton instance
_invariants_service: Optional[InvariantsService] = None


def get_invariants_service() -> InvariantsService:
    """Get the invariants service instance (singleton)"""
    global _invariants_service
    if _invariants_service is None:
        _invariants_service = InvariantsService()
    return _invariants_service
