"""
Beauville Service
Stabilizer sets Σ(a,c), unmixed Beauville structures over permutation groups
and (Z/n)², and inverting-automorphism scans
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

import config
from schemas.beauville import (
    AbelianSearchReport,
    BeauvilleCertificate,
    BeauvilleFailure,
    CertificateChecks,
    GeneratingPairModel,
    WitnessReport,
)
from services import ServiceError
from services.permgroup import (
    DegreeMismatch,
    ElementSet,
    Perm,
    abelian_regular_group,
    closure,
    compose,
    conjugacy_orbit,
    conjugate,
    from_cycles,
    from_model as perm_from_model,
    identity,
    inverse,
    order,
    pair_conjugator,
    power,
    to_model as perm_to_model,
    translation,
)
from utils.checks import require_range, require_same_degree
from utils.logger import setup_logger

logger = setup_logger("services.beauville", config.LOG_LEVEL)

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
Vector = Tuple[int, int]


class BeauvilleServiceError(ServiceError):
    """Beauville structure error"""


class NotClosed(BeauvilleServiceError):
    """The supplied group is not closed under composition"""


class MemberMissing(BeauvilleServiceError):
    """A generator of the pair is not a member of the group"""


class BoundExceeded(BeauvilleServiceError):
    """Search parameter above the configured bound"""


class ExampleDegreeError(BeauvilleServiceError):
    """Degree outside the range of a built-in example family"""


@dataclass(frozen=True)
class GeneratingPair:
    """a, c and the derived b = a⁻¹∘c⁻¹, so that a∘b∘c = 1"""
    a: Perm
    c: Perm
    b: Perm = field(init=False)

    def __post_init__(self):
        require_same_degree(DegreeMismatch, self.a.degree, self.c.degree)
        object.__setattr__(self, "b", compose(inverse(self.a), inverse(self.c)))

    @property
    def degree(self) -> int:
        return self.a.degree

    @property
    def triple(self) -> Tuple[Perm, Perm, Perm]:
        return self.a, self.b, self.c


def orders_triple(pair: GeneratingPair) -> Tuple[int, int, int]:
    return order(pair.a), order(pair.b), order(pair.c)


def pair_to_model(pair: GeneratingPair) -> GeneratingPairModel:
    return GeneratingPairModel(
        a=perm_to_model(pair.a),
        b=perm_to_model(pair.b),
        c=perm_to_model(pair.c),
        orders=list(orders_triple(pair)),
    )


def pair_from_model(model: GeneratingPairModel) -> GeneratingPair:
    return GeneratingPair(perm_from_model(model.a), perm_from_model(model.c))


def _spot_check_closed(group: ElementSet, samples: int = 16) -> None:
    members = group.members
    step = max(1, len(members) // samples)
    picks = members[::step][:samples]
    for p in picks:
        for q in picks[:4]:
            if compose(p, q) not in group:
                raise NotClosed(f"group of size {len(group)} is not closed under composition")


def sigma_set(pair: GeneratingPair, group: ElementSet) -> ElementSet:
    """
    Σ(a,c): every group conjugate of every power of a, b and c

    Conjugacy classes come from the generators recorded on `group` when it was
    produced by closure(), otherwise from all of its members.

    Raises:
        MemberMissing: a or c is not in `group`
        NotClosed: the spot check finds a product outside `group`
    """
    require_same_degree(DegreeMismatch, pair.degree, group.degree)
    for name, x in (("a", pair.a), ("c", pair.c)):
        if x not in group:
            raise MemberMissing(f"{name} is not a member of the group")
    _spot_check_closed(group)

    result: Set[Perm] = set()
    for x in pair.triple:
        if group.generators:
            klass: Iterable[Perm] = conjugacy_orbit(x, group.generators)
        else:
            klass = {conjugate(x, g) for g in group}
        k = order(x)
        for y in klass:
            result.update(power(y, i) for i in range(k))
    return ElementSet.of(group.degree, result)


def is_beauville(
    pair1: GeneratingPair, pair2: GeneratingPair, group: ElementSet
) -> Union[BeauvilleCertificate, BeauvilleFailure]:
    """
    Check that both pairs generate `group` and Σ(pair1) ∩ Σ(pair2) = {1}

    Returns:
        BeauvilleCertificate, or BeauvilleFailure naming the first violated check
    """
    size = len(group)
    if len(closure([pair1.a, pair1.c])) != size:
        return BeauvilleFailure(reason="generation1", detail="first pair does not generate the group")
    if len(closure([pair2.a, pair2.c])) != size:
        return BeauvilleFailure(reason="generation2", detail="second pair does not generate the group")

    sigma1 = sigma_set(pair1, group)
    sigma2 = sigma_set(pair2, group)
    common = set(sigma1.members) & set(sigma2.members)
    common.discard(identity(group.degree))
    if common:
        return BeauvilleFailure(
            reason="disjointness",
            detail=f"Σ-sets share {len(common)} non-identity elements, e.g. {min(common)}",
        )
    return BeauvilleCertificate(
        group_order=size,
        pair1=pair_to_model(pair1),
        pair2=pair_to_model(pair2),
        sigma1_size=len(sigma1),
        sigma2_size=len(sigma2),
        checks=CertificateChecks(generation1=True, generation2=True, disjointness=True),
    )


def inverting_witness(pair: GeneratingPair, max_degree: Optional[int] = None) -> Optional[Perm]:
    """Inner automorphism carrying a ↦ a⁻¹ and c ↦ c⁻¹ (hence b ↦ b⁻¹ up to conjugacy), if any"""
    return pair_conjugator(pair.a, pair.c, inverse(pair.a), inverse(pair.c), max_degree)


def witness_report(pair: GeneratingPair, max_degree: Optional[int] = None) -> WitnessReport:
    witness = inverting_witness(pair, max_degree)
    return WitnessReport(
        found=witness is not None,
        witness=perm_to_model(witness) if witness is not None else None,
        outer_automorphism_caveat=pair.degree == 6,
    )


def _vector_of(p: Perm, n: int) -> Vector:
    offset = p(1) - 1
    return offset % n, offset // n


def linear_image(pair: GeneratingPair, matrix: Sequence[Sequence[int]], n: int) -> GeneratingPair:
    """Image of a pair of translations of (Z/n)² under the linear map with the given rows"""
    def apply(v: Vector) -> Vector:
        return (
            (matrix[0][0] * v[0] + matrix[0][1] * v[1]) % n,
            (matrix[1][0] * v[0] + matrix[1][1] * v[1]) % n,
        )

    return GeneratingPair(
        translation(apply(_vector_of(pair.a, n)), n),
        translation(apply(_vector_of(pair.c, n)), n),
    )


def fermat_pair(n: int = 5) -> GeneratingPair:
    """Translations a = e₁, c = e₁+e₂ of (Z/n)² on n² points"""
    return GeneratingPair(translation((1, 0), n), translation((1, 1), n))


def nonconjugate_lemma_pair(n: int = 7) -> GeneratingPair:
    """a = (5,4,1)(2,6), c = (1,2,3)(4,...,n) in S_n"""
    require_range(ExampleDegreeError, "degree", n, 7)
    a = from_cycles([(5, 4, 1), (2, 6)], n)
    c = from_cycles([(1, 2, 3), tuple(range(4, n + 1))], n)
    return GeneratingPair(a, c)


def symmetric_group_example(n: int = 8) -> Tuple[GeneratingPair, GeneratingPair]:
    """
    Beauville data in S_n for n >= 8, n ≡ 2 mod 3

    First pair as in nonconjugate_lemma_pair; second pair a' = σ⁻¹, c' = τ∘σ²
    with σ = (1,...,n) and τ = (1,2).
    """
    require_range(ExampleDegreeError, "degree", n, 8)
    if n % 3 != 2:
        raise ExampleDegreeError(f"degree must be 2 mod 3, got {n}")
    sigma = from_cycles([tuple(range(1, n + 1))], n)
    tau = from_cycles([(1, 2)], n)
    second = GeneratingPair(inverse(sigma), compose(tau, power(sigma, 2)))
    return nonconjugate_lemma_pair(n), second


def symmetric_group(n: int) -> ElementSet:
    """S_n generated by (1 2) and (1 ... n)"""
    return closure([from_cycles([(1, 2)], n), from_cycles([tuple(range(1, n + 1))], n)])


def _matrix_inverse(m: Matrix, n: int) -> Optional[Matrix]:
    det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % n
    if gcd(det, n) != 1:
        return None
    inv = pow(det, -1, n)
    return (
        ((m[1][1] * inv) % n, (-m[0][1] * inv) % n),
        ((-m[1][0] * inv) % n, (m[0][0] * inv) % n),
    )


def _standard_sigma(n: int) -> Set[Vector]:
    """Σ of the standard triple e₁, e₂, -e₁-e₂ in (Z/n)²"""
    return {(k % n, 0) for k in range(n)} | {(0, k % n) for k in range(n)} | {(k % n, k % n) for k in range(n)}


def _disjoint(m: Matrix, sigma: Set[Vector], n: int) -> bool:
    for x, y in sigma:
        if (x, y) == (0, 0):
            continue
        image = ((m[0][0] * x + m[0][1] * y) % n, (m[1][0] * x + m[1][1] * y) % n)
        if image in sigma:
            return False
    return True


class BeauvilleService:
    """Search for unmixed Beauville structures on (Z/n)²"""

    def __init__(
        self,
        bound: Optional[int] = None,
        workers: Optional[int] = None,
        max_certificates: int = 8,
    ):
        bound = config.ABELIAN_SEARCH_BOUND if bound is None else bound
        workers = config.SEARCH_WORKERS if workers is None else workers
        self.bound = require_range(BoundExceeded, "bound", bound, 2)
        self.workers = require_range(BeauvilleServiceError, "workers", workers, 1)
        self.max_certificates = max_certificates

    def _scan(self, n: int, first_rows: List[Tuple[int, int]]) -> List[Matrix]:
        sigma = _standard_sigma(n)
        found: List[Matrix] = []
        for r0 in first_rows:
            for r1 in product(range(n), repeat=2):
                m: Matrix = (r0, r1)
                inv = _matrix_inverse(m, n)
                if inv is None or inv < m:
                    continue
                if _disjoint(m, sigma, n):
                    found.append(m)
        return found

    def canonical_matrices(self, n: int) -> List[Matrix]:
        """
        Second-pair matrices M of all Beauville structures on (Z/n)², one per class

        The first pair is normalized to (e₁, e₂); swapping the pairs replaces M
        by M⁻¹ and the smaller of the two is kept.
        """
        require_range(BoundExceeded, "n", n, 2, self.bound)
        rows = list(product(range(n), repeat=2))
        if self.workers <= 1:
            found = self._scan(n, rows)
        else:
            chunks = [rows[i:: self.workers] for i in range(self.workers)]
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                found = [m for part in pool.map(lambda c: self._scan(n, c), chunks) for m in part]
        return sorted(found)

    def search_abelian(self, n: int) -> AbelianSearchReport:
        """All canonical unmixed Beauville structures on (Z/n)²"""
        logger.info(f"abelian Beauville search on (Z/{n})^2 with {self.workers} worker(s)")
        matrices = self.canonical_matrices(n)
        logger.info(f"(Z/{n})^2: {len(matrices)} canonical structures")
        certificates: List[BeauvilleCertificate] = []
        if matrices:
            group = abelian_regular_group(n)
            first = GeneratingPair(translation((1, 0), n), translation((0, 1), n))
            for m in matrices[: self.max_certificates]:
                verdict = is_beauville(first, linear_image(first, m, n), group)
                if isinstance(verdict, BeauvilleFailure):
                    raise BeauvilleServiceError(f"vector search and permutation check disagree on {m}: {verdict.reason}")
                certificates.append(verdict)

        return AbelianSearchReport(
            n=n,
            count=len(matrices),
            certificates=certificates,
            second_pair_matrices=[[list(row) for row in m] for m in matrices],
        )


# Singleton instance
_beauville_service: Optional[BeauvilleService] = None


def get_beauville_service() -> BeauvilleService:
    """Get the Beauville service instance (singleton)"""
    global _beauville_service
    if _beauville_service is None:
        _beauville_service = BeauvilleService()
    return _beauville_service
