"""
Hurwitz Service
Factorizations of a permutation, the Hurwitz action of the braid group on them,
orbit enumeration, equivalence testing and Auroux's lemma
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import config
from schemas.hurwitz import (
    Direction,
    EquivalenceReport,
    EquivalenceVerdict,
    FactorizationModel,
    InvariantSummary,
    MoveModel,
    OrbitReport,
)
from services import ServiceError
from services.braid import BraidWord
from services.permgroup import (
    CapExceeded,
    DegreeMismatch,
    Perm,
    _inverse_images,
    _trusted,
    closure,
    compose,
    compose_all,
    conjugate,
    cycle_type,
    from_model as perm_from_model,
    inverse,
    to_model as perm_to_model,
)
from utils.checks import require_range, require_same_degree
from utils.logger import setup_logger

logger = setup_logger("services.hurwitz", config.LOG_LEVEL)

FORWARD = Direction.FORWARD
BACKWARD = Direction.BACKWARD


class HurwitzServiceError(ServiceError):
    """Hurwitz action error"""


class IndexOutOfRange(HurwitzServiceError):
    """Move index outside 1..m-1 (or factor index outside 1..m)"""


class LengthMismatch(HurwitzServiceError):
    """Factorizations of different lengths"""


class NotCentral(HurwitzServiceError):
    """The product does not commute with every factor"""


class ReplayFailed(HurwitzServiceError):
    """A constructed move path did not reach its target"""


class InvalidCap(HurwitzServiceError):
    """Orbit or search cap below 1"""


@dataclass(frozen=True)
class Factorization:
    """
    Ordered factors t_1, ..., t_m with product t_1∘t_2∘…∘t_m

    Use Factorization.of() to build one; the product is computed there.
    """
    degree: int
    factors: Tuple[Perm, ...]
    product: Perm

    @classmethod
    def of(cls, factors: Sequence[Perm]) -> "Factorization":
        if not factors:
            raise IndexOutOfRange("a factorization needs at least one factor")
        degree = require_same_degree(DegreeMismatch, *(t.degree for t in factors))
        return cls(degree, tuple(factors), compose_all(list(factors)))

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        """Concatenated image sequences; the canonical comparison key"""
        return tuple(t.images for t in self.factors)

    def cycle_types(self) -> List[Tuple[int, ...]]:
        return sorted(cycle_type(t) for t in self.factors)


@dataclass(frozen=True)
class Move:
    """Hurwitz move at positions (i, i+1), 1-based"""
    i: int
    direction: Direction

    def inverted(self) -> "Move":
        return Move(self.i, BACKWARD if self.direction == FORWARD else FORWARD)


def hurwitz_move(F: Factorization, i: int, direction: Direction) -> Factorization:
    """
    forward:  (t_i, t_{i+1}) -> (t_i t_{i+1} t_i⁻¹, t_i)
    backward: (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1}⁻¹ t_i t_{i+1})
    """
    require_range(IndexOutOfRange, "move index", i, 1, len(F) - 1)
    x, y = F.factors[i - 1], F.factors[i]
    if Direction(direction) == FORWARD:
        pair = (conjugate(y, x), x)
    else:
        pair = (y, conjugate(x, inverse(y)))
    factors = F.factors[: i - 1] + pair + F.factors[i + 1:]
    return Factorization(F.degree, factors, F.product)


def replay(F: Factorization, path: Sequence[Move]) -> Factorization:
    for move in path:
        F = hurwitz_move(F, move.i, move.direction)
    return F


def invert_path(path: Sequence[Move]) -> List[Move]:
    return [move.inverted() for move in reversed(path)]


def apply_braid(F: Factorization, b: BraidWord) -> Factorization:
    """Act by a braid word: σ_i is a forward move at i, σ_i⁻¹ a backward one"""
    require_same_degree(LengthMismatch, len(F), b.strands)
    return replay(F, [Move(abs(x), FORWARD if x > 0 else BACKWARD) for x in b.letters])


def simultaneous_conjugate(F: Factorization, b: Perm) -> Factorization:
    """Replace every factor t by b∘t∘b⁻¹; the product transforms the same way"""
    require_same_degree(DegreeMismatch, F.degree, b.degree)
    return Factorization(
        F.degree,
        tuple(conjugate(t, b) for t in F.factors),
        conjugate(F.product, b),
    )


def is_central_product(F: Factorization) -> bool:
    """Product commutes with every factor, hence with the generated subgroup"""
    P = F.product
    return all(compose(P, t) == compose(t, P) for t in F.factors)


def _auroux_forward(F: Factorization, h: int) -> List[Move]:
    """Moves carrying F to simultaneous_conjugate(F, t_h)"""
    m = len(F)
    # t_h to the front unchanged: F ≅ (τ, Y)
    to_front = [Move(i, BACKWARD) for i in range(h - 1, 0, -1)]
    # τ across Y: (τ, Y) ≅ (Y_τ, τ)
    across = [Move(i, FORWARD) for i in range(1, m)]
    # Y_τ across τ, which it fixes since the product is central: ≅ (τ, Y_τ) = (τ, Y)_τ
    back = [Move(i, FORWARD) for i in range(m - 1, 0, -1)]
    return to_front + across + back + invert_path(to_front)


def auroux_path(F: Factorization, h: int) -> List[Move]:
    """
    Move sequence carrying simultaneous_conjugate(F, t_h) to F

    F must factor a central element. The path brings t_h to the front with
    h-1 moves, passes it across the remaining factors and back, and undoes the
    first stage; the result is replayed before it is returned.

    Raises:
        NotCentral: product(F) fails to commute with some factor
        ReplayFailed: the path does not reach F
    """
    require_range(IndexOutOfRange, "factor index", h, 1, len(F))
    if not is_central_product(F):
        raise NotCentral("product of the factorization is not central in the generated subgroup")
    path = invert_path(_auroux_forward(F, h))
    start = simultaneous_conjugate(F, F.factors[h - 1])
    if replay(start, path) != F:
        logger.error(f"auroux path replay failed at h={h}")
        raise ReplayFailed(f"auroux path for h={h} does not replay to F")
    return path


def corollary_path(F: Factorization, indices: Sequence[int]) -> List[Move]:
    """
    Move sequence carrying simultaneous_conjugate(F, Ψ) to F, where
    Ψ = t_{h_1}∘t_{h_2}∘…∘t_{h_k} is a product of factors of F
    """
    if not indices:
        return []
    path: List[Move] = []
    for h in reversed(indices):
        path.extend(auroux_path(F, h))
    psi = compose_all([F.factors[h - 1] for h in indices])
    if replay(simultaneous_conjugate(F, psi), path) != F:
        raise ReplayFailed(f"corollary path for {list(indices)} does not replay to F")
    return path


def _conj_raw(p: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[int, ...]:
    images = [0] * len(p)
    for i, j in enumerate(p):
        images[g[i] - 1] = g[j - 1]
    return tuple(images)


def _neighbours(key: Tuple[Tuple[int, ...], ...]):
    """(move, resulting key) for every single move, in canonical order"""
    for i in range(1, len(key)):
        x, y = key[i - 1], key[i]
        forward = key[: i - 1] + (_conj_raw(y, x), x) + key[i + 1:]
        yield Move(i, FORWARD), forward
        backward = key[: i - 1] + (y, _conj_raw(x, _inverse_images(y))) + key[i + 1:]
        yield Move(i, BACKWARD), backward


def _from_key(key: Tuple[Tuple[int, ...], ...], product: Perm) -> Factorization:
    return Factorization(product.degree, tuple(_trusted(t) for t in key), product)


def to_model(F: Factorization) -> FactorizationModel:
    return FactorizationModel(degree=F.degree, factors=[perm_to_model(t) for t in F.factors])


def from_model(model: FactorizationModel) -> Factorization:
    factors = [perm_from_model(p) for p in model.factors]
    for t in factors:
        require_same_degree(DegreeMismatch, model.degree, t.degree)
    return Factorization.of(factors)


def path_to_models(path: Sequence[Move]) -> List[MoveModel]:
    return [MoveModel(i=m.i, dir=m.direction) for m in path]


def path_from_models(models: Sequence[MoveModel]) -> List[Move]:
    return [Move(m.i, Direction(m.dir)) for m in models]


class HurwitzService:
    """Bounded orbit enumeration and equivalence search"""

    def __init__(self, orbit_cap: Optional[int] = None, max_representatives: int = 1000):
        self.orbit_cap = self._cap(config.ORBIT_CAP if orbit_cap is None else orbit_cap)
        self.max_representatives = max_representatives

    def _cap(self, cap: Optional[int]) -> int:
        if cap is None:
            return self.orbit_cap
        return require_range(InvalidCap, "cap", cap, 1)

    def _subgroup(self, F: Factorization, cap: int):
        try:
            return closure(F.factors, cap=cap)
        except CapExceeded:
            return None

    def _summary(self, F: Factorization, cap: int) -> InvariantSummary:
        group = self._subgroup(F, cap)
        return InvariantSummary(
            product=perm_to_model(F.product),
            cycle_types=[list(t) for t in F.cycle_types()],
            subgroup_size=len(group) if group is not None else None,
        )

    def orbit(self, F: Factorization, cap: Optional[int] = None, mod_conjugation: bool = False) -> OrbitReport:
        """
        Breadth-first Hurwitz orbit of F

        With mod_conjugation every node is replaced by its least simultaneous
        conjugate under the generated subgroup (which must fit the cap).
        Cap saturation is reported through `exhausted`, never raised.
        """
        cap = self._cap(cap)
        conjugators: List[Perm] = []
        if mod_conjugation:
            group = self._subgroup(F, cap)
            if group is None:
                raise CapExceeded(f"generated subgroup exceeds cap {cap}", partial_count=cap)
            conjugators = list(group)

        def canonical(key):
            if not conjugators:
                return key
            return min(tuple(_conj_raw(t, g.images) for t in key) for g in conjugators)

        start = canonical(F.key)
        seen = {start}
        frontier = deque([start])
        exhausted = True
        while frontier and exhausted:
            key = frontier.popleft()
            for _, nxt in _neighbours(key):
                nxt = canonical(nxt)
                if nxt in seen:
                    continue
                if len(seen) >= cap:
                    exhausted = False
                    break
                seen.add(nxt)
                frontier.append(nxt)

        if exhausted:
            logger.info(f"hurwitz orbit exhausted: {len(seen)} factorizations")
        else:
            logger.warning(f"hurwitz orbit cap {cap} reached")

        ordered = sorted(seen)
        shown = ordered[: self.max_representatives]
        return OrbitReport(
            size=len(seen),
            exhausted=exhausted,
            mod_conjugation=mod_conjugation,
            representatives=[to_model(_from_key(k, F.product)) for k in shown],
            truncated=len(shown) < len(ordered),
            invariant_summary=self._summary(F, cap),
        )

    def equivalent(self, F1: Factorization, F2: Factorization, cap: Optional[int] = None) -> EquivalenceReport:
        """
        Decide Hurwitz equivalence of F1 and F2 by a bounded search from F1

        YES carries a shortest replayable path, NO means the orbit of F1 was
        exhausted (or an invariant differs), UNKNOWN means the cap was hit.
        """
        cap = self._cap(cap)
        if len(F1) != len(F2):
            raise LengthMismatch(f"lengths differ: {len(F1)} vs {len(F2)}")
        require_same_degree(DegreeMismatch, F1.degree, F2.degree)

        if F1.product != F2.product:
            return EquivalenceReport(verdict=EquivalenceVerdict.NO, reason="products differ")
        if F1.cycle_types() != F2.cycle_types():
            return EquivalenceReport(verdict=EquivalenceVerdict.NO, reason="cycle-type multisets differ")

        target = F2.key
        parents: Dict[tuple, Optional[Tuple[tuple, Move]]] = {F1.key: None}
        frontier = deque([F1.key])
        found = F1.key == target
        capped = False
        while frontier and not found and not capped:
            key = frontier.popleft()
            for move, nxt in _neighbours(key):
                if nxt in parents:
                    continue
                if len(parents) >= cap:
                    capped = True
                    break
                parents[nxt] = (key, move)
                if nxt == target:
                    found = True
                    break
                frontier.append(nxt)

        if found:
            path: List[Move] = []
            node = target
            while parents[node] is not None:
                node, move = parents[node]
                path.append(move)
            path.reverse()
            if replay(F1, path) != F2:
                raise ReplayFailed("equivalence path does not replay")
            return EquivalenceReport(
                verdict=EquivalenceVerdict.YES,
                path=path_to_models(path),
                explored=len(parents),
            )
        if capped:
            return EquivalenceReport(
                verdict=EquivalenceVerdict.UNKNOWN, reason=f"cap {cap} reached", explored=len(parents)
            )
        return EquivalenceReport(
            verdict=EquivalenceVerdict.NO, reason="orbit exhausted", explored=len(parents)
        )


# Singleton instance
_hurwitz_service: Optional[HurwitzService] = None


def get_hurwitz_service() -> HurwitzService:
    """Get the Hurwitz service instance (singleton)"""
    global _hurwitz_service
    if _hurwitz_service is None:
        _hurwitz_service = HurwitzService()
    return _hurwitz_service
