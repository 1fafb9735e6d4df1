"""
Permutation Group Service
Exact arithmetic and bounded search in finite permutation groups

Convention: compose(p, q) applies q first, then p (right-to-left).
Every other service inherits it.
"""
import re
from collections import deque
from dataclasses import dataclass, field
from math import lcm
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import config
from schemas.perm import ElementSetModel, PermModel
from services import ServiceError
from utils.checks import require_same_degree
from utils.logger import setup_logger

logger = setup_logger("services.permgroup", config.LOG_LEVEL)


class PermGroupServiceError(ServiceError):
    """Permutation group error"""


class DegreeMismatch(PermGroupServiceError):
    """Operands act on different point sets"""


class OutOfRange(PermGroupServiceError):
    """Cycle entry outside 1..degree"""


class RepeatedPoint(PermGroupServiceError):
    """Cycles are not disjoint"""


class CapExceeded(PermGroupServiceError):
    """Closure grew past its cap"""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message, {"partial_count": partial_count})
        self.partial_count = partial_count


class DegreeTooLarge(PermGroupServiceError):
    """Exhaustive conjugator scan refused above the configured degree"""


@dataclass(frozen=True, order=True, slots=True)
class Perm:
    """
    Permutation of {1..n} in image-array form: images[i-1] is the image of i

    Ordering is lexicographic on the image sequence.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise OutOfRange(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __str__(self) -> str:
        return format_cycles(self)


def _trusted(images: Tuple[int, ...]) -> Perm:
    """Build a Perm from images already known to be a bijection"""
    p = object.__new__(Perm)
    object.__setattr__(p, "images", images)
    return p


def _compose_images(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(p[j - 1] for j in q)


def _inverse_images(p: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p, 1):
        inv[j - 1] = i
    return tuple(inv)


def identity(degree: int) -> Perm:
    if degree < 1:
        raise OutOfRange(f"degree must be positive, got {degree}")
    return _trusted(tuple(range(1, degree + 1)))


def is_identity(p: Perm) -> bool:
    return all(j == i for i, j in enumerate(p.images, 1))


def compose(p: Perm, q: Perm) -> Perm:
    """p∘q: apply q first, then p"""
    require_same_degree(DegreeMismatch, p.degree, q.degree)
    return _trusted(_compose_images(p.images, q.images))


def compose_all(perms: Sequence[Perm], degree: Optional[int] = None) -> Perm:
    """perms[0]∘perms[1]∘…∘perms[-1]; identity for an empty sequence"""
    if not perms:
        if degree is None:
            raise OutOfRange("degree is required for an empty product")
        return identity(degree)
    result = perms[0]
    for p in perms[1:]:
        result = compose(result, p)
    return result


def inverse(p: Perm) -> Perm:
    return _trusted(_inverse_images(p.images))


def conjugate(p: Perm, g: Perm) -> Perm:
    """g∘p∘g⁻¹, i.e. p with its points relabelled by g"""
    require_same_degree(DegreeMismatch, p.degree, g.degree)
    images = [0] * p.degree
    for i, j in enumerate(p.images, 1):
        images[g.images[i - 1] - 1] = g.images[j - 1]
    return _trusted(tuple(images))


def power(p: Perm, k: int) -> Perm:
    base = p if k >= 0 else inverse(p)
    result = identity(p.degree)
    for _ in range(abs(k) % order(p)):
        result = compose(result, base)
    return result


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Perm:
    """
    Product of disjoint cycles; points not listed are fixed

    Raises:
        OutOfRange: an entry outside 1..degree
        RepeatedPoint: a point listed twice
    """
    if degree < 1:
        raise OutOfRange(f"degree must be positive, got {degree}")
    images = list(range(1, degree + 1))
    seen = set()
    for cycle in cycles:
        cycle = list(cycle)
        for point in cycle:
            if not 1 <= point <= degree:
                raise OutOfRange(f"point {point} outside 1..{degree}")
            if point in seen:
                raise RepeatedPoint(f"point {point} appears twice")
            seen.add(point)
        for k, point in enumerate(cycle):
            images[point - 1] = cycle[(k + 1) % len(cycle)]
    return _trusted(tuple(images))


def cycles(p: Perm) -> List[List[int]]:
    """Nontrivial cycles, each starting at its smallest point, sorted by that point"""
    seen = set()
    result = []
    for start in range(1, p.degree + 1):
        if start in seen or p(start) == start:
            continue
        cycle = [start]
        seen.add(start)
        point = p(start)
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = p(point)
        result.append(cycle)
    return result


def cycle_type(p: Perm) -> Tuple[int, ...]:
    """Sorted lengths of the nontrivial cycles"""
    return tuple(sorted(len(c) for c in cycles(p)))


def order(p: Perm) -> int:
    """Least k >= 1 with p^k = identity"""
    return lcm(*(len(c) for c in cycles(p)))


def format_cycles(p: Perm) -> str:
    text = "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles(p))
    return text or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """
    Parse "(5,4,1)(2,6)"; inside a cycle "a..b" expands to a, a+1, ..., b

    "()" and the empty string give the identity.
    """
    stripped = re.sub(r"\s*,\s*|\s+", ",", text.strip())
    if _CYCLE_RE.sub("", stripped).strip(","):
        raise OutOfRange(f"cannot parse cycle notation: {text!r}")
    parsed = []
    for body in _CYCLE_RE.findall(stripped):
        if not body:
            continue
        cycle: List[int] = []
        try:
            for token in filter(None, body.split(",")):
                if ".." in token:
                    low, high = token.split("..", 1)
                    cycle.extend(range(int(low), int(high) + 1))
                else:
                    cycle.append(int(token))
        except ValueError:
            raise OutOfRange(f"cannot parse cycle notation: {text!r}")
        parsed.append(cycle)
    return from_cycles(parsed, degree)


@dataclass(frozen=True)
class ElementSet:
    """
    Deduplicated, lexicographically sorted set of permutations of one degree

    generators is filled when the set was produced by closure().
    """
    degree: int
    members: Tuple[Perm, ...]
    generators: Tuple[Perm, ...] = field(default=(), compare=False)

    @classmethod
    def of(cls, degree: int, perms: Iterable[Perm], generators: Iterable[Perm] = ()) -> "ElementSet":
        unique = set()
        for p in perms:
            require_same_degree(DegreeMismatch, degree, p.degree)
            unique.add(p)
        return cls(degree, tuple(sorted(unique)), tuple(generators))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.members)

    def __contains__(self, p: object) -> bool:
        return p in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached


def closure(generators: Iterable[Perm], cap: Optional[int] = None, degree: Optional[int] = None) -> ElementSet:
    """
    Subgroup generated by `generators`, by breadth-first multiplication

    Args:
        generators: nonempty generators of a common degree
        cap: largest accepted group size (config.CLOSURE_CAP by default)
        degree: required only when `generators` is empty

    Raises:
        CapExceeded: the group has more than `cap` elements
    """
    cap = config.CLOSURE_CAP if cap is None else cap
    gens = sorted(set(generators))
    if gens:
        degree = require_same_degree(DegreeMismatch, *(g.degree for g in gens))
    elif degree is None:
        raise OutOfRange("closure of an empty generating set needs a degree")

    start = tuple(range(1, degree + 1))
    seen = {start}
    frontier = deque([start])
    gen_images = [g.images for g in gens]
    while frontier:
        current = frontier.popleft()
        for g in gen_images:
            product = _compose_images(current, g)
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    logger.warning(f"closure cap {cap} exceeded (degree {degree})")
                    raise CapExceeded(f"closure exceeds cap {cap}", partial_count=len(seen))
                frontier.append(product)

    logger.debug(f"closure of {len(gens)} generators in degree {degree}: {len(seen)} elements")
    return ElementSet(degree, tuple(sorted(_trusted(x) for x in seen)), tuple(gens))


def conjugacy_orbit(p: Perm, generators: Sequence[Perm]) -> ElementSet:
    """Conjugacy class of p in the group generated by `generators`"""
    seen = {p}
    frontier = deque([p])
    while frontier:
        current = frontier.popleft()
        for g in generators:
            image = conjugate(current, g)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return ElementSet.of(p.degree, seen)


def pair_conjugator(
    a: Perm,
    c: Perm,
    a2: Perm,
    c2: Perm,
    max_degree: Optional[int] = None,
) -> Optional[Perm]:
    """
    Find g in Sym(n) with g∘a∘g⁻¹ = a2 and g∘c∘g⁻¹ = c2

    The search is an exhaustive backtracking over point assignments, pruned by
    cycle types; the first witness in lexicographic order is returned.

    Returns:
        the witness, or None once the scan is exhausted

    Raises:
        DegreeTooLarge: degree above `max_degree` (config.CONJUGATOR_MAX_DEGREE)
    """
    max_degree = config.CONJUGATOR_MAX_DEGREE if max_degree is None else max_degree
    n = require_same_degree(DegreeMismatch, a.degree, c.degree, a2.degree, c2.degree)
    if n > max_degree:
        raise DegreeTooLarge(f"degree {n} exceeds conjugator scan bound {max_degree}")
    if n == 6:
        logger.warning("degree 6: Sym(6) has outer automorphisms, a conjugation scan is not exhaustive over Aut")

    if cycle_type(a) != cycle_type(a2) or cycle_type(c) != cycle_type(c2):
        return None

    pairs = [(a.images, a2.images), (c.images, c2.images)]
    assignment: Dict[int, int] = {}
    used = set()

    def propagate(x: int, y: int) -> Optional[List[int]]:
        # assign x -> y and everything it forces; returns assigned points or None on conflict
        added: List[int] = []
        pending = [(x, y)]
        while pending:
            u, v = pending.pop()
            if u in assignment:
                if assignment[u] != v:
                    return _undo(added)
                continue
            if v in used:
                return _undo(added)
            assignment[u] = v
            used.add(v)
            added.append(u)
            for src, dst in pairs:
                pending.append((src[u - 1], dst[v - 1]))
        return added

    def _undo(added: List[int]) -> None:
        for u in added:
            used.discard(assignment.pop(u))
        return None

    def search() -> bool:
        free = next((i for i in range(1, n + 1) if i not in assignment), None)
        if free is None:
            return True
        for target in range(1, n + 1):
            if target in used:
                continue
            added = propagate(free, target)
            if added is None:
                continue
            if search():
                return True
            _undo(added)
        return False

    if not search():
        logger.debug(f"no conjugator in Sym({n})")
        return None

    witness = _trusted(tuple(assignment[i] for i in range(1, n + 1)))
    assert conjugate(a, witness) == a2 and conjugate(c, witness) == c2
    return witness


def translation(vector: Tuple[int, int], n: int) -> Perm:
    """Translation by `vector` on (Z/n)², acting on the n² points 1 + x + n·y"""
    dx, dy = vector[0] % n, vector[1] % n
    images = [0] * (n * n)
    for y in range(n):
        for x in range(n):
            images[x + n * y] = 1 + (x + dx) % n + n * ((y + dy) % n)
    return _trusted(tuple(images))


def abelian_regular_group(n: int) -> ElementSet:
    """(Z/n)² in its regular representation on n² points"""
    gens = [translation((1, 0), n), translation((0, 1), n)]
    return ElementSet.of(
        n * n,
        (translation((x, y), n) for x in range(n) for y in range(n)),
        generators=gens,
    )


def to_model(p: Perm) -> PermModel:
    return PermModel(degree=p.degree, cycles=cycles(p))


def from_model(model: PermModel) -> Perm:
    return from_cycles(model.cycles, model.degree)


def set_to_model(s: ElementSet) -> ElementSetModel:
    return ElementSetModel(degree=s.degree, size=len(s), members=[to_model(p) for p in s])
