"""
Braid Service
Free-group words and the braid group B_n acting on a geometric basis γ_1..γ_n

Letters are signed integers: k stands for γ_k (or σ_k), -k for its inverse.
A braid word acts letter by letter, leftmost letter first:
    σ_i:    γ_i ↦ γ_{i+1},            γ_{i+1} ↦ γ_{i+1}⁻¹ γ_i γ_{i+1}
    σ_i⁻¹:  γ_i ↦ γ_i γ_{i+1} γ_i⁻¹,  γ_{i+1} ↦ γ_i
Braid equality is decided through this action (Artin's representation is faithful).
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import config
from services import ServiceError
from services.permgroup import Perm, compose, from_cycles, identity
from utils.checks import require_same_degree
from utils.logger import setup_logger

logger = setup_logger("services.braid", config.LOG_LEVEL)


class BraidServiceError(ServiceError):
    """Braid / free group error"""


class RankMismatch(BraidServiceError):
    """Free words or actions over different ranks"""


class StrandMismatch(BraidServiceError):
    """Braid words on different strand counts"""


class WordSyntaxError(BraidServiceError):
    """Unparseable word text or a letter outside the alphabet"""


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word in γ_1..γ_rank"""
    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise WordSyntaxError(f"letter {x} outside rank {self.rank}")
        object.__setattr__(self, "letters", _reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters, "g")


@dataclass(frozen=True)
class BraidWord:
    """Word in σ_1..σ_{strands-1}; not normalized"""
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise WordSyntaxError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise WordSyntaxError(f"generator {x} outside B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters, "s")


def generator(rank: int, i: int) -> FreeWord:
    """γ_i"""
    return FreeWord(rank, (i,))


def fw_multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    require_same_degree(RankMismatch, u.rank, v.rank)
    return FreeWord(u.rank, u.letters + v.letters)


def fw_inverse(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-x for x in reversed(u.letters)))


def _substitution(letter: int) -> dict:
    """Images of the affected generators under σ_i^{±1}"""
    i = abs(letter)
    j = i + 1
    if letter > 0:
        return {i: (j,), j: (-j, i, j)}
    return {i: (i, j, -i), j: (i,)}


def _substitute(letters: Tuple[int, ...], images: dict) -> Tuple[int, ...]:
    out: List[int] = []
    for x in letters:
        image = images.get(abs(x))
        if image is None:
            out.append(x)
        elif x > 0:
            out.extend(image)
        else:
            out.extend(-y for y in reversed(image))
    return _reduce(out)


def artin_apply(b: BraidWord, w: FreeWord) -> FreeWord:
    """Image of w under the automorphism of b, leftmost letter acting first"""
    require_same_degree(RankMismatch, b.strands, w.rank)
    letters = w.letters
    for letter in b.letters:
        letters = _substitute(letters, _substitution(letter))
    return FreeWord(w.rank, letters)


def braid_images(b: BraidWord) -> Tuple[FreeWord, ...]:
    """Images of γ_1..γ_n under b"""
    return tuple(artin_apply(b, generator(b.strands, i)) for i in range(1, b.strands + 1))


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    require_same_degree(StrandMismatch, b1.strands, b2.strands)
    return braid_images(b1) == braid_images(b2)


def braid_multiply(b1: BraidWord, b2: BraidWord) -> BraidWord:
    require_same_degree(StrandMismatch, b1.strands, b2.strands)
    return BraidWord(b1.strands, b1.letters + b2.letters)


def braid_inverse(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-x for x in reversed(b.letters)))


def full_twist(d: int) -> BraidWord:
    """Δ²_d = (σ_{d-1} σ_{d-2} … σ_1)^d"""
    if d < 2:
        raise WordSyntaxError(f"full twist needs d >= 2, got {d}")
    block = tuple(range(d - 1, 0, -1))
    return BraidWord(d, block * d)


def coxeter_chain(n: int) -> BraidWord:
    """(σ_1)(σ_2 σ_1)…(σ_n σ_{n-1} … σ_1) on n+1 strands, the positive half twist"""
    if n < 1:
        raise WordSyntaxError(f"chain length must be >= 1, got {n}")
    letters: List[int] = []
    for k in range(1, n + 1):
        letters.extend(range(k, 0, -1))
    return BraidWord(n + 1, tuple(letters))


def half_twist(d: int) -> BraidWord:
    """Positive half twist Δ_d; its square is full_twist(d)"""
    return coxeter_chain(d - 1)


def braid_to_perm(b: BraidWord) -> Perm:
    """Image in S_n: σ_i ↦ (i, i+1), multiplied in word order"""
    result = identity(b.strands)
    for x in b.letters:
        i = abs(x)
        result = compose(result, from_cycles([(i, i + 1)], b.strands))
    return result


_LETTER_RE = re.compile(r"^([a-zA-Z]+)(\d+)(?:\^(-?\d+))?$")


def _parse(text: str, prefix: str) -> Tuple[int, ...]:
    letters: List[int] = []
    for token in text.split():
        if token in ("e", "1"):
            continue
        match = _LETTER_RE.match(token)
        if not match or match.group(1) != prefix:
            raise WordSyntaxError(f"cannot parse {token!r}; expected {prefix}<k> or {prefix}<k>^-1")
        index = int(match.group(2))
        exponent = int(match.group(3) or 1)
        letters.extend([index if exponent > 0 else -index] * abs(exponent))
    return tuple(letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """"s1 s2^-1 s1" -> BraidWord"""
    return BraidWord(strands, _parse(text, "s"))


def parse_free_word(text: str, rank: int) -> FreeWord:
    """"g1 g2^-1" -> FreeWord"""
    return FreeWord(rank, _parse(text, "g"))


def format_word(letters: Iterable[int], prefix: str) -> str:
    text = " ".join(f"{prefix}{x}" if x > 0 else f"{prefix}{-x}^-1" for x in letters)
    return text or "e"
