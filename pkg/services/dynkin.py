"""
Dynkin Service
Configurations of (-2)-curves: intersection matrices, ADE and extended ADE
recognition, fundamental cycles and elliptic divisors
"""
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Matrix, ilcm

import config
from schemas.dynkin import ClassificationModel, CurveConfigModel, RdpEntry
from services import ServiceError
from services.rdp_table import get_rdp_table_service
from utils.logger import setup_logger

logger = setup_logger("services.dynkin", config.LOG_LEVEL)


class DynkinServiceError(ServiceError):
    """Curve configuration error"""


class InvalidConfig(DynkinServiceError):
    """Malformed edge list"""


class Disconnected(DynkinServiceError):
    """Configuration graph is not connected"""


class NotADE(DynkinServiceError):
    """Configuration is not an ADE diagram"""


class NotExtended(DynkinServiceError):
    """Configuration is not an extended ADE diagram"""


class UnknownLabel(DynkinServiceError):
    """Label outside the ADE / extended ADE families"""


@dataclass(frozen=True)
class CurveConfig:
    """
    Connected configuration of (-2)-curves indexed 0..count-1

    edges maps (i, j) with i < j to the intersection number C_i·C_j.
    """
    count: int
    edges: Tuple[Tuple[Tuple[int, int], int], ...]

    @classmethod
    def of(cls, count: int, edges: Iterable[Sequence[int]]) -> "CurveConfig":
        """
        Args:
            count: number of curves
            edges: [i, j] or [i, j, mult] entries; repeated pairs add up

        Raises:
            InvalidConfig: bad index, loop or multiplicity
            Disconnected: the dual graph is not connected
        """
        if count < 1:
            raise InvalidConfig(f"curve count must be positive, got {count}")
        table: Dict[Tuple[int, int], int] = {}
        for edge in edges:
            i, j = int(edge[0]), int(edge[1])
            mult = int(edge[2]) if len(edge) > 2 else 1
            if not (0 <= i < count and 0 <= j < count):
                raise InvalidConfig(f"edge {list(edge)} outside 0..{count - 1}")
            if i == j:
                raise InvalidConfig(f"loop at curve {i}")
            key = (min(i, j), max(i, j))
            table[key] = table.get(key, 0) + mult
        for key, mult in table.items():
            if mult not in (1, 2):
                raise InvalidConfig(f"intersection number {mult} at {key} outside 1..2")

        cfg = cls(count, tuple(sorted(table.items())))
        if not nx.is_connected(cfg.graph):
            raise Disconnected(f"configuration with {count} curves is not connected")
        return cfg

    @property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.count))
        for (i, j), mult in self.edges:
            g.add_edge(i, j, mult=mult)
        return g

    @cached_property
    def intersection_rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Intersection matrix: -2 on the diagonal, C_i·C_j off it"""
        rows = [[0] * self.count for _ in range(self.count)]
        for i in range(self.count):
            rows[i][i] = -2
        for (i, j), mult in self.edges:
            rows[i][j] = rows[j][i] = mult
        return tuple(tuple(r) for r in rows)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.intersection_rows)

    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.intersection_rows]


@dataclass(frozen=True)
class Cycle:
    """Divisor Σ n_i C_i"""
    coefficients: Tuple[int, ...]

    def __iter__(self):
        return iter(self.coefficients)


@dataclass(frozen=True)
class Verdict:
    """A label, or the reason there is none"""
    label: Optional[str]
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.label is not None


def intersections(cfg: CurveConfig, coefficients: Sequence[int]) -> List[int]:
    """Z·C_i for every curve"""
    return [sum(a * n for a, n in zip(r, coefficients)) for r in cfg.intersection_rows]


def self_intersection(cfg: CurveConfig, coefficients: Sequence[int]) -> int:
    return sum(z * n for z, n in zip(intersections(cfg, coefficients), coefficients))


def is_negative_definite(cfg: CurveConfig) -> bool:
    """-M is positive definite (exact rational Cholesky)"""
    return (-cfg.matrix).is_positive_definite is True


def is_negative_semidefinite(cfg: CurveConfig) -> bool:
    """-M is positive semidefinite (exact rational Cholesky)"""
    return (-cfg.matrix).is_positive_semidefinite is True


def _star(arms: Sequence[int]) -> List[Tuple[int, int]]:
    """Tree with center 0 and one path per arm length"""
    edges: List[Tuple[int, int]] = []
    nxt = 1
    for length in arms:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return edges


def _path(count: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(count - 1)]


_LABEL_RE = re.compile(r"^(~)?([ADE])(\d+)$")


def _parse_label(label: str) -> Tuple[bool, str, int]:
    match = _LABEL_RE.match(label.strip())
    if not match:
        raise UnknownLabel(f"unknown label {label!r}")
    extended, letter, n = bool(match.group(1)), match.group(2), int(match.group(3))
    low = {"A": 1, "D": 4, "E": 6}[letter]
    if n < low or (letter == "E" and n > 8):
        raise UnknownLabel(f"unknown label {label!r}")
    return extended, letter, n


def ade_config(label: str) -> CurveConfig:
    """Reference diagram: A_n path, D_n fork at one end, E_n with arms 1,2,n-4"""
    extended, letter, n = _parse_label(label)
    if extended:
        raise UnknownLabel(f"{label} is an extended label")
    if letter == "A":
        return CurveConfig.of(n, _path(n))
    if letter == "D":
        return CurveConfig.of(n, _star((1, 1, n - 3)))
    return CurveConfig.of(n, _star((1, 2, n - 4)))


def extended_config(label: str) -> CurveConfig:
    """Reference extended diagram with n+1 vertices; "~A1" is a double edge"""
    extended, letter, n = _parse_label(label)
    if not extended:
        raise UnknownLabel(f"{label} is not an extended label")
    if letter == "A":
        if n == 1:
            return CurveConfig.of(2, [(0, 1, 2)])
        return CurveConfig.of(n + 1, _path(n + 1) + [(n, 0)])
    if letter == "D":
        spine = n - 3
        edges = _path(spine) + [(0, spine), (0, spine + 1), (spine - 1, spine + 2), (spine - 1, spine + 3)]
        return CurveConfig.of(n + 1, edges)
    arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[n]
    return CurveConfig.of(n + 1, _star(arms))


def _arms(g: nx.Graph, center: int) -> List[int]:
    lengths = []
    for start in g.neighbors(center):
        length, prev, cur = 1, center, start
        while g.degree(cur) == 2:
            prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
            length += 1
        lengths.append(length)
    return sorted(lengths)


def _shape_label(cfg: CurveConfig) -> Verdict:
    g = cfg.graph
    if any(mult > 1 for _, mult in cfg.edges):
        return Verdict(None, "multiple edge (contains ~A1)")
    degrees = dict(g.degree())
    top = max(degrees.values(), default=0)
    if top >= 4:
        return Verdict(None, f"vertex of degree {top} (contains ~D4)")
    if g.number_of_edges() >= cfg.count:
        k = min(len(c) for c in nx.minimum_cycle_basis(g))
        return Verdict(None, f"cycle of length {k} (contains ~A{k - 1})")
    branches = [v for v, d in degrees.items() if d == 3]
    if len(branches) >= 2:
        distance = min(nx.shortest_path_length(g, u, v) for u, v in combinations(branches, 2))
        return Verdict(None, f"two branch vertices (contains ~D{distance + 4})")
    if not branches:
        return Verdict(f"A{cfg.count}")

    p, q, r = _arms(g, branches[0])
    if p >= 2:
        return Verdict(None, "branch arms too long (contains ~E6)")
    if q == 1:
        return Verdict(f"D{cfg.count}")
    if q >= 3:
        return Verdict(None, "branch arms too long (contains ~E7)")
    if r <= 4:
        return Verdict(f"E{cfg.count}")
    return Verdict(None, "branch arms too long (contains ~E8)")


def classify(cfg: CurveConfig) -> Verdict:
    """
    ADE label of a configuration, or the reason it has none

    Forbidden shapes are reported with the extended diagram they contain;
    every positive answer is confirmed by isomorphism with the reference
    diagram and by the minor test.
    """
    verdict = _shape_label(cfg)
    if not verdict:
        return verdict
    if not nx.is_isomorphic(cfg.graph, ade_config(verdict.label).graph):
        raise DynkinServiceError(f"shape rules named {verdict.label} but the graph does not match it")
    if not is_negative_definite(cfg):
        return Verdict(None, "not negative definite")
    return verdict


def _extended_shape(cfg: CurveConfig) -> Optional[str]:
    g = cfg.graph
    n = cfg.count
    if n == 2 and cfg.edges == (((0, 1), 2),):
        return "~A1"
    if any(mult > 1 for _, mult in cfg.edges):
        return None
    degrees = [d for _, d in g.degree()]
    if n >= 3 and all(d == 2 for d in degrees):
        return f"~A{n - 1}"
    if not nx.is_tree(g):
        return None
    if max(degrees) >= 4:
        return "~D4" if n == 5 else None
    branches = [v for v, d in g.degree() if d == 3]
    if len(branches) == 2:
        leaves = [v for v, d in g.degree() if d == 1]
        return f"~D{n - 1}" if all(set(g.neighbors(v)) & set(branches) for v in leaves) else None
    if len(branches) == 1:
        return {(2, 2, 2): "~E6", (1, 3, 3): "~E7", (1, 2, 5): "~E8"}.get(tuple(_arms(g, branches[0])))
    return None


def classify_extended(cfg: CurveConfig) -> Verdict:
    """Extended ADE label (~A_n, ~D_n, ~E_n), confirmed by a rank-one radical"""
    label = _extended_shape(cfg)
    if label is None or not nx.is_isomorphic(cfg.graph, extended_config(label).graph):
        return Verdict(None, "no extended ADE shape")
    if not is_negative_semidefinite(cfg) or len(cfg.matrix.nullspace()) != 1:
        return Verdict(None, "intersection form is not semidefinite with one-dimensional radical")
    return Verdict(label)


def fundamental_cycle(cfg: CurveConfig) -> Cycle:
    """
    Minimal positive Z with Z·C_i <= 0 for all i, by Artin's ascent

    Starting from the sum of all curves, any n_i with Z·C_i > 0 is raised by one.

    Raises:
        NotADE: cfg is not an ADE diagram
    """
    verdict = classify(cfg)
    if not verdict:
        raise NotADE(verdict.reason)
    z = [1] * cfg.count
    while True:
        dots = intersections(cfg, z)
        positive = next((i for i, d in enumerate(dots) if d > 0), None)
        if positive is None:
            break
        z[positive] += 1
        logger.debug(f"ascent on {verdict.label}: raised n_{positive} to {z[positive]}")
    if self_intersection(cfg, z) != -2:
        raise DynkinServiceError(f"ascent on {verdict.label} ended with Z^2 = {self_intersection(cfg, z)}")
    return Cycle(tuple(z))


def elliptic_divisor(cfg: CurveConfig) -> Cycle:
    """
    Primitive positive generator F of the radical: F·C_i = 0 for all i, F² = 0

    Raises:
        NotExtended: cfg is not an extended ADE diagram
    """
    verdict = classify_extended(cfg)
    if not verdict:
        raise NotExtended(verdict.reason)
    (kernel,) = cfg.matrix.nullspace()
    scale = reduce(ilcm, (x.q for x in kernel), 1)
    values = [int(x * scale) for x in kernel]
    common = reduce(gcd, values)
    values = [v // common for v in values]
    if values[0] < 0:
        values = [-v for v in values]
    if any(v <= 0 for v in values) or any(intersections(cfg, values)):
        raise DynkinServiceError(f"radical of {verdict.label} is not a positive cycle: {values}")
    return Cycle(tuple(values))


def extend(cfg: CurveConfig) -> CurveConfig:
    """
    Attach a new curve meeting each C_i with multiplicity -Z·C_i (Z fundamental)

    The result is the extended diagram, and F - C_new = Z.
    """
    z = fundamental_cycle(cfg)
    new = cfg.count
    edges = [(i, j, m) for (i, j), m in cfg.edges]
    for i, d in enumerate(intersections(cfg, list(z))):
        if d < 0:
            edges.append((i, new, -d))
    return CurveConfig.of(cfg.count + 1, edges)


def rdp_data(label: str) -> RdpEntry:
    """Klein equation, Milnor number and graded automorphism group of an RDP"""
    entry = get_rdp_table_service().get(label)
    if entry is None:
        raise UnknownLabel(f"no rational double point labelled {label!r}")
    return entry


def analyze(cfg: CurveConfig) -> ClassificationModel:
    """Both classifiers and, when they succeed, the associated cycle"""
    verdict = classify(cfg)
    extended = classify_extended(cfg)
    return ClassificationModel(
        label=verdict.label,
        extended_label=extended.label,
        negative_definite=is_negative_definite(cfg),
        reason=None if verdict or extended else verdict.reason,
        fundamental_cycle=list(fundamental_cycle(cfg)) if verdict else None,
        elliptic_divisor=list(elliptic_divisor(cfg)) if extended else None,
    )


def to_model(cfg: CurveConfig) -> CurveConfigModel:
    return CurveConfigModel(count=cfg.count, edges=[[i, j, m] for (i, j), m in cfg.edges])


def from_model(model: CurveConfigModel) -> CurveConfig:
    return CurveConfig.of(model.count, model.edges)
