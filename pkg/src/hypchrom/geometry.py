"""Points of the Poincare disk in module form and exact edge certification.

A module point encodes disk coordinates as x = R*X(c), y = R*s*Y(c) where
X, Y are elements of Q(c), R^2 = 2c - 1 and s^2 = 1 - c^2.  The octuple
[m, n, p, q, u, v, w, z] lists the coefficients of X = m c^3 + n c^2 + p c + q
and Y = u c^3 + v c^2 + w c + z.

Two points are at the target hyperbolic distance exactly when the quantity

    f(P, Q) = 2 * ((x1-x2)^2 + (y1-y2)^2) / ((1 - x1^2 - y1^2)(1 - x2^2 - y2^2))

equals (2c-1)/(1-c); for module points f(P, Q) lies in Q(c) and the test is
a comparison of canonical field elements, with no rounding anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .field import (
    EDGE_INVARIANT,
    GEN,
    ONE,
    RADIUS_SQ,
    SIN_SQ,
    FieldElement,
    fe_sign,
    fe_to_interval,
    format_rational,
    interval_sqrt,
    parse_rational,
    _normalize,
    _raw_add,
    _raw_is_zero,
    _raw_mul,
    _raw_sub,
)


class GraphIntegrityError(Exception):
    """An exact certification check failed on data that must be certified."""


# raw constants for the hot edge test
_RAW_ONE_MINUS_CSQ = ((1, 0, -1, 0), 1)
_RAW_TWO_ONE_MINUS_C = ((2, -2, 0, 0), 1)
_RAW_TWOC_MINUS_ONE = ((-1, 2, 0, 0), 1)
_RAW_ONE = ((1, 0, 0, 0), 1)


class ModulePoint:
    """A disk point with both scaled coordinates in Q(c)."""

    __slots__ = ("x_elem", "y_elem", "_k")

    def __init__(self, x_elem: FieldElement, y_elem: FieldElement):
        self.x_elem = x_elem
        self.y_elem = y_elem
        self._k = None

    @classmethod
    def from_octuple(cls, octuple: Sequence) -> "ModulePoint":
        vals = [Fraction(v) for v in octuple]
        if len(vals) != 8:
            raise ValueError("octuple must have eight entries")
        m, n, p, q, u, v, w, z = vals
        return cls(FieldElement(q, p, n, m), FieldElement(z, w, v, u))

    @property
    def octuple(self) -> tuple[Fraction, ...]:
        x, y = self.x_elem.coeffs, self.y_elem.coeffs
        return (x[3], x[2], x[1], x[0], y[3], y[2], y[1], y[0])

    def _k_raw(self):
        # K = 1 - x^2 - y^2 = 1 - (2c-1) * (X^2 + (1-c^2) Y^2)
        if self._k is None:
            xn, xd = self.x_elem._n, self.x_elem._d
            yn, yd = self.y_elem._n, self.y_elem._d
            s = _raw_mul(xn, xd, xn, xd)
            t = _raw_mul(yn, yd, yn, yd)
            t = _raw_mul(*t, *_RAW_ONE_MINUS_CSQ)
            s = _raw_add(*s, *t)
            s = _raw_mul(*s, *_RAW_TWOC_MINUS_ONE)
            self._k = _normalize(*_raw_sub(*_RAW_ONE, *s))
        return self._k

    def k_elem(self) -> FieldElement:
        """1 - x^2 - y^2 as a field element (positive inside the disk)."""
        return FieldElement._from_raw(*self._k_raw())

    def norm_sq_elem(self) -> FieldElement:
        """x^2 + y^2 as a field element."""
        return ONE - self.k_elem()

    def is_inside_disk(self) -> bool:
        return fe_sign(self.k_elem()) > 0

    def to_floats(self) -> tuple[float, float]:
        return (
            _R_FLOAT * self.x_elem.to_float(),
            _RS_FLOAT * self.y_elem.to_float(),
        )

    def as_strings(self) -> tuple[str, ...]:
        return tuple(format_rational(v) for v in self.octuple)

    @classmethod
    def from_strings(cls, parts: Sequence[str]) -> "ModulePoint":
        return cls.from_octuple([parse_rational(p) for p in parts])

    def __eq__(self, other):
        if not isinstance(other, ModulePoint):
            return NotImplemented
        return self.x_elem == other.x_elem and self.y_elem == other.y_elem

    def __hash__(self):
        return hash((self.x_elem, self.y_elem))

    def __repr__(self):
        return f"ModulePoint{self.octuple}"


def lex_less(p: ModulePoint, q: ModulePoint) -> bool:
    """Exact lexicographic order on (x, y); used as the branch tiebreak."""
    s = fe_sign(p.x_elem - q.x_elem)
    if s != 0:
        return s < 0
    return fe_sign(p.y_elem - q.y_elem) < 0


@dataclass(frozen=True)
class Params:
    """The construction constants, exact plus a numeric distance value."""

    c_elem: FieldElement
    s_sq: FieldElement
    r_sq: FieldElement
    f_elem: FieldElement
    d_numeric: float

    def check(self) -> bool:
        return (
            self.s_sq == ONE - self.c_elem * self.c_elem
            and self.r_sq == 2 * self.c_elem - ONE
            and self.f_elem == self.r_sq / (ONE - self.c_elem)
        )


def _d_numeric() -> float:
    lo, hi = fe_to_interval(ONE + EDGE_INVARIANT, Fraction(1, 10**14))
    return math.acosh(float((lo + hi) / 2))


PARAMS = Params(
    c_elem=GEN,
    s_sq=SIN_SQ,
    r_sq=RADIUS_SQ,
    f_elem=EDGE_INVARIANT,
    d_numeric=_d_numeric(),
)

_R_FLOAT = math.sqrt(RADIUS_SQ.to_float())
_S_FLOAT = math.sqrt(SIN_SQ.to_float())
_RS_FLOAT = _R_FLOAT * _S_FLOAT


# ---------------------------------------------------------------------------
# the distance quantity and the exact edge test
# ---------------------------------------------------------------------------

def _delta_raw(p: ModulePoint, q: ModulePoint):
    # (X1-X2)^2 + (1-c^2)(Y1-Y2)^2, scaled squared Euclidean separation / (2c-1)
    dx = _raw_sub(p.x_elem._n, p.x_elem._d, q.x_elem._n, q.x_elem._d)
    dy = _raw_sub(p.y_elem._n, p.y_elem._d, q.y_elem._n, q.y_elem._d)
    dx2 = _raw_mul(*dx, *dx)
    dy2 = _raw_mul(*dy, *dy)
    dy2 = _raw_mul(*dy2, *_RAW_ONE_MINUS_CSQ)
    return _raw_add(*dx2, *dy2)


def f_of(p: ModulePoint, q: ModulePoint) -> FieldElement:
    """The distance quantity f(P, Q) as an exact field element."""
    delta = _raw_mul(*_delta_raw(p, q), *_RAW_TWOC_MINUS_ONE)
    num = FieldElement._from_raw(*_raw_add(*delta, *delta))
    den = FieldElement._from_raw(*_raw_mul(*p._k_raw(), *q._k_raw()))
    return num / den


def edge_gap(p: ModulePoint, q: ModulePoint) -> FieldElement:
    """Zero exactly when P and Q are at the target distance.

    Equal to (f(P,Q) - f) * K_P * K_Q * (1-c) / (2c-1), which shares the
    zero set of f(P,Q) - f but needs no division.
    """
    lhs = _raw_mul(*_delta_raw(p, q), *_RAW_TWO_ONE_MINUS_C)
    rhs = _raw_mul(*p._k_raw(), *q._k_raw())
    return FieldElement._from_raw(*_raw_sub(*lhs, *rhs))


def is_unit_edge(p: ModulePoint, q: ModulePoint) -> bool:
    """True iff f(P, Q) equals the edge value exactly."""
    lhs = _raw_mul(*_delta_raw(p, q), *_RAW_TWO_ONE_MINUS_C)
    rhs = _raw_mul(*p._k_raw(), *q._k_raw())
    n, _ = _raw_sub(*lhs, *rhs)
    return _raw_is_zero(n)


def f_numeric(p: tuple[float, float], q: tuple[float, float]) -> float:
    """Floating-point distance quantity for plain coordinate pairs."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    kp = 1.0 - p[0] * p[0] - p[1] * p[1]
    kq = 1.0 - q[0] * q[0] - q[1] * q[1]
    return 2.0 * (dx * dx + dy * dy) / (kp * kq)


F_NUMERIC = EDGE_INVARIANT.to_float()


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexOrigin:
    """Provenance of a generated vertex: which circle pair, which branch,
    which growth phase.  Seed vertices carry no origin."""

    source_pair: tuple[int, int]
    branch: str
    phase: int


class Graph:
    """Ordered vertex list plus certified edge set; order is construction
    order.  Edges are stored as 0-based (i, j) pairs with i < j."""

    __slots__ = ("vertices", "edges", "origins", "phase_report")

    def __init__(
        self,
        vertices: Sequence[ModulePoint],
        edges: Iterable[tuple[int, int]],
        origins: Optional[Sequence[Optional[VertexOrigin]]] = None,
        phase_report=None,
    ):
        self.vertices = list(vertices)
        self.edges = sorted(tuple(sorted(e)) for e in edges)
        if origins is None:
            origins = [None] * len(self.vertices)
        self.origins = list(origins)
        self.phase_report = phase_report
        n = len(self.vertices)
        if len(self.origins) != n:
            raise ValueError("origins must match vertex count")
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.edges)

    def neighbor_lists(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for lst in adj:
            lst.sort()
        return adj

    def float_coords(self) -> list[tuple[float, float]]:
        return [v.to_floats() for v in self.vertices]


@dataclass
class CertificationReport:
    ok: bool
    edges_checked: int
    nonedges_checked: int
    failures: list


def certify_graph(
    g: Graph,
    exhaustive_order_limit: int = 119,
    nonedge_samples: int = 2000,
    seed: int = 0,
) -> CertificationReport:
    """Exact certification: every recorded edge has f = f_edge, and recorded
    non-edges fail the test (exhaustively up to the order limit, sampled
    above it)."""
    failures = []
    for i, j in g.edges:
        if not is_unit_edge(g.vertices[i], g.vertices[j]):
            failures.append(("edge", i, j))
    edge_set = g.edge_set()
    nonedges_checked = 0
    n = g.order
    if n <= exhaustive_order_limit:
        for i in range(n):
            vi = g.vertices[i]
            for j in range(i + 1, n):
                if (i, j) in edge_set:
                    continue
                nonedges_checked += 1
                if is_unit_edge(vi, g.vertices[j]):
                    failures.append(("nonedge", i, j))
    else:
        import random

        rng = random.Random(seed)
        total = n * (n - 1) // 2
        target = min(nonedge_samples, total - len(edge_set))
        while nonedges_checked < target:
            i = rng.randrange(n)
            j = rng.randrange(n)
            if i == j:
                continue
            i, j = min(i, j), max(i, j)
            if (i, j) in edge_set:
                continue
            nonedges_checked += 1
            if is_unit_edge(g.vertices[i], g.vertices[j]):
                failures.append(("nonedge", i, j))
    return CertificationReport(not failures, len(g.edges), nonedges_checked, failures)


# ---------------------------------------------------------------------------
# the order-9 seed graph
# ---------------------------------------------------------------------------

_SEED_OCTUPLES = (
    (0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 1),
    (-8, -4, 6, Fraction(3, 2), -8, -4, 6, 1),
    (-4, 4, 2, -1, 16, -4, -4, 0),
    (4, -4, 0, 1, -16, 12, 4, -2),
    (0, 0, 0, 1, 16, 8, -8, -2),
    (0, -2, 2, 1, 0, 8, -2, -2),
    (-8, -2, 4, Fraction(3, 2), 8, -4, 0, 1),
)

# 17 edges, 0-based: spindle on the first seven vertices plus the two
# circumcenter vertices joined to their defining triangles
SEED_EDGES = (
    (0, 1), (0, 2), (0, 4), (0, 5),
    (1, 2), (1, 3), (1, 7),
    (2, 3), (2, 8),
    (3, 6), (3, 7),
    (4, 5), (4, 6), (4, 7),
    (5, 6), (5, 8),
    (6, 8),
)

_CIRCUMCENTER_CHECKS = ((1, 7), (3, 7), (4, 7), (2, 8), (5, 8), (6, 8))


def build_g9() -> Graph:
    """The certified order-9, size-17 seed graph.

    Every listed edge is verified exactly and every non-edge pair is
    verified to fail; any discrepancy raises GraphIntegrityError.
    """
    vertices = [ModulePoint.from_octuple(o) for o in _SEED_OCTUPLES]
    edge_set = set(SEED_EDGES)
    for i in range(9):
        for j in range(i + 1, 9):
            ok = is_unit_edge(vertices[i], vertices[j])
            if ok != ((i, j) in edge_set):
                raise GraphIntegrityError(
                    f"seed graph self-check failed on pair ({i + 1}, {j + 1})"
                )
    for v in vertices:
        if not v.is_inside_disk():
            raise GraphIntegrityError("seed vertex outside the unit disk")
    return Graph(vertices, SEED_EDGES)


def verify_condition1(g: Graph) -> bool:
    """True iff the two circumcenter vertices are at the exact target
    distance from each vertex of their defining triangles (six edge
    checks)."""
    if g.order < 9:
        raise ValueError("graph does not contain the nine seed vertices")
    return all(is_unit_edge(g.vertices[i], g.vertices[j]) for i, j in _CIRCUMCENTER_CHECKS)


# ---------------------------------------------------------------------------
# numeric spindle for arbitrary distance
# ---------------------------------------------------------------------------

SPINDLE_EDGES = (
    (0, 1), (0, 2), (1, 2),
    (1, 3), (2, 3),
    (0, 4), (0, 5), (4, 5),
    (4, 6), (5, 6),
    (3, 6),
)


def spindle_numeric(d: float) -> tuple[list[tuple[float, float]], tuple[tuple[int, int], ...]]:
    """Seven-point double-rhombus embedding at hyperbolic distance d > 0.

    Returns the vertex coordinates (floats, Poincare disk) and the eleven
    edges.  Works for any positive d, not just the exact construction value.
    """
    if d <= 0:
        raise ValueError("distance must be positive")
    big_r = math.tanh(d / 2)
    cos_a = (1 + big_r * big_r) / 2
    alpha = math.acos(cos_a)
    cos_b = 1 - (1 - cos_a) / (8 * cos_a * cos_a * (1 + cos_a))
    beta = math.acos(cos_b)

    def apex(theta1: float, theta2: float) -> tuple[float, float]:
        # fourth rhombus vertex over the base pair at angles theta1, theta2
        return (
            big_r * (math.cos(theta1) + math.cos(theta2)) / (2 * cos_a),
            big_r * (math.sin(theta1) + math.sin(theta2)) / (2 * cos_a),
        )

    pts = [
        (0.0, 0.0),
        (big_r, 0.0),
        (big_r * math.cos(alpha), big_r * math.sin(alpha)),
        apex(0.0, alpha),
        (big_r * math.cos(beta), big_r * math.sin(beta)),
        (big_r * math.cos(alpha + beta), big_r * math.sin(alpha + beta)),
        apex(beta, alpha + beta),
    ]
    return pts, SPINDLE_EDGES


# ---------------------------------------------------------------------------
# rigorous numeric coordinates
# ---------------------------------------------------------------------------

class NumericPoint:
    """Coordinates with explicit rational bounds (hence an error radius)."""

    __slots__ = ("x_lo", "x_hi", "y_lo", "y_hi")

    def __init__(self, x_lo, x_hi, y_lo, y_hi):
        self.x_lo = Fraction(x_lo)
        self.x_hi = Fraction(x_hi)
        self.y_lo = Fraction(y_lo)
        self.y_hi = Fraction(y_hi)
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise ValueError("bounds out of order")

    @property
    def x(self) -> float:
        return float((self.x_lo + self.x_hi) / 2)

    @property
    def y(self) -> float:
        return float((self.y_lo + self.y_hi) / 2)

    def err_radius(self) -> float:
        return float(max(self.x_hi - self.x_lo, self.y_hi - self.y_lo) / 2)

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi

    def __repr__(self):
        return f"NumericPoint(x~{self.x:.12g}, y~{self.y:.12g}, err={self.err_radius():.3g})"


def _imul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def point_coords_numeric(p: ModulePoint, err_radius: float = 1e-12) -> NumericPoint:
    """Rigorous enclosure of the disk coordinates of a module point."""
    target = Fraction(err_radius)
    width = target / 4
    while True:
        r_int = interval_sqrt(*fe_to_interval(RADIUS_SQ, width), width)
        s_int = interval_sqrt(*fe_to_interval(SIN_SQ, width), width)
        x_int = _imul(r_int, fe_to_interval(p.x_elem, width))
        y_int = _imul(_imul(r_int, s_int), fe_to_interval(p.y_elem, width))
        if (
            x_int[1] - x_int[0] <= 2 * target
            and y_int[1] - y_int[0] <= 2 * target
        ):
            return NumericPoint(x_int[0], x_int[1], y_int[0], y_int[1])
        width /= 16
