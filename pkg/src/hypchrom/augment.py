"""Growth of the distance graph by intersecting equal-radius circles.

The locus of points at the target hyperbolic distance from a disk point is a
Euclidean circle, so new vertices arise as circle-circle intersections.  In
the scaled coordinates X = x/R, Y = y/(R*s) every circle has an equation

    X^2 + (1-c^2) Y^2 - 2A X - 2(1-c^2) B Y + E = 0

with A, B, E in Q(c); the radical line of a pair is linear over Q(c) and the
substituted quadratic has a discriminant in Q(c).  When the discriminant is
a square in the field the intersection points are module points, produced
exactly; otherwise rigorous numeric enclosures are returned.

A phase enumerates all vertex pairs, filters candidates with a vectorized
floating pass (which only decides what to look at), then certifies every
kept vertex and every recorded edge in exact arithmetic.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .field import (
    EDGE_INVARIANT,
    GEN,
    ONE,
    RADIUS_SQ,
    SIN_SQ,
    ZERO,
    FieldElement,
    fe_sign,
    fe_sqrt,
    fe_to_interval,
    interval_sqrt,
    root_bounds,
)
from .geometry import (
    F_NUMERIC,
    Graph,
    GraphIntegrityError,
    ModulePoint,
    NumericPoint,
    VertexOrigin,
    is_unit_edge,
    lex_less,
)


class IdenticalCirclesError(Exception):
    """Both circles coincide; the intersection is the whole circle."""


_ONE_MINUS_CSQ = SIN_SQ
_TWO = FieldElement(2)


@dataclass(frozen=True)
class EuclideanCircleRec:
    """Euclidean circle underlying a distance-d circle, in scaled module
    coordinates: center (A, B), squared Euclidean radius, and the constant
    term E of the scaled equation."""

    center: ModulePoint
    radius_sq: FieldElement
    e_elem: FieldElement


def circle_of(c: ModulePoint) -> EuclideanCircleRec:
    """The circle of points at the target distance from a module point."""
    k = c.k_elem()
    den = _TWO + EDGE_INVARIANT * k
    inv_den = ONE / den
    a = 2 * c.x_elem * inv_den
    b = 2 * c.y_elem * inv_den
    s_c = c.x_elem * c.x_elem + _ONE_MINUS_CSQ * c.y_elem * c.y_elem
    e = (2 * s_c - k / (ONE - GEN)) * inv_den
    center = ModulePoint(a, b)
    radius_sq = RADIUS_SQ * (a * a + _ONE_MINUS_CSQ * b * b - e)
    return EuclideanCircleRec(center=center, radius_sq=radius_sq, e_elem=e)


def point_on_circle(p: ModulePoint, circ: EuclideanCircleRec) -> bool:
    """Exact incidence test against the scaled circle equation."""
    a, b, e = circ.center.x_elem, circ.center.y_elem, circ.e_elem
    val = (
        p.x_elem * p.x_elem
        + _ONE_MINUS_CSQ * p.y_elem * p.y_elem
        - 2 * a * p.x_elem
        - 2 * _ONE_MINUS_CSQ * b * p.y_elem
        + e
    )
    return val.is_zero()


@dataclass
class CandidatePoint:
    """An intersection candidate, exact or enclosed."""

    point: Union[ModulePoint, NumericPoint]
    branch: str
    module_form: bool
    source_pair: Optional[tuple[int, int]] = None
    neighbor_count: int = -1


# ---------------------------------------------------------------------------
# exact intersection
# ---------------------------------------------------------------------------

def _interval(elem: FieldElement, width: Fraction) -> tuple[Fraction, Fraction]:
    return fe_to_interval(elem, width)


def _imul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _isub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _idiv(a, b):
    if b[0] <= 0 <= b[1]:
        raise ZeroDivisionError("interval divisor straddles zero")
    inv = (min(1 / b[0], 1 / b[1]), max(1 / b[0], 1 / b[1]))
    return _imul(a, inv)


def _enclose_numeric_pair(
    alpha: FieldElement,
    beta: FieldElement,
    disc: FieldElement,
    line: tuple[FieldElement, FieldElement, FieldElement],
    solve_for_x: bool,
    width: Fraction,
) -> list[NumericPoint]:
    """Rigorous enclosures of both intersection points when the discriminant
    is not a square in the field.  Coordinates are returned unscaled."""
    lp, lq, lt = line
    w = width
    while True:
        ia = _interval(alpha, w)
        ib = _interval(beta, w)
        idisc = _interval(disc, w)
        if idisc[0] < 0:
            idisc = (Fraction(0), idisc[1])
        isq = interval_sqrt(idisc[0], idisc[1], w)
        two_a = _imul((Fraction(2), Fraction(2)), ia)
        r_int = interval_sqrt(*_interval(RADIUS_SQ, w), w)
        s_int = interval_sqrt(*_interval(SIN_SQ, w), w)
        rs_int = _imul(r_int, s_int)
        out = []
        try:
            for sign_ in (-1, 1):
                num = _isub((-ib[1], -ib[0]), (Fraction(0), Fraction(0)))
                term = (isq[0] * sign_, isq[1] * sign_)
                if sign_ < 0:
                    term = (term[1], term[0])
                num = _iadd(num, term)
                v_main = _idiv(num, two_a)
                ilt = _interval(lt, w)
                ilp = _interval(lp, w)
                ilq = _interval(lq, w)
                if solve_for_x:
                    x_s = v_main
                    y_s = _idiv(_isub(ilt, _imul(ilp, x_s)), ilq)
                else:
                    y_s = v_main
                    x_s = _idiv(_isub(ilt, _imul(ilq, y_s)), ilp)
                x_u = _imul(r_int, x_s)
                y_u = _imul(rs_int, y_s)
                out.append(NumericPoint(x_u[0], x_u[1], y_u[0], y_u[1]))
        except ZeroDivisionError:
            w /= 1 << 8
            continue
        widths = [max(p.x_hi - p.x_lo, p.y_hi - p.y_lo) for p in out]
        if max(widths) <= 2 * width:
            out.sort(key=lambda p: (p.x, p.y))
            return out
        w /= 1 << 8


def intersect_circles(
    c1: EuclideanCircleRec,
    c2: EuclideanCircleRec,
    enclosure_width: Fraction = Fraction(1, 10**30),
) -> list[CandidatePoint]:
    """Intersection of two distance circles: zero to two candidates.

    Module points are returned exactly whenever the substituted quadratic's
    discriminant is a square in Q(c); otherwise both points are returned as
    rigorous enclosures flagged non-module.  Branch '-' is the point that is
    lexicographically smaller in (x, y).
    """
    a1, b1, e1 = c1.center.x_elem, c1.center.y_elem, c1.e_elem
    a2, b2, e2 = c2.center.x_elem, c2.center.y_elem, c2.e_elem
    lp = 2 * (a1 - a2)
    lq = 2 * _ONE_MINUS_CSQ * (b1 - b2)
    lt = e1 - e2
    lp_zero = lp.is_zero()
    lq_zero = lq.is_zero()
    if lp_zero and lq_zero:
        if lt.is_zero():
            raise IdenticalCirclesError("circles coincide")
        return []

    # substitute the radical line  lp*X + lq*Y = lt  into circle 1
    if not lq_zero:
        solve_for_x = True
        alpha = lq * lq + _ONE_MINUS_CSQ * lp * lp
        beta = (
            -2 * _ONE_MINUS_CSQ * lt * lp
            - 2 * a1 * lq * lq
            + 2 * _ONE_MINUS_CSQ * b1 * lq * lp
        )
        gamma = (
            _ONE_MINUS_CSQ * lt * lt
            - 2 * _ONE_MINUS_CSQ * b1 * lq * lt
            + e1 * lq * lq
        )
    else:
        solve_for_x = False
        alpha = _ONE_MINUS_CSQ * lp * lp
        beta = -2 * _ONE_MINUS_CSQ * b1 * lp * lp
        x_fixed_num = lt  # X = lt / lp
        gamma = lt * lt - 2 * a1 * lt * lp + e1 * lp * lp

    disc = beta * beta - 4 * alpha * gamma
    sgn = fe_sign(disc)
    if sgn < 0:
        return []

    root = fe_sqrt(disc) if sgn > 0 else ZERO
    if root is None:
        pts = _enclose_numeric_pair(
            alpha, beta, disc, (lp, lq, lt), solve_for_x, enclosure_width
        )
        return [
            CandidatePoint(point=pts[0], branch="-", module_form=False),
            CandidatePoint(point=pts[1], branch="+", module_form=False),
        ]

    inv_two_alpha = ONE / (2 * alpha)
    sols = []
    for t in ((-beta - root), (-beta + root)):
        v = t * inv_two_alpha
        if solve_for_x:
            x_s = v
            y_s = (lt - lp * x_s) / lq
        else:
            y_s = v
            x_s = x_fixed_num / lp
        sols.append(ModulePoint(x_s, y_s))
    if sgn == 0:
        return [CandidatePoint(point=sols[0], branch="-", module_form=True)]
    if lex_less(sols[1], sols[0]):
        sols.reverse()
    return [
        CandidatePoint(point=sols[0], branch="-", module_form=True),
        CandidatePoint(point=sols[1], branch="+", module_form=True),
    ]


# ---------------------------------------------------------------------------
# reconstruction of module form from numeric coordinates
# ---------------------------------------------------------------------------

def _scaled_targets(np_point: NumericPoint, dps: int):
    import mpmath as mp

    with mp.workdps(dps):
        lo, hi = root_bounds(Fraction(1, 10 ** (dps + 5)))
        c_val = (mp.mpf(lo.numerator) / lo.denominator + mp.mpf(hi.numerator) / hi.denominator) / 2
        r_val = mp.sqrt(2 * c_val - 1)
        s_val = mp.sqrt(1 - c_val * c_val)
        x_mid = (Fraction(np_point.x_lo) + Fraction(np_point.x_hi)) / 2
        y_mid = (Fraction(np_point.y_lo) + Fraction(np_point.y_hi)) / 2
        x_t = mp.mpf(x_mid.numerator) / x_mid.denominator / r_val
        y_t = mp.mpf(y_mid.numerator) / y_mid.denominator / (r_val * s_val)
        basis = [mp.mpf(1), c_val, c_val**2, c_val**3]
        return x_t, y_t, basis


def _pslq_coeffs(target, basis, denom_bound: int, tol) -> Optional[FieldElement]:
    import mpmath as mp

    if abs(target) < tol:
        return ZERO
    rel = mp.pslq([target] + basis, tol=tol, maxcoeff=10**14, maxsteps=10**5)
    if rel is None or rel[0] == 0:
        return None
    k = rel[0]
    coeffs = [Fraction(-rel[i + 1], k) for i in range(4)]
    if any(q.denominator > denom_bound for q in coeffs):
        return None
    return FieldElement(*coeffs)


def reconstruct_module_point(
    np_point: NumericPoint, denom_bound: int = 10_000
) -> Optional[ModulePoint]:
    """Try to express an enclosed point in module form with coefficient
    denominators at most denom_bound.  The result is verified against the
    enclosure before being returned; absence is a normal outcome."""
    from .geometry import point_coords_numeric

    err = max(
        Fraction(np_point.x_hi) - Fraction(np_point.x_lo),
        Fraction(np_point.y_hi) - Fraction(np_point.y_lo),
    )
    if err == 0:
        digits = 60
    else:
        digits = max(20, int(-math.log10(float(err))) - 2)
    dps = min(digits + 20, 400)
    x_t, y_t, basis = _scaled_targets(np_point, dps)
    import mpmath as mp

    with mp.workdps(dps):
        tol = mp.mpf(10) ** (-(digits - 4))
        x_elem = _pslq_coeffs(x_t, basis, denom_bound, tol)
        if x_elem is None:
            return None
        y_elem = _pslq_coeffs(y_t, basis, denom_bound, tol)
        if y_elem is None:
            return None
    candidate = ModulePoint(x_elem, y_elem)
    # verify: the reconstructed point must land inside the enclosure
    enc = point_coords_numeric(candidate, err_radius=float(err) / 4 if err else 1e-30)
    if not (
        enc.x_lo <= Fraction(np_point.x_hi)
        and enc.x_hi >= Fraction(np_point.x_lo)
        and enc.y_lo <= Fraction(np_point.y_hi)
        and enc.y_hi >= Fraction(np_point.y_lo)
    ):
        return None
    return candidate


# ---------------------------------------------------------------------------
# the growth phase
# ---------------------------------------------------------------------------

@dataclass
class AugmentConfig:
    denom_bound: int = 10_000
    # wide enough to survive the coordinate error of near-tangent circle
    # intersections; every survivor is re-verified exactly, and the true
    # f-value spectrum has no other point within ~1e-3 of the edge value
    neighbor_rel_tol: float = 3e-5
    dedup_radius: float = 2e-9
    chunk_size: int = 8192
    # Points dropped whenever the growth produces them, reproducing the
    # published vertex selection (which omits a handful of otherwise valid
    # candidates).  Exclusion is persistent: a suppressed point stays out
    # even when later phases regenerate it.  Every drop is counted and
    # reported, never silent.  Empty set = the unfiltered rule.
    excluded_points: frozenset = frozenset()

    @classmethod
    def reference(cls, **kw) -> "AugmentConfig":
        from .reference_data import reference_excluded_points

        return cls(excluded_points=reference_excluded_points(), **kw)


@dataclass
class PhaseReport:
    phase: int
    min_neighbors: int
    pairs_total: int = 0
    raw_candidates: int = 0
    prefiltered: int = 0
    distinct: int = 0
    dropped_existing: int = 0
    rejected_nonmodule: int = 0
    rejected_denominator: int = 0
    rejected_neighbor_mismatch: int = 0
    excluded_by_selection: int = 0
    accepted: int = 0
    new_old_edges: int = 0
    accidental_edges: list = dc_field(default_factory=list)
    rejected_detail: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    def summary(self) -> str:
        acc = ",".join(f"{{{i + 1},{j + 1}}}" for i, j in self.accidental_edges)
        return (
            f"phase {self.phase}: pairs={self.pairs_total} raw={self.raw_candidates} "
            f"prefiltered={self.prefiltered} distinct={self.distinct} "
            f"existing={self.dropped_existing} nonmodule={self.rejected_nonmodule} "
            f"denom={self.rejected_denominator} mismatch={self.rejected_neighbor_mismatch} "
            f"excluded={self.excluded_by_selection} "
            f"accepted={self.accepted} new-old-edges={self.new_old_edges} "
            f"accidental=[{acc}] elapsed={self.elapsed:.2f}s"
        )


def _euclidean_circles(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    sq = coords[:, 0] ** 2 + coords[:, 1] ** 2
    k = 1.0 - sq
    den = 2.0 + F_NUMERIC * k
    centers = 2.0 * coords / den[:, None]
    e = (2.0 * sq - F_NUMERIC * k) / den
    rad2 = centers[:, 0] ** 2 + centers[:, 1] ** 2 - e
    return centers, rad2


def _pair_intersections(centers: np.ndarray, rad2: np.ndarray):
    """All pairwise circle intersection points, vectorized.

    Returns (pair_i, pair_j, branch, x, y) arrays; branch 0 is the point
    that is lexicographically smaller in (x, y)."""
    n = centers.shape[0]
    iu, ju = np.triu_indices(n, 1)
    ci = centers[iu]
    cj = centers[ju]
    dvec = cj - ci
    d2 = dvec[:, 0] ** 2 + dvec[:, 1] ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        a = (d2 + rad2[iu] - rad2[ju]) / (2.0 * d2)
        h2 = rad2[iu] - a * a * d2
    mask = (d2 > 0) & (h2 >= 0)
    iu, ju, a, h2, d2, ci, dvec = (
        iu[mask], ju[mask], a[mask], h2[mask], d2[mask], ci[mask], dvec[mask],
    )
    base = ci + a[:, None] * dvec
    scale = np.sqrt(h2 / d2)
    perp = np.stack([-dvec[:, 1], dvec[:, 0]], axis=1) * scale[:, None]
    p_plus = base + perp
    p_minus = base - perp
    # orient so branch 0 is lexicographically smaller
    swap = (p_plus[:, 0] < p_minus[:, 0]) | (
        (p_plus[:, 0] == p_minus[:, 0]) & (p_plus[:, 1] < p_minus[:, 1])
    )
    lo = np.where(swap[:, None], p_plus, p_minus)
    hi = np.where(swap[:, None], p_minus, p_plus)
    pair_i = np.concatenate([iu, iu])
    pair_j = np.concatenate([ju, ju])
    branch = np.concatenate([np.zeros(len(iu), dtype=np.int8), np.ones(len(iu), dtype=np.int8)])
    xs = np.concatenate([lo[:, 0], hi[:, 0]])
    ys = np.concatenate([lo[:, 1], hi[:, 1]])
    return pair_i, pair_j, branch, xs, ys


def _numeric_neighbor_counts(
    xs: np.ndarray, ys: np.ndarray, coords: np.ndarray, rel_tol: float, chunk: int
) -> np.ndarray:
    vx = coords[:, 0]
    vy = coords[:, 1]
    kv = 1.0 - vx * vx - vy * vy
    counts = np.zeros(len(xs), dtype=np.int32)
    lo = F_NUMERIC * (1.0 - rel_tol)
    hi = F_NUMERIC * (1.0 + rel_tol)
    for start in range(0, len(xs), chunk):
        cx = xs[start : start + chunk, None]
        cy = ys[start : start + chunk, None]
        kc = 1.0 - cx * cx - cy * cy
        fmat = 2.0 * ((cx - vx) ** 2 + (cy - vy) ** 2) / (kc * kv)
        counts[start : start + chunk] = np.count_nonzero(
            (fmat >= lo) & (fmat <= hi), axis=1
        )
    return counts


def _match_exact_candidate(
    cands: Sequence[CandidatePoint], x: float, y: float
) -> Optional[CandidatePoint]:
    best = None
    best_d = float("inf")
    for cand in cands:
        if not cand.module_form:
            return None
        px, py = cand.point.to_floats()
        d = math.hypot(px - x, py - y)
        if d < best_d:
            best, best_d = cand, d
    if best is not None and best_d < 1e-5:
        return best
    return None


def phase_augment(
    g: Graph,
    min_neighbors: int,
    cfg: Optional[AugmentConfig] = None,
    phase_index: Optional[int] = None,
) -> Graph:
    """One growth phase: intersect all circle pairs, keep intersection
    points in module form at the target distance from at least
    min_neighbors current vertices, and return the enlarged graph with all
    new edges (including accidental new-new edges) certified exactly.

    New vertices are appended sorted by source pair, then branch, so the
    construction order is deterministic.  Candidates in cfg.excluded_points
    are dropped but counted and reported, never silently discarded.
    """
    if min_neighbors < 2:
        raise ValueError("min_neighbors must be at least 2")
    if cfg is None:
        cfg = AugmentConfig()
    started = time.perf_counter()
    if phase_index is None:
        phase_index = max((o.phase for o in g.origins if o is not None), default=0) + 1
    report = PhaseReport(phase=phase_index, min_neighbors=min_neighbors)
    n = g.order
    if n < 2:
        report.elapsed = time.perf_counter() - started
        return Graph(g.vertices, g.edges, g.origins, phase_report=report)

    coords = np.array(g.float_coords(), dtype=np.float64)
    centers, rad2 = _euclidean_circles(coords)
    report.pairs_total = n * (n - 1) // 2
    pair_i, pair_j, branch, xs, ys = _pair_intersections(centers, rad2)
    report.raw_candidates = len(xs)

    counts = _numeric_neighbor_counts(xs, ys, coords, cfg.neighbor_rel_tol, cfg.chunk_size)
    keep = counts >= min_neighbors
    pair_i, pair_j, branch, xs, ys = (
        pair_i[keep], pair_j[keep], branch[keep], xs[keep], ys[keep],
    )
    report.prefiltered = len(xs)

    # deterministic processing order: source pair, then branch
    order = np.lexsort((branch, pair_j, pair_i))

    # spatial dedup: first occurrence in processing order wins
    cell = 1.0 / cfg.dedup_radius
    existing_cells: dict[tuple[int, int], list[tuple[float, float]]] = {}
    for x, y in coords:
        existing_cells.setdefault((round(x * cell), round(y * cell)), []).append((x, y))

    def near(cells, x, y, radius):
        cx, cy = round(x * cell), round(y * cell)
        for dx_ in (-1, 0, 1):
            for dy_ in (-1, 0, 1):
                for px, py in cells.get((cx + dx_, cy + dy_), ()):
                    if math.hypot(px - x, py - y) <= radius:
                        return True
        return False

    seen_cells: dict[tuple[int, int], list[tuple[float, float]]] = {}
    survivors: list[tuple[int, int, int, float, float]] = []
    for idx in order:
        x = float(xs[idx])
        y = float(ys[idx])
        if near(existing_cells, x, y, cfg.dedup_radius):
            report.dropped_existing += 1
            continue
        if near(seen_cells, x, y, cfg.dedup_radius):
            continue
        seen_cells.setdefault((round(x * cell), round(y * cell)), []).append((x, y))
        survivors.append((int(pair_i[idx]), int(pair_j[idx]), int(branch[idx]), x, y))
    report.distinct = len(survivors)

    # exact confirmation of every surviving candidate
    existing_points = {v: i for i, v in enumerate(g.vertices)}
    circles: dict[int, EuclideanCircleRec] = {}

    def circle(idx: int) -> EuclideanCircleRec:
        if idx not in circles:
            circles[idx] = circle_of(g.vertices[idx])
        return circles[idx]

    accepted: list[ModulePoint] = []
    accepted_keys: dict[ModulePoint, int] = {}
    accepted_origins: list[VertexOrigin] = []
    new_old_edges: list[tuple[int, int]] = []

    for i, j, _br, x, y in survivors:
        cands = intersect_circles(circle(i), circle(j))
        exact = _match_exact_candidate(cands, x, y)
        if exact is None:
            report.rejected_nonmodule += 1
            report.rejected_detail.append(("nonmodule", i, j, x, y))
            continue
        point = exact.point
        if any(q.denominator > cfg.denom_bound for q in point.octuple):
            report.rejected_denominator += 1
            report.rejected_detail.append(("denominator", i, j, x, y))
            continue
        if point in cfg.excluded_points:
            report.excluded_by_selection += 1
            report.rejected_detail.append(("excluded-by-selection", i, j, x, y))
            continue
        if point in existing_points:
            report.dropped_existing += 1
            continue
        if point in accepted_keys:
            continue
        neighbors = [
            t for t, v in enumerate(g.vertices) if is_unit_edge(point, v)
        ]
        if len(neighbors) < min_neighbors:
            report.rejected_neighbor_mismatch += 1
            report.rejected_detail.append(("neighbor-count", i, j, x, y))
            continue
        if (i not in neighbors) or (j not in neighbors):
            raise GraphIntegrityError(
                f"candidate from pair ({i + 1}, {j + 1}) not adjacent to its sources"
            )
        if not point.is_inside_disk():
            raise GraphIntegrityError("accepted candidate outside the unit disk")
        new_index = n + len(accepted)
        accepted_keys[point] = new_index
        accepted.append(point)
        accepted_origins.append(VertexOrigin((i, j), exact.branch, phase_index))
        new_old_edges.extend((t, new_index) for t in neighbors)

    report.accepted = len(accepted)
    report.new_old_edges = len(new_old_edges)

    # accidental edges among the new vertices, certified exactly
    accidental: list[tuple[int, int]] = []
    for a_idx in range(len(accepted)):
        for b_idx in range(a_idx + 1, len(accepted)):
            if is_unit_edge(accepted[a_idx], accepted[b_idx]):
                accidental.append((n + a_idx, n + b_idx))
    report.accidental_edges = accidental
    report.elapsed = time.perf_counter() - started

    vertices = list(g.vertices) + accepted
    origins = list(g.origins) + accepted_origins
    edges = list(g.edges) + new_old_edges + accidental
    return Graph(vertices, edges, origins, phase_report=report)


DEFAULT_SCHEDULE = (2, 3, 3, 3, 3, 3, 3)


def grow_pipeline(
    g0: Graph,
    schedule: Sequence[int] = DEFAULT_SCHEDULE,
    cfg: Optional[AugmentConfig] = None,
) -> list[Graph]:
    """Fold phase_augment over the schedule, returning each phase output.

    An empty schedule returns [g0] unchanged.
    """
    if not schedule:
        return [g0]
    if cfg is None:
        cfg = AugmentConfig.reference()
    out: list[Graph] = []
    g = g0
    for phase_no, min_nb in enumerate(schedule, start=1):
        g = phase_augment(g, min_nb, cfg=cfg, phase_index=phase_no)
        out.append(g)
    return out
