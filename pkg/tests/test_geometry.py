import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypchrom.field import EDGE_INVARIANT, GEN, ONE, fe_sign, fe_to_interval
from hypchrom.geometry import (
    Graph,
    GraphIntegrityError,
    ModulePoint,
    PARAMS,
    SEED_EDGES,
    SPINDLE_EDGES,
    build_g9,
    certify_graph,
    f_numeric,
    f_of,
    is_unit_edge,
    lex_less,
    point_coords_numeric,
    spindle_numeric,
    verify_condition1,
)

DIST_APPROX = 1.375033509
RADIUS_APPROX = 0.596384351
COSB_APPROX = 0.9477621926


def hyp_dist_numeric(p, q):
    return math.acosh(1 + f_numeric(p, q))


# octuple entries small enough that the point stays inside the disk
disk_entries = st.integers(min_value=-8, max_value=8).map(lambda n: Fraction(n, 24))
disk_points = st.builds(
    lambda *vals: ModulePoint.from_octuple(vals), *([disk_entries] * 8)
)


class TestModulePoint:
    def test_octuple_roundtrip(self):
        oct_ = (1, Fraction(-3, 2), 0, 2, Fraction(5, 58), -1, 0, Fraction(1, 29))
        p = ModulePoint.from_octuple(oct_)
        assert p.octuple == tuple(Fraction(v) for v in oct_)
        assert ModulePoint.from_strings(p.as_strings()) == p

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            ModulePoint.from_octuple([1, 2, 3])

    def test_origin_inside_disk(self):
        origin = ModulePoint.from_octuple([0] * 8)
        assert origin.is_inside_disk()
        assert origin.k_elem() == ONE

    @given(disk_points)
    @settings(max_examples=40, deadline=None)
    def test_disk_membership_matches_float(self, p):
        x, y = p.to_floats()
        r2 = x * x + y * y
        if abs(r2 - 1) > 1e-6:
            assert p.is_inside_disk() == (r2 < 1)


class TestDistanceQuantity:
    @given(disk_points, disk_points)
    @settings(max_examples=40, deadline=None)
    def test_symmetry(self, p, q):
        assert f_of(p, q) == f_of(q, p)

    @given(disk_points, disk_points)
    @settings(max_examples=40, deadline=None)
    def test_positive_for_distinct_points(self, p, q):
        if p == q:
            assert f_of(p, q).is_zero()
        else:
            assert fe_sign(f_of(p, q)) == 1

    def test_coincident_points_give_zero(self, g9):
        a4 = g9.vertices[3]
        assert f_of(a4, a4).is_zero()
        assert not is_unit_edge(a4, a4)

    @given(disk_points, disk_points)
    @settings(max_examples=30, deadline=None)
    def test_matches_float_formula(self, p, q):
        exact = f_of(p, q)
        lo, hi = fe_to_interval(exact, Fraction(1, 10**12))
        approx = f_numeric(p.to_floats(), q.to_floats())
        assert float(lo) - 1e-7 <= approx <= float(hi) + 1e-7


class TestSeedGraph:
    def test_order_and_size(self, g9):
        assert g9.order == 9
        assert g9.size == 17

    def test_third_vertex_octuple(self, g9):
        assert g9.vertices[2].octuple == tuple(
            Fraction(v) for v in (0, 0, 1, 0, 0, 0, 0, 1)
        )

    def test_all_edges_certified_exactly(self, g9):
        for i, j in g9.edges:
            assert is_unit_edge(g9.vertices[i], g9.vertices[j])
            assert f_of(g9.vertices[i], g9.vertices[j]) == EDGE_INVARIANT

    def test_all_nonedges_fail(self, g9):
        edges = g9.edge_set()
        nonedges = [
            (i, j)
            for i in range(9)
            for j in range(i + 1, 9)
            if (i, j) not in edges
        ]
        assert len(nonedges) == 19
        for i, j in nonedges:
            assert not is_unit_edge(g9.vertices[i], g9.vertices[j])

    def test_edge_distance_brackets_published_value(self, g9):
        for i, j in g9.edges:
            lo, hi = fe_to_interval(
                ONE + f_of(g9.vertices[i], g9.vertices[j]), Fraction(1, 10**12)
            )
            assert math.acosh(float(lo)) - 1e-9 <= DIST_APPROX <= math.acosh(float(hi)) + 1e-9

    def test_rotation_preserves_distance_quantity(self, g9):
        # the second rhombus is the rotated image of the first
        assert f_of(g9.vertices[0], g9.vertices[4]) == f_of(g9.vertices[0], g9.vertices[1])

    def test_first_seven_vertices_form_spindle(self, g9):
        spindle_set = set(SPINDLE_EDGES)
        seed_within_seven = {
            (i, j) for i, j in g9.edges if i < 7 and j < 7
        }
        assert seed_within_seven == spindle_set

    def test_certify_graph_clean(self, g9):
        report = certify_graph(g9)
        assert report.ok
        assert report.edges_checked == 17
        assert report.nonedges_checked == 19

    def test_certify_flags_injected_edge(self, g9):
        bad = Graph(g9.vertices, list(g9.edges) + [(1, 6)], g9.origins)
        report = certify_graph(bad)
        assert not report.ok
        assert ("edge", 1, 6) in report.failures


class TestCondition1:
    def test_holds_for_seed_graph(self, g9):
        assert verify_condition1(g9)

    def test_fails_with_first_circumcenter_replaced(self, g9):
        verts = list(g9.vertices)
        verts[7] = verts[0]
        assert not verify_condition1(Graph(verts, SEED_EDGES[:0]))

    def test_fails_with_perturbed_second_circumcenter(self, g9):
        oct_ = list(g9.vertices[8].octuple)
        oct_[7] += 1
        verts = list(g9.vertices)
        verts[8] = ModulePoint.from_octuple(oct_)
        assert not verify_condition1(Graph(verts, []))

    def test_requires_nine_vertices(self, g9):
        with pytest.raises(ValueError):
            verify_condition1(Graph(g9.vertices[:5], []))


class TestSpindleNumeric:
    def test_radius_for_unit_distance(self):
        pts, edges = spindle_numeric(1.0)
        assert pts[1][0] == pytest.approx(math.tanh(0.5), abs=1e-12)
        assert pts[1][0] == pytest.approx(0.462117, abs=1e-6)

    @pytest.mark.parametrize("d", [1.0, 2.0, 3.0])
    def test_all_edges_close_at_distance(self, d):
        pts, edges = spindle_numeric(d)
        assert len(pts) == 7
        assert len(edges) == 11
        target = math.cosh(d) - 1
        for i, j in edges:
            fv = f_numeric(pts[i], pts[j])
            assert abs(fv - target) / target < 1e-12

    def test_construction_distance_matches_seed_vertices(self, g9):
        pts, _ = spindle_numeric(PARAMS.d_numeric)
        coords = g9.float_coords()
        for k in range(7):
            assert pts[k][0] == pytest.approx(coords[k][0], abs=1e-12)
            assert pts[k][1] == pytest.approx(coords[k][1], abs=1e-12)

    def test_rejects_nonpositive_distance(self):
        with pytest.raises(ValueError):
            spindle_numeric(0.0)


class TestParams:
    def test_invariants(self):
        assert PARAMS.check()

    def test_distance_value(self):
        assert PARAMS.d_numeric == pytest.approx(DIST_APPROX, abs=1e-8)

    def test_second_rotation_cosine_identity(self):
        # 1 - (1-c)/(8 c^2 (1+c)) evaluates to the published cosine
        c = GEN
        elem = ONE - (ONE - c) / (8 * c * c * (ONE + c))
        lo, hi = fe_to_interval(elem, Fraction(1, 10**12))
        assert float(lo) - 1e-9 <= COSB_APPROX <= float(hi) + 1e-9


class TestNumericCoords:
    def test_origin(self, g9):
        np_ = point_coords_numeric(g9.vertices[0])
        assert np_.x == 0 and np_.y == 0
        assert np_.err_radius() <= 1e-12

    def test_second_vertex_on_axis(self, g9):
        np_ = point_coords_numeric(g9.vertices[1], err_radius=1e-10)
        assert np_.x == pytest.approx(RADIUS_APPROX, abs=1e-8)
        assert np_.y == 0

    def test_third_vertex_matches_figure(self, g9):
        np_ = point_coords_numeric(g9.vertices[2])
        assert np_.x == pytest.approx(0.4043, abs=5e-5)
        assert np_.y == pytest.approx(0.4385, abs=5e-5)

    def test_enclosure_contains_float_coords(self, g9):
        for v in g9.vertices:
            np_ = point_coords_numeric(v, err_radius=1e-13)
            x, y = v.to_floats()
            assert float(np_.x_lo) - 1e-12 <= x <= float(np_.x_hi) + 1e-12
            assert float(np_.y_lo) - 1e-12 <= y <= float(np_.y_hi) + 1e-12


class TestLexOrder:
    def test_orders_by_x_then_y(self, g9):
        a1, a2, a3 = g9.vertices[0], g9.vertices[1], g9.vertices[2]
        assert lex_less(a1, a2)
        assert not lex_less(a2, a1)
        assert lex_less(a3, a2)  # A3 has smaller x

    def test_irreflexive(self, g9):
        assert not lex_less(g9.vertices[4], g9.vertices[4])
