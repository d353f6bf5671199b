"""Exact polygon geometry in the projected weight simplex."""

import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from pblp import (
    ConvexPolygon2,
    HalfPlane,
    build_tolp,
    clip_polygon,
    component_halfplanes,
    component_hrep,
    component_vertices,
    decompose,
    hrep_feasible_at,
    simplex_triangle,
)
from pblp.weight_geometry import intersect_polygons

F = Fraction


def test_hull_is_canonical_regardless_of_input_order():
    pts = [(F(0), F(0)), (F(2), F(0)), (F(2), F(2)), (F(0), F(2)), (F(1), F(1))]
    rng = random.Random(3)
    reference = ConvexPolygon2.from_points(pts)
    assert reference.vertices == (
        (F(0), F(0)),
        (F(2), F(0)),
        (F(2), F(2)),
        (F(0), F(2)),
    )
    for _ in range(10):
        rng.shuffle(pts)
        assert ConvexPolygon2.from_points(pts + pts).vertices == reference.vertices


def test_hull_drops_collinear_interior_points():
    pts = [(F(0), F(0)), (F(1), F(0)), (F(2), F(0)), (F(0), F(2))]
    poly = ConvexPolygon2.from_points(pts)
    assert poly.vertices == ((F(0), F(0)), (F(2), F(0)), (F(0), F(2)))


def test_degenerate_hulls_are_points_and_segments():
    point = ConvexPolygon2.from_points([(F(1), F(1)), (F(1), F(1))])
    assert point.vertices == ((F(1), F(1)),)
    assert point.area() == 0
    seg = ConvexPolygon2.from_points([(F(0), F(0)), (F(2), F(2)), (F(1), F(1))])
    assert seg.vertices == ((F(0), F(0)), (F(2), F(2)))
    assert seg.area() == 0
    assert ConvexPolygon2.from_points([]).is_empty()


def test_simplex_triangle_area_is_one_half():
    assert simplex_triangle().area() == F(1, 2)


def test_clip_cuts_a_corner_exactly():
    poly = clip_polygon(simplex_triangle(), HalfPlane(F(1), F(1), F(1, 2)))
    assert poly.vertices == (
        (F(0), F(0)),
        (F(1, 2), F(0)),
        (F(0), F(1, 2)),
    )
    assert poly.area() == F(1, 8)


def test_clip_by_trivial_halfplanes():
    tri = simplex_triangle()
    assert clip_polygon(tri, HalfPlane(F(0), F(0), F(1))).vertices == tri.vertices
    assert clip_polygon(tri, HalfPlane(F(0), F(0), F(-1))).is_empty()


def test_clip_to_empty_and_to_lower_dimensions():
    tri = simplex_triangle()
    assert clip_polygon(tri, HalfPlane(F(-1), F(0), F(-2))).is_empty()
    edge = clip_polygon(tri, HalfPlane(F(0), F(1), F(0)))
    assert edge.vertices == ((F(0), F(0)), (F(1), F(0)))
    corner = clip_polygon(edge, HalfPlane(F(-1), F(0), F(-1)))
    assert corner.vertices == ((F(1), F(0)),)


def test_contains_handles_interior_boundary_and_outside():
    tri = simplex_triangle()
    assert tri.contains((F(1, 4), F(1, 4)))
    assert tri.contains((F(1, 2), F(1, 2)))  # on the hypotenuse
    assert not tri.contains((F(3, 4), F(3, 4)))
    seg = ConvexPolygon2.from_points([(F(0), F(0)), (F(2), F(2))])
    assert seg.contains((F(1), F(1)))
    assert not seg.contains((F(1), F(0)))


def test_edge_halfplanes_recover_the_polygon():
    tri = simplex_triangle()
    rebuilt = simplex_triangle()
    grid = [
        (F(a, 8), F(b, 8)) for a in range(-2, 11) for b in range(-2, 11)
    ]
    planes = tri.edge_halfplanes()
    assert len(planes) == 3
    for pt in grid:
        assert tri.contains(pt) == all(hp.contains(pt) for hp in planes)
    assert intersect_polygons(rebuilt, tri).vertices == tri.vertices


coords = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@given(
    st.lists(st.tuples(coords, coords), min_size=1, max_size=8),
    st.tuples(coords, coords, coords),
)
def test_clipping_shrinks_and_respects_the_halfplane(points, plane):
    a1, a2, rhs = plane
    hp = HalfPlane(a1, a2, rhs)
    poly = ConvexPolygon2.from_points(points)
    clipped = clip_polygon(poly, hp)
    assert clipped.area() <= poly.area()
    for v in clipped.vertices:
        assert hp.contains(v)
        assert poly.contains(v)
    # clipping is idempotent
    again = clip_polygon(clipped, hp)
    assert again.vertices == clipped.vertices


def test_component_halfplanes_known_values():
    y = (F(5), F(10), F(0))
    others = [(F(0), F(5), F(5)), (F(15), F(0), F(2))]
    planes = component_halfplanes(y, others)
    competitor = [(hp.a1, hp.a2, hp.rhs) for hp in planes[:2]]
    assert competitor == [(F(10), F(10), F(5)), (F(-8), F(12), F(2))]
    # the list closes with the three simplex bounds
    assert [(hp.a1, hp.a2, hp.rhs) for hp in planes[2:]] == [
        (F(-1), F(0), F(0)),
        (F(0), F(-1), F(0)),
        (F(1), F(1), F(1)),
    ]


def test_uniform_shift_gives_a_trivial_halfplane():
    y = (F(1), F(2), F(3))
    planes = component_halfplanes(y, [(F(2), F(3), F(4))])
    assert planes[0].is_trivial()
    assert planes[0].rhs == 1  # 0 <= 1, satisfied everywhere


def test_component_vertices_known_polygons():
    others = [(F(0), F(5), F(5)), (F(5), F(10), F(0)), (F(15), F(0), F(2))]
    y = (F(5), F(10), F(0))
    poly = component_vertices(y, [o for o in others if o != y])
    assert poly.vertices == (
        (F(0), F(0)),
        (F(1, 2), F(0)),
        (F(1, 5), F(3, 10)),
        (F(0), F(1, 6)),
    )
    y = (F(0), F(5), F(5))
    poly = component_vertices(y, [o for o in others if o != y])
    assert poly.vertices == (
        (F(1, 5), F(3, 10)),
        (F(1, 2), F(0)),
        (F(1), F(0)),
        (F(1, 4), F(3, 4)),
    )


def test_dominated_far_competitor_leaves_the_full_simplex():
    y = (F(0), F(0), F(0))
    poly = component_vertices(y, [(F(10), F(10), F(10))])
    assert poly.vertices == simplex_triangle().vertices


def test_hrep_dimensions_and_membership(example2):
    t = build_tolp(example2)
    y = (F(5), F(10), F(0))
    h = component_hrep(t, y)
    assert len(h.P) == t.n + 4
    assert all(len(row) == h.m + 3 for row in h.P)
    assert len(h.q) == t.n + 4
    assert hrep_feasible_at(h, (F(1, 4), F(1, 4), F(1, 2)))
    assert not hrep_feasible_at(h, (F(1, 3), F(1, 3), F(1, 3)))


def test_hrep_projection_matches_the_polygon_on_a_grid(example2):
    """The lifted system and the half-plane polygon must carve out the
    same region; compare them pointwise on a rational grid."""
    t = build_tolp(example2)
    dec = decompose(t)
    step = 6
    grid = [
        (F(a, step), F(b, step))
        for a in range(step + 1)
        for b in range(step + 1 - a)
    ]
    for entry, poly in zip(dec.images, dec.components):
        h = component_hrep(t, entry.image)
        for w1, w2 in grid:
            lifted = (w1, w2, 1 - w1 - w2)
            assert hrep_feasible_at(h, lifted) == poly.contains((w1, w2))
