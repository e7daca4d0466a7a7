import pytest
from hypothesis import given, strategies as st

from conftest import P, S
from fewnomials import (
    DimensionError,
    Polygon2,
    PolygonClass,
    classify_pair,
    edge_root_bound,
    is_pyramidal,
    minkowski_sum,
    mixed_volume_zero,
    newton_polygon,
)
from fewnomials.polytope import convex_hull, initial_form, minkowski_sum_brute, span_dimension

lattice = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
real_pt = st.tuples(st.floats(-3, 3), st.floats(-3, 3))


def test_hull_drops_interior_and_collinear():
    pts = [(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1)]
    assert convex_hull(pts) == [(0, 0), (2, 0), (2, 2), (0, 2)]


def test_degenerate_polygons():
    assert Polygon2.hull_of([(1, 1)]).kind is PolygonClass.POINT
    seg = Polygon2.hull_of([(0, 0), (1, 1), (2, 2)])
    assert seg.kind is PolygonClass.SEGMENT and seg.dimension == 1


def test_newton_polygon_requires_plane():
    with pytest.raises(DimensionError):
        newton_polygon(P((1, (1, 0, 0)), n=3))


@pytest.mark.parametrize(
    "F,cls",
    [
        (S(P((1, (2, 0)), (1, (0, 2)), (-25, (0, 0))), P((1, (1, 0)), (1, (0, 1)), (-7, (0, 0)))), PolygonClass.TRIANGLE),
        (S(P((1, (2, 0)), (-3, (1, 0)), (2, (0, 0))), P((1, (0, 2)), (-3, (0, 1)), (2, (0, 0)))), PolygonClass.QUADRILATERAL),
        (S(P((1, (0, 2)), (-7, (0, 1)), (12, (0, 0))), P((-1, (0, 0)), (1, (1, 1)), (-1, (2, 0)))), PolygonClass.PENTAGON),
    ],
)
def test_classify_small_pairs(F, cls):
    assert classify_pair(F) is cls


def test_classify_haas(haas):
    assert classify_pair(haas) is PolygonClass.HEXAGON_OR_MORE


@given(st.lists(lattice, min_size=1, max_size=8), st.lists(lattice, min_size=1, max_size=8))
def test_minkowski_matches_brute_force(a, b):
    A, B = Polygon2.hull_of(a), Polygon2.hull_of(b)
    assert minkowski_sum(A, B).same_as(minkowski_sum_brute(A, B))


@given(st.lists(real_pt, min_size=3, max_size=6), st.lists(real_pt, min_size=3, max_size=6))
def test_minkowski_edge_count_and_area(a, b):
    A, B = Polygon2.hull_of(a), Polygon2.hull_of(b)
    M = minkowski_sum(A, B)
    # edge directions of a sum are the union of the summands' directions
    assert len(M) <= len(A) + len(B)
    assert M.area() >= A.area() + B.area() - 1e-9


def test_mixed_volume_zero():
    # both supports on the same line: no isolated roots
    F = S(P((1, (1, 1)), (-1, (0, 0))), P((1, (2, 2)), (1, (1, 1)), (-3, (0, 0))))
    assert mixed_volume_zero(F)
    G = S(P((1, (1, 0)), (-1, (0, 0))), P((1, (0, 1)), (-1, (0, 0))))
    assert not mixed_volume_zero(G)


def test_span_dimension():
    assert span_dimension(P((1, (0, 0)), (1, (1, 2)), (1, (2, 4)))) == 1
    assert span_dimension(P((1, (0, 0)))) == 0


def test_pyramidal():
    lines = S(P((1, (2, 0)), (-3, (1, 0)), (2, (0, 0))), P((1, (0, 2)), (-3, (0, 1)), (2, (0, 0))))
    assert is_pyramidal(lines)


def test_haas_not_pyramidal(haas):
    assert not is_pyramidal(haas)


def test_initial_form_and_edge_bound():
    f = P((1, (0, 0)), (-3, (1, 0)), (2, (2, 0)), (5, (1, 1)))
    g = initial_form(f, (0, 1))
    assert g.m == 3
    assert edge_root_bound(f, (0, 1)) == 2
    with pytest.raises(ValueError):
        edge_root_bound(f, (1, 1))  # selects the vertex (0, 0)
