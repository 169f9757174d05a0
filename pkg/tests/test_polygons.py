"""Tests for angcov.geometry.polygons and angcov.geometry.enclosing."""

# Standard Library
import itertools
import math

# Third Party
import numpy as np
import pytest

# Local
from angcov import errors
from angcov.geometry import polygons as pg
from angcov.geometry.enclosing import smallest_enclosing_ball
from angcov.geometry.polygons import PolygonEnv
from angcov.geometry.primitives import Point2


#============================================
def test_polygon_is_oriented_counter_clockwise():
    env = PolygonEnv([(0, 0), (0, 4), (4, 4), (4, 0)])
    assert env.polygon.exterior.is_ccw
    assert env.h == 0


#============================================
def test_polygon_rejects_self_intersection():
    with pytest.raises(errors.BadParams):
        PolygonEnv([(0, 0), (2, 2), (2, 0), (0, 2)])


#============================================
def test_convex_polygon_sees_everything():
    env = PolygonEnv([(0, 0), (5, 0), (5, 5), (0, 5)])
    rng = np.random.default_rng(2)
    for _ in range(50):
        s, t = (Point2(*rng.uniform(0, 5, size=2)) for _ in range(2))
        assert pg.sees(s, t, env)


#============================================
def test_reflex_corner_blocks(l_hexagon):
    assert not pg.sees(Point2(3, 1), Point2(1, 3.5), l_hexagon)


#============================================
def test_grazing_the_reflex_corner_is_visible(l_hexagon):
    assert pg.sees(Point2(3, 1), Point2(1, 3), l_hexagon)


#============================================
def test_same_arm_is_visible(l_hexagon):
    assert pg.sees(Point2(1, 1), Point2(1, 3), l_hexagon)


#============================================
def test_running_along_the_boundary_is_visible(l_hexagon):
    assert pg.sees(Point2(2, 2), Point2(2, 4), l_hexagon)


#============================================
def test_sees_outside(l_hexagon):
    with pytest.raises(errors.OutsidePolygon):
        pg.sees(Point2(3, 3), Point2(1, 1), l_hexagon)


#============================================
def test_hole_blocks(square_with_hole):
    assert square_with_hole.h == 1
    assert not pg.sees(Point2(1, 5), Point2(9, 5), square_with_hole)
    assert pg.sees(Point2(1, 1), Point2(9, 1), square_with_hole)
    with pytest.raises(errors.OutsidePolygon):
        pg.sees(Point2(5, 5), Point2(1, 1), square_with_hole)


#============================================
def test_sees_is_symmetric(l_hexagon):
    rng = np.random.default_rng(4)
    points = []
    while len(points) < 30:
        p = Point2(*rng.uniform(0, 4, size=2))
        if l_hexagon.contains(p):
            points.append(p)
    for s, t in itertools.combinations(points, 2):
        assert pg.sees(s, t, l_hexagon) == pg.sees(t, s, l_hexagon)


#============================================
def test_visibility_matrix_matches_sees(square_with_hole):
    rng = np.random.default_rng(6)
    points = []
    while len(points) < 12:
        p = Point2(*rng.uniform(0, 10, size=2))
        if square_with_hole.contains(p):
            points.append(p)
    sources, sinks = points[:5], points[5:] + [points[0]]
    matrix = pg.visibility_matrix(square_with_hole, sources, sinks)
    assert matrix.shape == (5, 8)
    for i, s in enumerate(sources):
        for j, t in enumerate(sinks):
            assert matrix[i, j] == pg.sees(s, t, square_with_hole)


#============================================
def test_enclosing_ball_of_a_right_triangle():
    center, radius = smallest_enclosing_ball([Point2(0, 0), Point2(2, 0), Point2(1, 1)])
    assert (center.x, center.y) == pytest.approx((1.0, 0.0))
    assert radius == pytest.approx(1.0)


#============================================
def test_enclosing_ball_of_a_square():
    center, radius = smallest_enclosing_ball([Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2), Point2(1, 1)])
    assert (center.x, center.y) == pytest.approx((1.0, 1.0))
    assert radius == pytest.approx(math.sqrt(2))


#============================================
def test_enclosing_ball_of_random_points():
    rng = np.random.default_rng(8)
    for seed in range(20):
        points = [Point2(*rng.uniform(-10, 10, size=2)) for _ in range(40)]
        center, radius = smallest_enclosing_ball(points, seed=seed)
        assert max(p.dist(center) for p in points) <= radius + 1e-7
        diameter = max(p.dist(q) for p, q in itertools.combinations(points, 2))
        assert diameter / 2 <= radius + 1e-9
        assert radius <= diameter / math.sqrt(3) + 1e-9
        assert smallest_enclosing_ball(points, seed=seed + 1)[1] == pytest.approx(radius)


#============================================
def test_enclosing_ball_of_nothing():
    assert smallest_enclosing_ball([]) == (None, 0.0)
