"""Shared fixtures of the angcov test suite."""

# Third Party
import numpy as np
import pytest

# Local
from angcov.coverage.instance import Instance
from angcov.geometry.polygons import PolygonEnv
from angcov.geometry.primitives import Point2


def grid_points(rng, count, size=10.0, start_id=0):
    """Distinct points on the 1e-3 grid of the square [0, size]^2."""
    seen = set()
    points = []
    while len(points) < count:
        x, y = (int(v) for v in rng.integers(0, int(size * 1000) + 1, size=2))
        if (x, y) in seen:
            continue
        seen.add((x, y))
        points.append(Point2(x / 1000, y / 1000, start_id + len(points)))
    return points


#============================================
@pytest.fixture
def l_hexagon():
    return PolygonEnv([(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)])


#============================================
@pytest.fixture
def square_with_hole():
    return PolygonEnv([(0, 0), (10, 0), (10, 10), (0, 10)], [[(4, 4), (4, 6), (6, 6), (6, 4)]])


#============================================
@pytest.fixture
def cross_instance():
    """One target at the origin with sensors on both axes."""
    sensors = [Point2(1, 0, 0), Point2(0, 1, 1), Point2(-1, 0, 2), Point2(0, -2, 3)]
    return Instance("ang", sensors, [Point2(0, 0, 0)], np.pi / 3, delta=2.0)
