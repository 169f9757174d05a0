"""Tests for angcov.geometry.wedges."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest

# Local
from angcov import errors
from angcov.geometry import primitives as prim
from angcov.geometry import wedges as wg
from angcov.geometry.primitives import Point2

ORIGIN = Point2(0, 0)


def _directions(count=3600):
    angles = np.arange(count) * math.pi / count
    return angles, np.column_stack([np.cos(angles), np.sin(angles)])


def _near_boundary(angles, dw, band=1e-6):
    low, high = dw.interval()
    near = np.zeros(len(angles), dtype=bool)
    for edge in (low, high):
        diff = np.mod(angles - edge, math.pi)
        near |= np.minimum(diff, math.pi - diff) <= band
    return near


#============================================
def test_double_wedge_central_angle():
    assert wg.double_wedge(ORIGIN, Point2(1, 0), math.pi / 4).central_angle == pytest.approx(math.pi / 2)


#============================================
def test_double_wedge_zero_angle_is_full():
    dw = wg.double_wedge(ORIGIN, Point2(1, 0), 0.0)
    assert dw.half_width == pytest.approx(math.pi / 2)
    assert dw.is_full()
    assert dw.contains(Point2(0.3, -4))


#============================================
def test_double_wedge_membership_example():
    dw = wg.double_wedge(ORIGIN, Point2(1, 0), math.pi / 3)
    assert dw.contains(Point2(0, 5))
    assert not dw.contains(Point2(5, 1))
    assert dw.contains(ORIGIN)


#============================================
def test_double_wedge_rejects_coincident_sensor():
    with pytest.raises(errors.CoincidentPoints):
        wg.double_wedge(ORIGIN, Point2(0, 0), 0.5)


#============================================
def test_double_wedge_matches_coverage_predicate():
    rng = np.random.default_rng(17)
    for _ in range(100):
        t = Point2(*rng.uniform(-3, 3, size=2))
        s = Point2(*rng.uniform(-3, 3, size=2))
        beta = rng.uniform(0, math.pi / 2)
        dw = wg.double_wedge(t, s, beta)
        xy = rng.uniform(-5, 5, size=(100, 2))
        inside = dw.contains_many(xy)
        for row, (x, y) in enumerate(xy):
            p = Point2(x, y)
            if abs(prim.coverage_level(t, s, p) - beta) < 1e-6:
                continue
            assert inside[row] == prim.alpha_covers(s, p, t, beta)
            assert inside[row] == dw.contains(p)


#============================================
def test_merge_identical_wedges():
    dw = wg.DoubleWedge(ORIGIN, 0.4, 0.3)
    assert wg.merge_double_wedges(dw, dw) == dw


#============================================
def test_merge_width_example():
    # alpha = pi/3, epsilon = pi/12 and axes pi/6 apart
    width = math.pi / 2 - (math.pi / 3 - math.pi / 12)
    first = wg.DoubleWedge(ORIGIN, 0.0, width)
    second = wg.DoubleWedge(ORIGIN, math.pi / 6, width)
    merged = wg.merge_double_wedges(first, second)
    assert merged.central_angle == pytest.approx(2 * math.pi / 3)
    assert merged == wg.merge_double_wedges(second, first)


#============================================
def test_merge_across_the_wrap():
    merged = wg.merge_double_wedges(wg.DoubleWedge(ORIGIN, 0.05, 0.1), wg.DoubleWedge(ORIGIN, math.pi - 0.05, 0.1))
    assert wg.angular_distance_mod_pi(merged.axis, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert merged.half_width == pytest.approx(0.15)


#============================================
def test_merge_disjoint_wedges():
    with pytest.raises(errors.DisjointWedges):
        wg.merge_double_wedges(wg.DoubleWedge(ORIGIN, 0.0, 0.1), wg.DoubleWedge(ORIGIN, 1.0, 0.1))


#============================================
def test_merge_different_apexes():
    with pytest.raises(errors.BadParams):
        wg.merge_double_wedges(wg.DoubleWedge(ORIGIN, 0.0, 0.3), wg.DoubleWedge(Point2(1, 0), 0.0, 0.3))


#============================================
def test_merge_is_the_union():
    rng = np.random.default_rng(23)
    angles, xy = _directions()
    for _ in range(10000):
        w1, w2 = rng.uniform(0.05, math.pi / 2, size=2)
        reach = min(w1 + w2, math.pi / 2)
        first = wg.DoubleWedge(ORIGIN, rng.uniform(0, math.pi), w1)
        second = wg.DoubleWedge(ORIGIN, first.axis + rng.uniform(-reach, reach), w2)
        merged = wg.merge_double_wedges(first, second)
        skip = _near_boundary(angles, first) | _near_boundary(angles, second) | _near_boundary(angles, merged)
        union = first.contains_many(xy) | second.contains_many(xy)
        assert (merged.contains_many(xy)[~skip] == union[~skip]).all()
        assert merged.central_angle >= max(first.central_angle, second.central_angle) - 1e-12


#============================================
def test_merge_width_of_refinement_wedges():
    rng = np.random.default_rng(29)
    for _ in range(10000):
        level = rng.uniform(0.05, math.pi / 3)
        offset = rng.uniform(0, level)
        first = wg.DoubleWedge(ORIGIN, rng.uniform(0, math.pi), math.pi / 2 - level)
        second = wg.DoubleWedge(ORIGIN, first.axis + offset, math.pi / 2 - level)
        merged = wg.merge_double_wedges(first, second)
        assert merged.central_angle == pytest.approx(math.pi - 2 * level + offset)


#============================================
def test_in_double_sector():
    dw = wg.DoubleWedge(ORIGIN, math.pi / 2, 0.5)
    assert wg.in_double_sector(dw, 2.0, ORIGIN)
    assert wg.in_double_sector(dw, 2.0, Point2(0, 2))
    assert not wg.in_double_sector(dw, 2.0, Point2(0, 3))
    with pytest.raises(errors.BadParams):
        wg.in_double_sector(dw, 0.0, ORIGIN)


#============================================
def test_coverage_disks_example():
    c1, c2, radius = wg.coverage_disks(Point2(-1, 0), Point2(1, 0), math.pi / 6)
    assert radius == pytest.approx(2.0)
    assert (c1.x, c1.y) == pytest.approx((0.0, math.sqrt(3)))
    assert (c2.x, c2.y) == pytest.approx((0.0, -math.sqrt(3)))


#============================================
def test_coverage_disks_right_angle():
    c1, c2, radius = wg.coverage_disks(Point2(-1, 0), Point2(1, 0), math.pi / 2)
    assert radius == pytest.approx(1.0)
    assert (c1.x, c1.y) == pytest.approx((0.0, 0.0))
    assert (c2.x, c2.y) == pytest.approx((0.0, 0.0))


#============================================
def test_coverage_disks_zero_angle():
    with pytest.raises(errors.ZeroAngle):
        wg.coverage_disks(Point2(-1, 0), Point2(1, 0), 0.0)


#============================================
def test_symmetric_difference_matches_coverage():
    rng = np.random.default_rng(31)
    checked = 0
    for _ in range(10000):
        s1, s2 = Point2(*rng.uniform(-2, 2, size=2)), Point2(*rng.uniform(-2, 2, size=2))
        if s1.dist(s2) < 1e-3:
            continue
        alpha = rng.uniform(0.05, math.pi / 2 - 0.05)
        c1, c2, radius = wg.coverage_disks(s1, s2, alpha)
        p = Point2(*rng.uniform(-6, 6, size=2))
        if min(abs(p.dist(c1) - radius), abs(p.dist(c2) - radius), p.dist(s1), p.dist(s2)) < 1e-7:
            continue
        assert wg.in_symmetric_difference(p, c1, c2, radius) == prim.alpha_covers(s1, s2, p, alpha)
        checked += 1
    assert checked > 9500


#============================================
def test_split_at_axes():
    parts = wg.split_at_axes(0.2, 2.0)
    assert len(parts) == 2
    assert parts[0] == pytest.approx((0.2, math.pi / 2))
    assert parts[1] == pytest.approx((math.pi / 2, 2.0))


#============================================
def test_choose_frame_prefers_the_first_valid_frame():
    narrow = wg.DoubleWedge(ORIGIN, 0.5, 0.2)
    assert wg.choose_frame(narrow) == 0
    assert wg.split_at_axes(*narrow.interval()) == [pytest.approx((0.3, 0.7))]


#============================================
def test_choose_frame_rotates_when_needed():
    # [0.2, 1.4] has a 1.2 wide part in frame 0 but splits at pi/3 in the rotated frame
    dw = wg.DoubleWedge(ORIGIN, 0.8, 0.6)
    frame = wg.choose_frame(dw)
    assert frame == 1
    parts = wg.split_at_axes(*dw.interval(), wg.FRAME_ROTATIONS[frame])
    assert wg.frame_parts_ok(parts, math.pi / 3)
    assert not wg.frame_parts_ok(wg.split_at_axes(*dw.interval()), math.pi / 3)
    assert sum(high - low for low, high in parts) == pytest.approx(1.2)
