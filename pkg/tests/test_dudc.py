"""Tests for angcov.coverage.dudc."""

# Third Party
import numpy as np
import pytest

# Local
from angcov import errors
from angcov.coverage import dudc
from angcov.geometry.primitives import Point2
from conftest import grid_points


#============================================
def test_one_disk_covers_a_cluster():
    sensors = [Point2(0, 0, 0), Point2(5, 5, 1)]
    targets = [Point2(0.5, 0, 0), Point2(0, 0.5, 1), Point2(-0.5, 0, 2)]
    assert dudc.greedy_dudc(sensors, targets, 1.0) == [0]


#============================================
def test_ties_go_to_the_lowest_id():
    sensors = [Point2(1, 0, 3), Point2(-1, 0, 2)]
    assert dudc.greedy_dudc(sensors, [Point2(0, 0, 0)], 1.0) == [2]


#============================================
def test_two_clusters_need_two_disks():
    sensors = [Point2(0, 0, 0), Point2(10, 0, 1), Point2(5, 0, 2)]
    targets = [Point2(0, 1, 0), Point2(10, 1, 1)]
    assert dudc.greedy_dudc(sensors, targets, 1.5) == [0, 1]


#============================================
def test_far_target_is_infeasible():
    with pytest.raises(errors.Infeasible) as info:
        dudc.greedy_dudc([Point2(0, 0, 0)], [Point2(0, 0.5, 0), Point2(3, 0, 7)], 1.0)
    assert info.value.target_id == 7


#============================================
def test_no_targets():
    assert dudc.greedy_dudc([Point2(0, 0, 0)], [], 1.0) == []
    assert dudc.verify_dudc([Point2(0, 0, 0)], [], [], 1.0) == (True, None, 0.0)


#============================================
def test_verify_reports_the_farthest_target():
    sensors = [Point2(0, 0, 0), Point2(4, 0, 1)]
    targets = [Point2(1, 0, 0), Point2(0, 2, 1)]
    passed, farthest, distance = dudc.verify_dudc(sensors, [0], targets, 1.5)
    assert not passed
    assert farthest == 1
    assert distance == pytest.approx(2.0)
    assert dudc.verify_dudc(sensors, [], targets, 1.5)[2] == float("inf")


#============================================
@pytest.mark.parametrize("seed", range(10))
def test_greedy_cover_is_valid(seed):
    rng = np.random.default_rng(seed)
    points = grid_points(rng, 60)
    sensors, targets = points[:40], [Point2(p.x, p.y, k) for k, p in enumerate(points[40:])]
    radius = 3.0
    try:
        chosen = dudc.greedy_dudc(sensors, targets, radius)
    except errors.Infeasible:
        assert any(min(s.dist(t) for s in sensors) > radius for t in targets)
        return
    assert dudc.verify_dudc(sensors, chosen, targets, radius)[0]
    assert len(chosen) <= len(targets)
