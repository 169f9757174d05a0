"""Tests for angcov.nets.epsilon_nets."""

# Standard Library
import math

# Third Party
import numpy as np
import pytest

# Local
from angcov import errors
from angcov.geometry import enclosing
from angcov.geometry import wedges as wg
from angcov.geometry.primitives import Point2
from angcov.nets import epsilon_nets as en
from angcov.nets.range_space import Range, RangeSpace
from conftest import grid_points


def _wedge_space(seed, ground_size=60, num_ranges=40, min_width=math.pi / 6, radius=None):
    """Random double wedges (or double sectors with 3R extensions) over a random ground."""
    rng = np.random.default_rng(seed)
    ground = grid_points(rng, ground_size)
    xy = np.array([p.xy() for p in ground])
    ids = np.array([p.id for p in ground])
    ranges = []
    for k in range(num_ranges):
        apex = Point2(*rng.uniform(0, 10, size=2))
        dw = wg.DoubleWedge(apex, rng.uniform(0, math.pi), rng.uniform(min_width / 2, math.pi / 2))
        inside = dw.contains_many(xy)
        extended = None
        if radius is not None:
            dist = np.hypot(xy[:, 0] - apex.x, xy[:, 1] - apex.y)
            extended = [int(i) for i in ids[inside & (dist <= 3 * radius)]]
            inside &= dist <= radius
        members = [int(i) for i in ids[inside]]
        if len(members) == 0:
            continue
        ranges.append(Range(k, members, wedge=dw, radius=radius, extended=extended))
    weights = rng.uniform(0.5, 2.0, size=len(ground))
    return RangeSpace(ground, ranges, weights=weights, extension_radius=None if radius is None else 3 * radius)


#============================================
def test_slice_count():
    assert en.slice_count(0.1) == 40
    assert en.slice_count(0.3) == 14
    assert en.slice_count(1.0) == 4


#============================================
def test_weight_slices_split_by_height():
    ys = np.array([3.0, 2.0, 1.0, 0.0])
    slices = en.weight_slices(ys, np.arange(4), np.ones(4), 2)
    assert list(slices) == [0, 0, 1, 1]


#============================================
def test_hull_sequence_starts_at_the_top():
    xs = [0.0, 1.0, 1.0, 0.0, 0.5]
    ys = [0.0, 0.0, 1.0, 1.0, 0.5]
    assert en.hull_sequence(xs, ys, [0, 1, 2, 3, 4]) == [3, 0, 1, 2]


#============================================
def test_verify_net_reports_unhit_heavy_ranges():
    ground = [Point2(i, 0, i) for i in range(4)]
    rs = RangeSpace(ground, [Range(0, [0, 1]), Range(1, [2, 3]), Range(2, [3])])
    assert en.verify_net(rs, 0.5, [0]) == [1]
    assert en.verify_net(rs, 0.25, [0, 2]) == [2]
    assert en.verify_net(rs, 0.25, [1, 3]) == []


#============================================
def test_sampling_rejects_bad_epsilon():
    rs = _wedge_space(0)
    with pytest.raises(errors.BadParams):
        en.sample_epsilon_net(rs, 0.0)
    with pytest.raises(errors.BadParams):
        en.fat_wedge_epsilon_net(rs, 1.5)


#============================================
@pytest.mark.parametrize("epsilon", [0.05, 0.1, 0.2])
@pytest.mark.parametrize("seed", range(5))
def test_sampling_net_property(seed, epsilon):
    rs = _wedge_space(seed)
    net = en.sample_epsilon_net(rs, epsilon, seed=seed)
    assert en.verify_net(rs, epsilon, net.ids) == []
    assert net.kind == "sample"
    assert net.attempts >= 1


#============================================
def test_sampling_net_is_deterministic():
    rs = _wedge_space(3)
    assert en.sample_epsilon_net(rs, 0.1, seed=9).ids == en.sample_epsilon_net(rs, 0.1, seed=9).ids


#============================================
@pytest.mark.parametrize("epsilon", [0.05, 0.1, 0.2])
@pytest.mark.parametrize("seed", range(10))
def test_fat_wedge_net_property(seed, epsilon):
    rs = _wedge_space(seed)
    net = en.fat_wedge_epsilon_net(rs, epsilon)
    assert en.verify_net(rs, epsilon, net.ids) == []
    assert net.pre_fallback_size <= 4 * en.slice_count(epsilon)
    assert len(net) == net.pre_fallback_size + net.fallback_additions


#============================================
@pytest.mark.parametrize("epsilon", [0.05, 0.1, 0.2])
@pytest.mark.parametrize("seed", range(6))
def test_sector_net_hits_the_extensions(seed, epsilon):
    rs = _wedge_space(seed, radius=2.0)
    net = en.sector3r_epsilon_net(rs, epsilon, 2.0)
    assert en.verify_net(rs, epsilon, net.ids, extension_radius=6.0) == []
    assert net.extension_radius == pytest.approx(6.0)
    assert net.extent > 0
    for idx in rs.heavy_ranges(epsilon):
        rng = rs.ranges[idx]
        assert net.evidence[rng.target_id] in rng.extended
        assert net.evidence[rng.target_id] in net


#============================================
def test_sector_nets_share_the_enclosing_ball(monkeypatch):
    rs = _wedge_space(2, radius=2.0)
    calls = []
    original = enclosing.smallest_enclosing_ball

    def counting(points, seed=0):
        calls.append(len(points))
        return original(points, seed)

    monkeypatch.setattr(enclosing, "smallest_enclosing_ball", counting)
    first = en.sector3r_epsilon_net(rs, 0.1, 2.0)
    second = en.sector3r_epsilon_net(rs, 0.2, 2.0)
    assert calls == [len(rs.ground)]
    assert first.extent == second.extent == rs.extent()
    _, radius = original(rs.ground)
    assert rs.extent() == pytest.approx(2 * radius)


#============================================
def test_rotate_keeps_distances():
    xy = np.array([[1.0, 0.0], [0.0, 2.0]])
    rotated = en.rotate(xy, math.pi / 2)
    assert rotated[0] == pytest.approx([0.0, -1.0])
    assert rotated[1] == pytest.approx([2.0, 0.0])
