#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the weighted range spaces over sensor ground sets and their construction
from the targets that a sensor set does not cover yet.
"""
import logging

import numpy as np

from .. import errors
from ..geometry import enclosing
from ..geometry import primitives as prim
from ..geometry import wedges as wg

logger = logging.getLogger(__name__)


class Range:
    """
    A range of the range space: the sensors that can complete the coverage of one target.

    Attributes
    ----------
    target_id : int
        The id of the target the range belongs to.
    members : list
        The sorted ids of the sensors in the range.
    wedge : DoubleWedge
        The double wedge around the target, or None for a pure visibility range.
    radius : float
        The radius of the double sector, or None when the distance is not constrained.
    visibility : bool
        True if the members are filtered by visibility from the target.
    pair : tuple
        The ids of the sensors that generated the wedge (one id in a seed round).
    extended : list
        The sorted ids of the members of the extension (same wedge, larger radius), or None.
    """
    def __init__(self, target_id, members, wedge=None, radius=None, visibility=False, pair=None, extended=None):
        self.target_id = target_id
        self.members = sorted(set(members))
        self.wedge = wedge
        self.radius = radius
        self.visibility = visibility
        self.pair = tuple() if pair is None else tuple(pair)
        self.extended = None if extended is None else sorted(set(extended))

    def hit_members(self):
        """ The members a hitting set has to intersect: the extension if there is one. """
        return self.members if self.extended is None else self.extended

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "Range(target={}, size={}, pair={})".format(self.target_id, len(self.members), self.pair)


class RangeSpace:
    """
    A weighted ground set of sensors together with a list of ranges.

    Attributes
    ----------
    ground : list
        The ground sensors as Point2, sorted by id.
    ids : numpy.ndarray
        The ids of the ground sensors, in the same order.
    weights : numpy.ndarray
        The weight of every ground sensor.
    ranges : list
        The ranges, sorted by target id.
    vc_bound : int
        The VC-dimension bound used by the sampling nets.
    extension_radius : float
        The radius of the range extensions that the hitting sets must hit, or None.
    """
    def __init__(self, ground, ranges=None, weights=None, vc_bound=4, extension_radius=None):
        self.ground = sorted(ground, key=lambda p: p.id)
        self.ids = np.array([p.id for p in self.ground], dtype=int)
        self.index = {p.id: idx for idx, p in enumerate(self.ground)}
        self.xy = prim.as_array(self.ground)
        self.weights = np.ones(len(self.ground)) if weights is None else np.asarray(weights, dtype=float)
        self.ranges = sorted(list() if ranges is None else ranges, key=lambda r: r.target_id)
        self.vc_bound = vc_bound
        self.extension_radius = extension_radius
        self._member_rows = None
        self._extent = None

    def __len__(self):
        return len(self.ground)

    def point(self, sensor_id):
        return self.ground[self.index[sensor_id]]

    def rows(self, ids):
        return np.array([self.index[i] for i in ids], dtype=int)

    def member_rows(self):
        """ The rows of the members of every range, cached. """
        if self._member_rows is None:
            self._member_rows = [self.rows(r.members) for r in self.ranges]
        return self._member_rows

    def extent(self):
        """ The diameter R_I of the smallest ball enclosing the ground, computed once per range space. """
        if self._extent is None:
            _, radius = enclosing.smallest_enclosing_ball(self.ground)
            self._extent = 2 * radius
        return self._extent

    def total_weight(self):
        return float(self.weights.sum())

    def range_weight(self, idx):
        return float(self.weights[self.member_rows()[idx]].sum())

    def heavy_ranges(self, epsilon):
        """ Returns the indices of the ranges whose weight is at least epsilon times the total weight. """
        threshold = epsilon * self.total_weight()
        return [idx for idx in range(len(self.ranges)) if self.range_weight(idx) >= threshold * (1 - 1e-12)]

    def reset_weights(self):
        self.weights = np.ones(len(self.ground))

    def double_weights(self, ids):
        self.weights[self.rows(ids)] *= 2

    def is_hit(self, idx, selected):
        """ True if the selected ids intersect the hit members of the range. """
        return any(i in selected for i in self.ranges[idx].hit_members())

    def unhit_ranges(self, selected):
        selected = set(selected)
        return [idx for idx in range(len(self.ranges)) if not self.is_hit(idx, selected)]

    def restrict(self, ground_ids, ranges):
        """ Builds the sub range space over a subset of the ground with a subset of the ranges. """
        ground_ids = set(ground_ids)
        ground = [p for p in self.ground if p.id in ground_ids]
        restricted = []
        for r in ranges:
            restricted.append(Range(r.target_id,
                                    [i for i in r.members if i in ground_ids],
                                    wedge=r.wedge, radius=r.radius, visibility=r.visibility, pair=r.pair,
                                    extended=None if r.extended is None else [i for i in r.extended if i in ground_ids]))
        return RangeSpace(ground, restricted, vc_bound=self.vc_bound, extension_radius=self.extension_radius)

    def __repr__(self):
        return "RangeSpace(ground={}, ranges={})".format(len(self.ground), len(self.ranges))


class DistancePolicy:
    """
    The distance constraints of a refinement round.

    Attributes
    ----------
    range_radius : float
        The radius of the double sectors, or None.
    bound : float
        The largest distance between a target and a sensor of its witness pair, or None.
    extension : float
        The radius of the extensions that the hitting set has to hit, or None.
    """
    def __init__(self, range_radius=None, bound=None, extension=None):
        self.range_radius = range_radius
        self.bound = bound
        self.extension = extension

    @classmethod
    def for_instance(cls, instance, relaxed=False):
        if instance.variant != "angdist":
            return cls()
        if relaxed:
            return cls(instance.radius, 3 * instance.radius, 3 * instance.radius)
        return cls(instance.radius, instance.radius)

    def __repr__(self):
        return "DistancePolicy(range_radius={}, bound={}, extension={})".format(self.range_radius, self.bound,
                                                                                self.extension)


def _member_mask(instance, target_row, wedge, radius):
    mask = wedge.contains_many(instance.sensor_xy) if wedge is not None else np.ones(instance.m, dtype=bool)
    dist = instance.distances[:, target_row]
    mask &= dist > prim.LENGTH_TOL
    if radius is not None:
        mask &= dist <= radius + prim.LENGTH_TOL
    if instance.variant == "artang":
        mask &= instance.visibility[:, target_row]
    return mask


def first_covering_pair(instance, selected_rows, target_row, level, bound):
    """
    Returns the first pair of selected sensors in id order that level-covers the target under the
    distance bound and the visibility constraint, or None.
    """
    eligible = [row for row in selected_rows if instance.eligible(target_row, row, bound)]
    if len(eligible) < 2:
        return None
    eligible = sorted(eligible, key=lambda row: instance.sensors[row].id)
    covers = prim.pair_covers(instance.target_xy[target_row], instance.sensor_xy[eligible], level)
    hits = np.argwhere(np.triu(covers, k=1))
    if len(hits) == 0:
        return None
    i, j = hits[0]
    return eligible[i], eligible[j]


def build_ranges(instance, selected, target_ids, epsilon, policy=None, seed_round=False, vc_bound=4):
    """
    Builds the range space of the targets that the selected sensors do not cover at level alpha - epsilon.

    For every target the first eligible pair (s1, s2) of selected sensors that (alpha - 2 epsilon)-covers it
    generates the merged double wedge of double_wedge(t, s1, alpha - epsilon) and double_wedge(t, s2, alpha - epsilon).
    In a seed round the single lowest-id eligible sensor generates one double wedge. The members are the
    sensors in the wedge that satisfy the distance and visibility constraints.

    Parameters
    ----------
    instance : Instance
        The problem instance.
    selected : iterable
        The ids of the current sensor set S.
    target_ids : list
        The ids of the uncovered targets T'.
    epsilon : float
        The step of the round.
    policy : DistancePolicy, optional
        The distance constraints. The default has none.
    seed_round : bool, optional
        True in the first round, where S only guarantees an eligible sensor per target.
    vc_bound : int, optional
        The VC bound stored on the range space.

    Returns
    -------
    RangeSpace
        The range space over all the sensors of the instance.

    Raises
    ------
    PreconditionViolated
        If a target has no qualifying pair or sensor.
    Infeasible
        If a range is empty.
    """
    policy = DistancePolicy() if policy is None else policy
    level = instance.alpha - epsilon
    pair_level = max(0.0, instance.alpha - 2 * epsilon)
    selected_rows = sorted((instance.sensor_row(i) for i in selected), key=lambda row: instance.sensors[row].id)
    ranges = []
    for target_id in sorted(target_ids):
        target_row = instance.target_row(target_id)
        t = instance.targets[target_row]
        if seed_round:
            eligible = [row for row in selected_rows if instance.eligible(target_row, row, policy.bound)]
            if len(eligible) == 0:
                raise errors.PreconditionViolated("No selected sensor is eligible for target {}".format(target_id),
                                                  target_id)
            generators = [instance.sensors[eligible[0]]]
            wedge = wg.double_wedge(t, generators[0], level)
        else:
            pair = first_covering_pair(instance, selected_rows, target_row, pair_level, policy.bound)
            if pair is None:
                raise errors.PreconditionViolated(
                    "No selected pair {:.6f}-covers target {}".format(pair_level, target_id), target_id)
            generators = [instance.sensors[row] for row in pair]
            wedge = wg.merge_double_wedges(wg.double_wedge(t, generators[0], level),
                                           wg.double_wedge(t, generators[1], level))
        pair_ids = tuple(s.id for s in generators)
        mask = _member_mask(instance, target_row, wedge, policy.range_radius)
        members = [instance.sensors[row].id for row in np.flatnonzero(mask) if instance.sensors[row].id not in pair_ids]
        extended = None
        if policy.extension is not None:
            ext_mask = _member_mask(instance, target_row, wedge, policy.extension)
            extended = [instance.sensors[row].id for row in np.flatnonzero(ext_mask)
                        if instance.sensors[row].id not in pair_ids]
        if len(members) == 0:
            raise errors.Infeasible("No sensor can complete the coverage of target {}".format(target_id), target_id)
        ranges.append(Range(target_id, members, wedge=wedge, radius=policy.range_radius,
                            visibility=instance.variant == "artang", pair=pair_ids, extended=extended))
    logger.debug("Built %d ranges at level %.6f (seed round: %s)", len(ranges), level, seed_round)
    return RangeSpace(instance.sensors, ranges, vc_bound=vc_bound, extension_radius=policy.extension)


def visibility_ranges(instance, target_ids=None, vc_bound=4):
    """
    Builds the range space whose ranges are the sensors seeing each target.

    Raises
    ------
    Infeasible
        If no sensor sees some target.
    """
    target_ids = [t.id for t in instance.targets] if target_ids is None else target_ids
    ranges = []
    for target_id in sorted(target_ids):
        target_row = instance.target_row(target_id)
        mask = _member_mask(instance, target_row, None, None)
        members = [instance.sensors[row].id for row in np.flatnonzero(mask)]
        if len(members) == 0:
            raise errors.Infeasible("No sensor sees target {}".format(target_id), target_id)
        ranges.append(Range(target_id, members, visibility=True))
    return RangeSpace(instance.sensors, ranges, vc_bound=vc_bound)
