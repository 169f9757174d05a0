#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the double wedges, their merge, the double sectors, the two-disk characterization
of the coverage region and the decomposition of a double wedge into axis-parallel parts.

A double wedge is stored as an interval of line directions modulo pi: the axis phi and the half-width w.
A point p belongs to it when the direction of apex -> p lies within w of phi modulo pi.
"""
import math
import logging

import numpy as np

from .. import errors
from . import primitives as prim

logger = logging.getLogger(__name__)

FRAME_ROTATIONS = (0.0, math.pi / 3, -math.pi / 3)


def angular_distance_mod_pi(a, b):
    """ Returns the distance in [0, pi/2] between the line directions a and b. """
    diff = (a - b) % math.pi
    return min(diff, math.pi - diff)


class DoubleWedge:
    """
    Two opposite wedges sharing an apex.

    Attributes
    ----------
    apex : Point2
        The common apex of both wedges.
    axis : float
        The bisecting line direction, reduced to [0, pi).
    half_width : float
        The half central angle w in [0, pi/2] of each wedge.
    """
    def __init__(self, apex, axis, half_width):
        if half_width < -prim.ANGLE_TOL or half_width > math.pi / 2 + prim.ANGLE_TOL:
            raise errors.BadParams("The half-width {} is outside [0, pi/2]".format(half_width))
        self.apex = apex
        self.axis = axis % math.pi
        self.half_width = min(max(half_width, 0.0), math.pi / 2)

    @property
    def central_angle(self):
        return 2 * self.half_width

    def is_full(self):
        return self.half_width >= math.pi / 2 - prim.ANGLE_TOL

    def contains(self, p):
        """ Membership of a point. The apex itself is a member by convention. """
        if p.coincides(self.apex):
            return True
        psi = prim.direction(self.apex, p)
        return angular_distance_mod_pi(psi, self.axis) <= self.half_width + prim.ANGLE_TOL

    def contains_many(self, xy):
        """ Vectorized membership of the rows of an (n, 2) coordinate array. """
        vec = np.asarray(xy, dtype=float) - np.array([self.apex.x, self.apex.y])
        if len(vec) == 0:
            return np.zeros(0, dtype=bool)
        at_apex = np.hypot(vec[:, 0], vec[:, 1]) <= prim.LENGTH_TOL
        diff = np.mod(np.arctan2(vec[:, 1], vec[:, 0]) - self.axis, math.pi)
        dist = np.minimum(diff, math.pi - diff)
        return at_apex | (dist <= self.half_width + prim.ANGLE_TOL)

    def interval(self):
        """ Returns the direction interval (low, high) with low = axis - w. """
        return self.axis - self.half_width, self.axis + self.half_width

    def __eq__(self, other):
        if not isinstance(other, DoubleWedge):
            return NotImplemented
        return (self.apex.coincides(other.apex)
                and angular_distance_mod_pi(self.axis, other.axis) <= prim.ANGLE_TOL
                and abs(self.half_width - other.half_width) <= prim.ANGLE_TOL)

    def __repr__(self):
        return "DoubleWedge(apex={!r}, axis={:.6f}, half_width={:.6f})".format(self.apex, self.axis, self.half_width)


def double_wedge(t, s, beta):
    """
    Builds the double wedge of the partners p of s such that (s, p) beta-covers t.

    Parameters
    ----------
    t : Point2
        The target, which becomes the apex.
    s : Point2
        The fixed sensor.
    beta : float
        The coverage angle in [0, pi/2].

    Returns
    -------
    DoubleWedge
        The double wedge with axis perpendicular to t -> s and half-width pi/2 - beta.
    """
    if s.coincides(t):
        raise errors.CoincidentPoints("The sensor {} coincides with the target {}".format(s, t))
    if beta < -prim.ANGLE_TOL or beta > math.pi / 2 + prim.ANGLE_TOL:
        raise errors.BadParams("The angle {} is outside [0, pi/2]".format(beta))
    axis = prim.direction(t, s) + math.pi / 2
    return DoubleWedge(t, axis, math.pi / 2 - beta)


def merge_double_wedges(first, second):
    """
    Returns the smallest double wedge containing both inputs.

    The inputs must share the apex and their direction intervals must overlap modulo pi, in which case
    the result is exactly their union.

    Raises
    ------
    DisjointWedges
        If the intervals do not overlap.
    """
    if not first.apex.coincides(second.apex):
        raise errors.BadParams("Double wedges with different apexes can not be merged")
    offset = (second.axis - first.axis + math.pi / 2) % math.pi - math.pi / 2
    w1, w2 = first.half_width, second.half_width
    if abs(offset) > w1 + w2 + prim.ANGLE_TOL:
        raise errors.DisjointWedges("Intervals at axes {:.6f} and {:.6f} do not overlap".format(first.axis, second.axis))
    low = min(-w1, offset - w2)
    high = max(w1, offset + w2)
    if high - low >= math.pi - prim.ANGLE_TOL:
        return DoubleWedge(first.apex, first.axis, math.pi / 2)
    return DoubleWedge(first.apex, first.axis + (low + high) / 2, (high - low) / 2)


def in_double_sector(dw, radius, p):
    """ True iff p is in the double wedge and within the closed disk of the given radius around its apex. """
    if radius <= 0:
        raise errors.BadParams("The radius must be positive, got {}".format(radius))
    return p.dist(dw.apex) <= radius + prim.LENGTH_TOL and dw.contains(p)


def coverage_disks(s1, s2, alpha):
    """
    Returns the two disks whose symmetric difference is the set of points alpha-covered by (s1, s2).

    Both disks have radius d(s1, s2) / (2 sin(alpha)) and pass through s1 and s2.
    The first center lies to the left of s1 -> s2.

    Returns
    -------
    center1 : Point2
    center2 : Point2
    radius : float

    Raises
    ------
    ZeroAngle
        If alpha is zero. The covered region is then the plane minus the line through s1 and s2.
    """
    if s1.coincides(s2):
        raise errors.CoincidentPoints("The sensors {} and {} coincide".format(s1, s2))
    if alpha <= 0:
        raise errors.ZeroAngle("The coverage disks diverge for a zero angle")
    if alpha > math.pi / 2 + prim.ANGLE_TOL:
        raise errors.BadParams("The angle {} is above pi/2".format(alpha))
    dist = s1.dist(s2)
    radius = dist / (2 * math.sin(min(alpha, math.pi / 2)))
    offset = math.sqrt(max(0.0, radius * radius - dist * dist / 4))
    mid_x, mid_y = (s1.x + s2.x) / 2, (s1.y + s2.y) / 2
    nx_, ny_ = -(s2.y - s1.y) / dist, (s2.x - s1.x) / dist
    return (prim.Point2(mid_x + offset * nx_, mid_y + offset * ny_),
            prim.Point2(mid_x - offset * nx_, mid_y - offset * ny_),
            radius)


def in_symmetric_difference(p, center1, center2, radius):
    """ True iff p lies in exactly one of the two closed disks. """
    in_first = p.dist(center1) <= radius
    in_second = p.dist(center2) <= radius
    return in_first != in_second


def split_at_axes(low, high, rotation=0.0):
    """
    Cuts the direction interval [low, high] at the coordinate axes of the frame rotated by rotation.

    Returns
    -------
    list of (float, float)
        The consecutive parts, in frame coordinates.
    """
    quarter = math.pi / 2
    low, high = low - rotation, high - rotation
    parts = []
    start = low
    cut = (math.floor(low / quarter + prim.ANGLE_TOL) + 1) * quarter
    while cut < high - prim.ANGLE_TOL:
        parts.append((start, cut))
        start = cut
        cut += quarter
    parts.append((start, high))
    return parts


def frame_parts_ok(parts, threshold):
    """ True iff every part is at most the threshold wide or is a full quadrant. """
    for low, high in parts:
        width = high - low
        if width > threshold + prim.ANGLE_TOL and abs(width - math.pi / 2) > prim.ANGLE_TOL:
            return False
    return True


def choose_frame(dw, threshold=math.pi / 3):
    """
    Picks the coordinate frame in which the double wedge splits into axis-parallel parts that are either
    at most threshold wide or full quadrants.

    The frames are rotated by 0, +pi/3 and -pi/3. When several frames qualify the lowest index wins;
    when none does, frame 0 is used and a warning is logged.

    Returns
    -------
    int
        The index of the chosen frame in FRAME_ROTATIONS. The parts themselves are
        split_at_axes(*dw.interval(), FRAME_ROTATIONS[index]).
    """
    low, high = dw.interval()
    for index, rotation in enumerate(FRAME_ROTATIONS):
        if frame_parts_ok(split_at_axes(low, high, rotation), threshold):
            return index
    logger.warning("No frame splits %r into parts of width <= %.4f or pi/2", dw, threshold)
    return 0
