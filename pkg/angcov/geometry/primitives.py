#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the planar point type and the angular coverage predicates.

A target t is beta-covered by a pair of sensors (s1, s2) when the angle s1 t s2 lies in [beta, pi - beta].
The predicate is decided on cosines: |cos(angle)| <= cos(beta) + ANGLE_TOL, evaluated in the squared form
(u . v)^2 <= c^2 |u|^2 |v|^2 so the hot path needs no inverse trigonometry.
"""
import math

import numpy as np

from .. import errors

ANGLE_TOL = 1e-9
LENGTH_TOL = 1e-9


class Point2:
    """
    A point in the plane. Sensors and targets are points with integer ids.

    Attributes
    ----------
    x : float
        The first coordinate.
    y : float
        The second coordinate.
    id : int
        The id of the point inside its point set, or None.
    """
    __slots__ = ("x", "y", "id")

    def __init__(self, x, y, id=None):
        self.x = float(x)
        self.y = float(y)
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise errors.BadParams("Point coordinates must be finite, got ({}, {})".format(x, y))
        self.id = id

    def xy(self):
        return self.x, self.y

    def dist(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)

    def coincides(self, other, tol=LENGTH_TOL):
        return self.dist(other) <= tol

    def __eq__(self, other):
        if not isinstance(other, Point2):
            return NotImplemented
        return self.x == other.x and self.y == other.y and self.id == other.id

    def __hash__(self):
        return hash((self.x, self.y, self.id))

    def __repr__(self):
        if self.id is None:
            return "Point2({}, {})".format(self.x, self.y)
        return "Point2({}, {}, id={})".format(self.x, self.y, self.id)


def as_array(points):
    """ Stacks the coordinates of a list of points into an (n, 2) array. """
    if len(points) == 0:
        return np.zeros((0, 2))
    return np.array([[p.x, p.y] for p in points], dtype=float)


def direction(origin, p):
    """ Returns the direction angle of the vector origin -> p in (-pi, pi]. """
    return math.atan2(p.y - origin.y, p.x - origin.x)


def _check_distinct(t, s1, s2):
    if s1.coincides(t) or s2.coincides(t):
        raise errors.CoincidentPoints("A sensor coincides with the target {}".format(t))
    if s1.coincides(s2):
        raise errors.CoincidentPoints("The sensors {} and {} coincide".format(s1, s2))


def _cosine(t, s1, s2):
    ux, uy = s1.x - t.x, s1.y - t.y
    vx, vy = s2.x - t.x, s2.y - t.y
    return (ux * vx + uy * vy) / (math.hypot(ux, uy) * math.hypot(vx, vy))


def angle_at(t, s1, s2):
    """
    Returns the angle s1 t s2 in [0, pi].

    Raises
    ------
    CoincidentPoints
        If a sensor coincides with the target or the two sensors coincide.
    """
    _check_distinct(t, s1, s2)
    return math.acos(min(1.0, max(-1.0, _cosine(t, s1, s2))))


def coverage_level(t, s1, s2):
    """ Returns the largest beta for which (s1, s2) beta-covers t, i.e. min(angle, pi - angle). """
    angle = angle_at(t, s1, s2)
    return min(angle, math.pi - angle)


def cos_bound(beta):
    """ The cosine threshold c = cos(beta) + ANGLE_TOL of the closed coverage interval. """
    return math.cos(beta) + ANGLE_TOL


def alpha_covers(s1, s2, t, alpha):
    """
    Decides whether the pair (s1, s2) alpha-covers the target t.

    Parameters
    ----------
    s1 : Point2
        The first sensor.
    s2 : Point2
        The second sensor.
    t : Point2
        The target.
    alpha : float
        The coverage angle in [0, pi/2].

    Returns
    -------
    bool
        True iff the angle s1 t s2 lies in [alpha, pi - alpha] up to the tolerance.

    Raises
    ------
    CoincidentPoints
        If a sensor coincides with the target or the two sensors coincide.
    """
    _check_distinct(t, s1, s2)
    c = cos_bound(alpha)
    if c >= 1.0:
        return True
    ux, uy = s1.x - t.x, s1.y - t.y
    vx, vy = s2.x - t.x, s2.y - t.y
    dot = ux * vx + uy * vy
    return dot * dot <= c * c * (ux * ux + uy * uy) * (vx * vx + vy * vy)


def gdop(s1, s2, t, mode="distance"):
    """
    Returns the geometric dilution of precision of the pair (s1, s2) at the target t.

    The distance-based value is 1/|sin(angle)| and the bearing-based value is d(s1, t) * d(s2, t) / |sin(angle)|.
    Collinear configurations return math.inf.
    """
    if mode not in ("distance", "bearing"):
        raise errors.BadParams("Unknown GDOP mode {!r}".format(mode))
    angle = angle_at(t, s1, s2)
    sine = abs(math.sin(angle))
    if sine <= ANGLE_TOL:
        return math.inf
    if mode == "distance":
        return 1.0 / sine
    return s1.dist(t) * s2.dist(t) / sine


def pair_cosines(target_xy, xy):
    """
    Computes the cosines of all the angles p_i t p_j for the points xy around a target.

    Returns
    -------
    cosines : numpy.ndarray
        An (n, n) matrix of cosines. Entries involving a point that coincides with the target,
        or a pair of coincident points, are set to nan.
    """
    vec = xy - np.asarray(target_xy, dtype=float)
    norms = np.hypot(vec[:, 0], vec[:, 1])
    with np.errstate(invalid="ignore", divide="ignore"):
        cosines = (vec @ vec.T) / np.outer(norms, norms)
    degenerate = norms <= LENGTH_TOL
    cosines[degenerate, :] = np.nan
    cosines[:, degenerate] = np.nan
    diff = xy[:, None, :] - xy[None, :, :]
    coincident = np.hypot(diff[..., 0], diff[..., 1]) <= LENGTH_TOL
    cosines[coincident] = np.nan
    return cosines


def pair_levels(target_xy, xy):
    """ Returns the (n, n) matrix of coverage levels min(angle, pi - angle), nan for degenerate pairs. """
    cosines = pair_cosines(target_xy, xy)
    return np.arccos(np.clip(np.abs(cosines), 0.0, 1.0))


def pair_covers(target_xy, xy, beta):
    """ Returns the (n, n) boolean matrix of pairs that beta-cover the target. Degenerate pairs are False. """
    cosines = pair_cosines(target_xy, xy)
    with np.errstate(invalid="ignore"):
        return np.abs(cosines) <= cos_bound(beta)
