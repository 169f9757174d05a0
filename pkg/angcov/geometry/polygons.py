#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the polygonal environment and the closed visibility predicate.
"""
import numpy as np
import shapely
from shapely.geometry import LineString, Point, Polygon
from shapely.geometry.polygon import orient

from .. import errors
from . import primitives as prim


class PolygonEnv:
    """
    A polygon with holes in which sensors see targets.

    Attributes
    ----------
    outer : list
        The vertices of the outer boundary as (x, y) tuples in counter-clockwise order.
    holes : list
        The vertex lists of the holes in clockwise order.
    polygon : shapely.geometry.Polygon
        The polygon used for the containment and visibility predicates.
    """
    def __init__(self, outer, holes=None):
        holes = list() if holes is None else holes
        if len(outer) < 3:
            raise errors.BadParams("The outer boundary needs at least three vertices")
        polygon = Polygon(outer, holes)
        if not polygon.is_valid:
            raise errors.BadParams("The polygon is not valid: {}".format(shapely.is_valid_reason(polygon)))
        self.polygon = orient(polygon, sign=1.0)
        self.outer = [tuple(c) for c in self.polygon.exterior.coords[:-1]]
        self.holes = [[tuple(c) for c in ring.coords[:-1]] for ring in self.polygon.interiors]
        shapely.prepare(self.polygon)

    @property
    def h(self):
        return len(self.holes)

    def contains(self, p):
        """ True iff p lies in the closed polygon. """
        return self.polygon.covers(Point(p.x, p.y))

    def contains_many(self, xy):
        """ Vectorized closed containment for an (n, 2) coordinate array. """
        xy = np.asarray(xy, dtype=float)
        if len(xy) == 0:
            return np.zeros(0, dtype=bool)
        return shapely.covers(self.polygon, shapely.points(xy))

    def bounds(self):
        return self.polygon.bounds

    def to_dict(self):
        return {"outer": [list(c) for c in self.outer], "holes": [[list(c) for c in ring] for ring in self.holes]}

    def __repr__(self):
        return "PolygonEnv({} vertices, {} holes)".format(len(self.outer), self.h)


def sees(s, t, env):
    """
    Decides whether s and t see each other inside the polygon.

    The segment st is closed: touching the boundary or running along it counts as visible.

    Raises
    ------
    OutsidePolygon
        If s or t lies outside the polygon.
    """
    for p in (s, t):
        if not env.contains(p):
            raise errors.OutsidePolygon("The point {} lies outside the polygon".format(p))
    if s.coincides(t):
        return True
    return env.polygon.covers(LineString([(s.x, s.y), (t.x, t.y)]))


def visibility_matrix(env, sources, sinks):
    """
    Computes the mutual visibility of two point lists.

    Parameters
    ----------
    env : PolygonEnv
        The environment.
    sources : list
        The points of the rows, for example the sensors.
    sinks : list
        The points of the columns, for example the targets.

    Returns
    -------
    numpy.ndarray
        A boolean (len(sources), len(sinks)) matrix.
    """
    src = prim.as_array(sources)
    dst = prim.as_array(sinks)
    for xy, points in ((src, sources), (dst, sinks)):
        inside = env.contains_many(xy)
        if not inside.all():
            raise errors.OutsidePolygon("The point {} lies outside the polygon".format(points[int(np.argmin(inside))]))
    if len(src) == 0 or len(dst) == 0:
        return np.zeros((len(src), len(dst)), dtype=bool)
    starts = np.repeat(src, len(dst), axis=0)
    ends = np.tile(dst, (len(src), 1))
    coords = np.stack([starts, ends], axis=1)
    same = np.hypot(*(starts - ends).T) <= prim.LENGTH_TOL
    coords[same, 1] += prim.LENGTH_TOL
    segments = shapely.linestrings(coords)
    visible = shapely.covers(env.polygon, segments) | same
    return visible.reshape(len(src), len(dst))
