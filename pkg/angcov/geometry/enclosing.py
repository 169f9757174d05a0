#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the smallest enclosing circle, used to report the extent R_I of a point set.
"""
import math

import numpy as np

from . import primitives as prim


def _circle_two(a, b):
    cx, cy = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    return cx, cy, math.hypot(a[0] - cx, a[1] - cy)


def _circle_three(a, b, c):
    d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) <= 1e-18:
        # collinear, the widest pair spans the circle
        pairs = [_circle_two(a, b), _circle_two(a, c), _circle_two(b, c)]
        return max(pairs, key=lambda circle: circle[2])
    a2 = a[0] ** 2 + a[1] ** 2
    b2 = b[0] ** 2 + b[1] ** 2
    c2 = c[0] ** 2 + c[1] ** 2
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    return ux, uy, math.hypot(a[0] - ux, a[1] - uy)


def _inside(circle, p):
    return math.hypot(p[0] - circle[0], p[1] - circle[1]) <= circle[2] * (1 + 1e-12) + prim.LENGTH_TOL


def smallest_enclosing_ball(points, seed=0):
    """
    Computes the smallest circle enclosing the points with the randomized incremental method.

    Parameters
    ----------
    points : list
        A list of Point2.
    seed : int, optional
        The seed of the shuffle. The result does not depend on it up to rounding.

    Returns
    -------
    center : Point2
        The center of the circle, or None for an empty input.
    radius : float
        The radius of the circle.
    """
    if len(points) == 0:
        return None, 0.0
    xy = prim.as_array(points)
    order = np.random.default_rng(seed).permutation(len(xy))
    pts = [tuple(xy[i]) for i in order]
    circle = (pts[0][0], pts[0][1], 0.0)
    for i in range(1, len(pts)):
        if _inside(circle, pts[i]):
            continue
        circle = (pts[i][0], pts[i][1], 0.0)
        for j in range(i):
            if _inside(circle, pts[j]):
                continue
            circle = _circle_two(pts[i], pts[j])
            for k in range(j):
                if not _inside(circle, pts[k]):
                    circle = _circle_three(pts[i], pts[j], pts[k])
    return prim.Point2(circle[0], circle[1]), circle[2]
