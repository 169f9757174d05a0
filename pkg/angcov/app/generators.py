#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the random instance generators. Coordinates are integers scaled by 1e-3, so the orientation
predicates stay well conditioned, and the output only depends on (kind, parameters, seed).
"""
import math
import logging

import numpy as np

from .. import errors
from ..coverage.instance import Instance
from ..coverage import framework as fw
from ..geometry.polygons import PolygonEnv
from ..geometry.primitives import Point2

logger = logging.getLogger(__name__)

KINDS = ("uniform", "grid", "circle", "polygon-corridor")
SCALE = 1e-3


def corridor_polygon(size):
    """ An L-shaped corridor inside the square [0, size]^2 with arms of width size/3. """
    arm = size / 3
    return PolygonEnv([(0, 0), (size, 0), (size, arm), (arm, arm), (arm, size), (0, size)])


def corridor_region(size):
    """ The target region of the corridor: the L shrunk by a sixth of the arm width. """
    arm = size / 3
    gap = arm / 6
    coords = [(gap, gap), (size - gap, gap), (size - gap, arm - gap), (arm - gap, arm - gap), (arm - gap, size - gap),
              (gap, size - gap)]
    return PolygonEnv([(round(x, 3), round(y, 3)) for x, y in coords])


def _grid_point(rng, low_x, high_x, low_y, high_y):
    x = rng.integers(round(low_x / SCALE), round(high_x / SCALE) + 1)
    y = rng.integers(round(low_y / SCALE), round(high_y / SCALE) + 1)
    return round(float(x) * SCALE, 3), round(float(y) * SCALE, 3)


class _Sampler:
    """ Draws distinct grid points from a region. """
    def __init__(self, rng, size, env=None, center=None, disk_radius=None):
        self.rng = rng
        self.size = size
        self.env = env
        self.center = center
        self.disk_radius = disk_radius
        self.used = set()

    def accepts(self, xy):
        if xy in self.used:
            return False
        if self.env is not None and not self.env.contains(Point2(*xy)):
            return False
        if self.center is not None and math.hypot(xy[0] - self.center[0], xy[1] - self.center[1]) > self.disk_radius:
            return False
        return True

    def draw(self, max_attempts=10000):
        for _ in range(max_attempts):
            xy = _grid_point(self.rng, 0, self.size, 0, self.size)
            if self.accepts(xy):
                self.used.add(xy)
                return xy
        raise errors.BadParams("Could not place a point after {} attempts".format(max_attempts))


def _sensor_coords(kind, m, size, rng, sampler):
    if kind == "grid":
        side = max(1, math.ceil(math.sqrt(m)))
        step = size / max(1, side - 1) if side > 1 else 0.0
        coords = []
        for k in range(m):
            xy = (round(round((k % side) * step / SCALE) * SCALE, 3), round(round((k // side) * step / SCALE) * SCALE, 3))
            coords.append(xy)
            sampler.used.add(xy)
        return coords
    if kind == "circle":
        radius = 0.45 * size
        coords = []
        for k in range(m):
            angle = 2 * math.pi * k / m
            xy = (round(round((size / 2 + radius * math.cos(angle)) / SCALE) * SCALE, 3),
                  round(round((size / 2 + radius * math.sin(angle)) / SCALE) * SCALE, 3))
            coords.append(xy)
            sampler.used.add(xy)
        return coords
    return [sampler.draw() for _ in range(m)]


def gen(kind="uniform", m=20, n=10, seed=0, variant=None, alpha=math.pi / 6, delta=2.0, radius=None, size=10.0,
        feasible=True, max_attempts=200):
    """
    Generates a random instance.

    Parameters
    ----------
    kind : str, optional
        "uniform" (points uniform in the square), "grid" (sensors on a regular grid), "circle" (sensors equally
        spaced on a circle, targets inside it) or "polygon-corridor" (an L-shaped corridor with the targets in a
        narrower L region, artang only).
    m : int, optional
        The number of sensors.
    n : int, optional
        The number of targets.
    seed : int, optional
        The seed of the generator.
    variant : str, optional
        The variant. The default is "artang" for the corridor and "ang" otherwise.
    alpha : float, optional
        The coverage angle.
    delta : float, optional
        The approximation parameter.
    radius : float, optional
        The sensing radius of the angdist variant. The default is size/3.
    size : float, optional
        The side of the bounding square.
    feasible : bool, optional
        Redraw every target the full sensor set can not alpha-cover. The default is True.
    max_attempts : int, optional
        The redraws allowed per target.

    Returns
    -------
    Instance
        The instance, whose provenance records the kind, the seed and the parameters.

    Raises
    ------
    BadParams
        If the parameters are invalid or no feasible target could be placed.
    """
    if kind not in KINDS:
        raise errors.BadParams("Unknown generator kind {!r}, expected one of {}".format(kind, KINDS))
    if m < 0 or n < 0 or size <= 0:
        raise errors.BadParams("m, n must be non-negative and size positive")
    if variant is None:
        variant = "artang" if kind == "polygon-corridor" else "ang"
    if kind == "polygon-corridor" and variant != "artang":
        raise errors.BadParams("The corridor generator produces artang instances")
    if variant == "angdist" and radius is None:
        radius = size / 3
    rng = np.random.default_rng(seed)
    env = corridor_polygon(size) if kind == "polygon-corridor" else None
    if variant == "artang" and env is None:
        env = PolygonEnv([(0, 0), (size, 0), (size, size), (0, size)])
    sampler = _Sampler(rng, size, env=env)
    sensors = [Point2(x, y, idx) for idx, (x, y) in enumerate(_sensor_coords(kind, m, size, rng, sampler))]
    region = None
    if kind == "circle":
        sampler.center, sampler.disk_radius = (size / 2, size / 2), 0.45 * size
    if kind == "polygon-corridor":
        region = corridor_region(size)
        sampler.env = region
    provenance = {"kind": kind, "seed": seed, "m": m, "n": n, "size": size, "feasible": feasible}
    base = Instance(variant, sensors, [], alpha, delta, radius, env, region, provenance)
    targets = []
    for idx in range(n):
        for _ in range(max_attempts):
            xy = sampler.draw()
            candidate = Point2(xy[0], xy[1], idx)
            if not feasible or _coverable(base, candidate):
                targets.append(candidate)
                break
        else:
            raise errors.BadParams("No feasible position found for target {} after {} attempts".format(idx,
                                                                                                     max_attempts))
    instance = Instance(variant, sensors, targets, alpha, delta, radius, env, region, provenance)
    logger.debug("Generated %r", instance)
    return instance


def _coverable(base, target):
    single = Instance(base.variant, base.sensors, [target], base.alpha, base.delta, base.radius, base.env)
    report = fw.verify_solution(single, [p.id for p in base.sensors], base.alpha)
    return report.passed
