#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the shifting strategy for double sectors of radius R: the plane is cut into strips of
width l * 6R (and the strips into cells), every cell is solved with the reweighting solver over sector nets
hitting the 3R-extensions, and the best of the l * l shifts is kept.
"""
import math
import logging

import numpy as np

from .. import errors
from ..config import SolverConfig
from ..geometry import primitives as prim
from ..hitting import solvers as hs

logger = logging.getLogger(__name__)


class Strip:
    """
    One strip of a partition.

    Attributes
    ----------
    index : int
        The index of the strip along the axis.
    low : float
        The lower boundary coordinate.
    high : float
        The upper boundary coordinate.
    ranges : list
        The ranges whose center (target) lies in the strip.
    ground_ids : list
        The sorted ids of the ground elements within the strip padded by 3R on both sides.
    """
    def __init__(self, index, low, high, ranges, ground_ids):
        self.index = index
        self.low = low
        self.high = high
        self.ranges = ranges
        self.ground_ids = ground_ids

    def __repr__(self):
        return "Strip(index={}, [{:.3f}, {:.3f}), ranges={}, ground={})".format(self.index, self.low, self.high,
                                                                               len(self.ranges), len(self.ground_ids))


def strips(ground, ranges, l, radius, shift_index, axis=0):
    """
    Partitions the ranges into strips of width l * 6R shifted by shift_index * 6R.

    A range belongs to the strip containing its center. The ground of a strip is padded by 3R on each side,
    so it holds the 3R-extension of every range assigned to the strip.

    Parameters
    ----------
    ground : list
        The ground elements as Point2.
    ranges : list
        The ranges, each with a double wedge whose apex is its center.
    l : int
        The width factor, at least 2.
    radius : float
        The sector radius R.
    shift_index : int
        The shift in [0, l).
    axis : int, optional
        0 for vertical strips (cut along x), 1 for horizontal strips (cut along y).

    Returns
    -------
    list
        The Strip objects with at least one range, sorted by index.
    """
    if l < 2:
        raise errors.BadParams("The strip factor must be at least 2, got {}".format(l))
    if not 0 <= shift_index < l:
        raise errors.BadParams("The shift index must lie in [0, {}), got {}".format(l, shift_index))
    width = l * 6 * radius
    offset = shift_index * 6 * radius
    pad = 3 * radius
    coords = np.array([p.x if axis == 0 else p.y for p in ground])
    ids = np.array([p.id for p in ground], dtype=int)
    assigned = dict()
    for rng in ranges:
        center = rng.wedge.apex
        c = center.x if axis == 0 else center.y
        assigned.setdefault(int(math.floor((c - offset) / width)), []).append(rng)
    result = []
    for index in sorted(assigned):
        low = offset + index * width
        high = low + width
        inside = (coords >= low - pad - prim.LENGTH_TOL) & (coords <= high + pad + prim.LENGTH_TOL)
        result.append(Strip(index, low, high, assigned[index], sorted(int(i) for i in ids[inside])))
    return result


def cells(rs, l, radius, shift_x, shift_y):
    """ Cuts the range space into bounded cells: vertical strips, then horizontal strips inside each. """
    result = []
    for column in strips(rs.ground, rs.ranges, l, radius, shift_x, axis=0):
        column_ground = [rs.point(i) for i in column.ground_ids]
        for row in strips(column_ground, column.ranges, l, radius, shift_y, axis=1):
            result.append(rs.restrict(row.ground_ids, row.ranges))
    return result


def shifted_hitting_3r(rs, radius, l=2, config=None, seed=0):
    """
    Hits the 3R-extensions of radius-R double sectors with the two-level shifting strategy.

    For every combination of a vertical and a horizontal shift the cells are solved independently with the
    reweighting solver over sector nets and their results are united; the smallest union is returned
    (the first one in shift order on ties).

    Returns
    -------
    list
        The sorted ids hitting the 3R-extension of every range.

    Raises
    ------
    Infeasible
        If the extension of some range contains no ground element.
    """
    config = SolverConfig() if config is None else config
    for rng in rs.ranges:
        if len(rng.hit_members()) == 0:
            raise errors.Infeasible("The 3R-extension of the range of target {} is empty".format(rng.target_id),
                                    rng.target_id)
    if len(rs.ranges) == 0:
        return []
    builder = hs.net_builder("sector3r", radius=radius, threshold=config.frame_threshold)
    best = None
    for shift_x in range(l):
        for shift_y in range(l):
            union = set()
            for cell_index, cell in enumerate(cells(rs, l, radius, shift_x, shift_y)):
                union.update(hs.bg_hitting_set(cell, builder, prune=config.prune,
                                               loop_constant=config.bg_loop_constant, seed=seed + cell_index))
            logger.debug("Shift (%d, %d): %d sensors", shift_x, shift_y, len(union))
            if best is None or len(union) < len(best):
                best = union
    result = sorted(best)
    if config.prune:
        result = hs.prune_hitting_set(rs, result)
    hs.check_hitting_set(rs, result)
    return result


def solve_angdist_3r(instance, config=None, rounds=None):
    """
    Solves an angdist instance with witnesses within 3R.

    The seed is a disk cover at radius R; every round hits the 3R-extensions of radius-R double sectors, so the
    final set covers every target at level (1 - 1/delta) * alpha with both witnesses within 3R, and every added
    sensor lies inside the extended double sector of its target.

    Raises
    ------
    BadParams
        If the instance is not angdist or alpha is zero.
    """
    from . import framework
    if instance.variant != "angdist":
        raise errors.BadParams("The 3R solver needs an angdist instance")
    if instance.alpha <= 0:
        raise errors.BadParams("The 3R solver needs a positive angle")
    return framework.iterate(instance, config, rounds, relaxed=True)
