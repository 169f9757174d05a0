#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the greedy discrete unit disk cover that seeds the distance-constrained solvers.
"""
import numpy as np

from .. import errors
from ..geometry import primitives as prim


def _distances(sensors, targets):
    sxy, txy = prim.as_array(sensors), prim.as_array(targets)
    diff = sxy[:, None, :] - txy[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1]).reshape(len(sensors), len(targets))


def greedy_dudc(sensors, targets, radius):
    """
    Covers the targets with few disks of the given radius centered at sensors.

    The sensor whose disk contains the most uncovered targets is picked until every target is covered,
    ties going to the lowest id.

    Parameters
    ----------
    sensors : list
        The candidate centers as Point2.
    targets : list
        The points to cover.
    radius : float
        The disk radius R.

    Returns
    -------
    list
        The sorted ids of the chosen sensors.

    Raises
    ------
    Infeasible
        If some target is farther than R from every sensor.
    """
    if len(targets) == 0:
        return []
    sensors = sorted(sensors, key=lambda p: p.id)
    within = _distances(sensors, targets) <= radius + prim.LENGTH_TOL
    uncovered_anywhere = np.flatnonzero(~within.any(axis=0)) if len(sensors) > 0 else np.arange(len(targets))
    if len(uncovered_anywhere) > 0:
        t = targets[int(uncovered_anywhere[0])]
        raise errors.Infeasible("No sensor lies within {} of target {}".format(radius, t.id), t.id)
    uncovered = np.ones(len(targets), dtype=bool)
    chosen = []
    while uncovered.any():
        gains = (within & uncovered[None, :]).sum(axis=1)
        best = int(np.argmax(gains))
        chosen.append(sensors[best].id)
        uncovered &= ~within[best]
    return sorted(chosen)


def verify_dudc(sensors, selected, targets, radius):
    """
    Checks that every target lies within the radius of a selected sensor.

    Returns
    -------
    passed : bool
    farthest : int
        The id of the target farthest from the selection, or None without targets.
    distance : float
        Its distance to the nearest selected sensor (inf when nothing is selected).
    """
    if len(targets) == 0:
        return True, None, 0.0
    chosen = [p for p in sensors if p.id in set(selected)]
    if len(chosen) == 0:
        return False, targets[0].id, float("inf")
    nearest = _distances(chosen, targets).min(axis=0)
    worst = int(np.argmax(nearest))
    return bool(nearest[worst] <= radius + prim.LENGTH_TOL), targets[worst].id, float(nearest[worst])
