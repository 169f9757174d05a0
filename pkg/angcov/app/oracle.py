#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the exact minimum alpha-cover of small instances, used to measure k_OPT.
"""
import logging

import numpy as np

from .. import errors
from ..coverage import framework as fw
from ..geometry import primitives as prim

logger = logging.getLogger(__name__)


def covering_pairs(instance, level=None, bound="default"):
    """
    Lists, for every target, the pairs of sensor ids that level-cover it under the variant's constraints.

    Returns
    -------
    list
        One list of (id, id) tuples per target, in target order.
    """
    level = instance.alpha if level is None else level
    bound = instance.default_bound() if bound == "default" else bound
    eligible = instance.eligible_mask(bound)
    pairs = []
    for target_row in range(instance.n):
        rows = np.flatnonzero(eligible[:, target_row])
        covers = prim.pair_covers(instance.target_xy[target_row], instance.sensor_xy[rows], level)
        hits = np.argwhere(np.triu(covers, k=1))
        pairs.append([(instance.sensors[rows[i]].id, instance.sensors[rows[j]].id) for i, j in hits])
    return pairs


def exact_min_cover(instance, limit=20, bound="default"):
    """
    Finds a minimum sensor set that alpha-covers every target.

    Iterative deepening over the budget: the first target not covered by the current choice is covered by
    branching over its covering pairs.

    Returns
    -------
    selected : list
        The sorted ids of a minimum cover.
    k_opt : int
        Its size.

    Raises
    ------
    TooLarge
        If the instance has more than limit sensors.
    Infeasible
        If some target has no covering pair.
    """
    if instance.m > limit:
        raise errors.TooLarge("The instance has {} sensors, the limit is {}".format(instance.m, limit))
    if instance.n == 0:
        return [], 0
    pairs = covering_pairs(instance, bound=bound)
    for target_row, options in enumerate(pairs):
        if len(options) == 0:
            t = instance.targets[target_row]
            raise errors.Infeasible("No pair of sensors covers target {}".format(t.id), t.id)

    def first_open(chosen):
        for target_row, options in enumerate(pairs):
            if not any(a in chosen and b in chosen for a, b in options):
                return target_row
        return None

    def search(chosen, budget, seen):
        key = frozenset(chosen)
        if key in seen:
            return None
        seen.add(key)
        target_row = first_open(chosen)
        if target_row is None:
            return sorted(chosen)
        for a, b in pairs[target_row]:
            extended = chosen | {a, b}
            if len(extended) <= budget:
                found = search(extended, budget, seen)
                if found is not None:
                    return found
        return None

    for budget in range(2, instance.m + 1):
        found = search(frozenset(), budget, set())
        if found is not None:
            report = fw.verify_solution(instance, found, instance.alpha, bound)
            if not report.passed:
                raise errors.VerificationFailed("The exact cover fails its verification")
            logger.debug("k_OPT = %d for %r", len(found), instance)
            return found, len(found)
    raise errors.Infeasible("No sensor set covers every target")
