#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the hitting-set solvers: the iterative reweighting solver driven by epsilon-nets,
the greedy baseline and the exact branch-and-bound used as an oracle.
"""
import math
import logging

from .. import errors
from ..nets import epsilon_nets as en

logger = logging.getLogger(__name__)


def net_builder(kind, vc_bound=None, retries=10, radius=None, threshold=math.pi / 3):
    """
    Returns a callable (rs, epsilon, seed) -> Net for one of the net constructions.

    Parameters
    ----------
    kind : str
        "sample", "fatwedge" or "sector3r".
    vc_bound : int, optional
        The VC bound of the sampling nets. The default is the range space's own bound.
    retries : int, optional
        The redraws of the sampling nets.
    radius : float, optional
        The sector radius R, required by "sector3r".
    threshold : float, optional
        The frame threshold of "sector3r".
    """
    if kind == "sample":
        def build(rs, epsilon, seed):
            return en.sample_epsilon_net(rs, epsilon, vc_bound=vc_bound, seed=seed, retries=retries)
        return build
    if kind == "fatwedge":
        def build(rs, epsilon, seed):
            return en.fat_wedge_epsilon_net(rs, epsilon)
        return build
    if kind == "sector3r":
        if radius is None:
            raise errors.BadParams("The sector net needs a radius")
        return lambda rs, epsilon, seed: en.sector3r_epsilon_net(rs, epsilon, radius, threshold)
    raise errors.BadParams("Unknown net construction {!r}".format(kind))


def _check_nonempty(rs):
    for rng in rs.ranges:
        if len(rng.hit_members()) == 0:
            raise errors.NoHittingSet("The range of target {} is empty".format(rng.target_id))


def check_hitting_set(rs, ids):
    """ Raises VerificationFailed unless the ids hit every range. """
    unhit = rs.unhit_ranges(ids)
    if len(unhit) > 0:
        raise errors.VerificationFailed("The set misses the range of target {}".format(rs.ranges[unhit[0]].target_id))


def loop_cap(tau, ground_size, constant=4):
    """ The number of reweighting iterations allowed for the guess tau. """
    return math.ceil(constant * tau * math.log2(max(2.0, ground_size / tau))) + 1


def prune_hitting_set(rs, ids):
    """
    Removes redundant ids, highest id first, while every range stays hit.

    Returns
    -------
    list
        The sorted ids of a minimal hitting set contained in the input.
    """
    selected = set(ids)
    hits_of = {i: [] for i in selected}
    counts = []
    for idx, rng in enumerate(rs.ranges):
        hitters = [i for i in rng.hit_members() if i in selected]
        counts.append(len(hitters))
        for i in hitters:
            hits_of[i].append(idx)
    for i in sorted(selected, reverse=True):
        if all(counts[idx] >= 2 for idx in hits_of[i]):
            selected.discard(i)
            for idx in hits_of[i]:
                counts[idx] -= 1
    return sorted(selected)


def bg_hitting_set(rs, builder, prune=True, loop_constant=4, seed=0):
    """
    Computes a hitting set by iterative reweighting.

    For the guesses tau = 1, 2, 4, ..., |X| the weights are reset to one and at most loop_cap(tau) times a
    1/(2 tau)-net is built. A net that hits every range is returned; otherwise the members of the unhit range
    of lowest target id get their weights doubled. When the cap is reached the guess is doubled.

    Parameters
    ----------
    rs : RangeSpace
        The range space. Its weights are modified.
    builder : callable
        A net builder as returned by net_builder.
    prune : bool, optional
        Whether the redundant ids of the result are removed. The default is True.
    loop_constant : int, optional
        The constant of the loop cap. The default is 4.
    seed : int, optional
        The base seed handed to the builder.

    Returns
    -------
    list
        The sorted ids of the hitting set.

    Raises
    ------
    NoHittingSet
        If a range is empty.
    """
    _check_nonempty(rs)
    if len(rs.ranges) == 0:
        return []
    ground_size = len(rs.ground)
    tau = 1
    counter = 0
    result = None
    while result is None:
        rs.reset_weights()
        cap = loop_cap(tau, ground_size, loop_constant)
        for _ in range(cap):
            net = builder(rs, 1.0 / (2 * tau), seed + counter)
            counter += 1
            unhit = rs.unhit_ranges(net.ids)
            if len(unhit) == 0:
                result = net.ids
                break
            rng = rs.ranges[unhit[0]]
            rs.double_weights(rng.members if len(rng.members) > 0 else rng.hit_members())
        if result is None:
            if tau >= ground_size:
                logger.warning("Reweighting did not converge, falling back to all range members")
                result = sorted(set(i for rng in rs.ranges for i in rng.hit_members()))
            else:
                tau = min(2 * tau, ground_size)
                logger.debug("Escalating the hitting-set guess to %d", tau)
    if prune:
        result = prune_hitting_set(rs, result)
    check_hitting_set(rs, result)
    logger.debug("Hitting set of size %d for %d ranges (guess %d)", len(result), len(rs.ranges), tau)
    return sorted(result)


def greedy_hitting_set(rs):
    """ Repeatedly selects the id in the most unhit ranges, ties to the lowest id. """
    _check_nonempty(rs)
    unhit = set(range(len(rs.ranges)))
    selected = []
    while len(unhit) > 0:
        counts = dict()
        for idx in unhit:
            for i in rs.ranges[idx].hit_members():
                counts[i] = counts.get(i, 0) + 1
        best = min(counts, key=lambda i: (-counts[i], i))
        selected.append(best)
        unhit = set(idx for idx in unhit if best not in rs.ranges[idx].hit_members())
    return sorted(selected)


def exact_hitting_set(rs, limit=24):
    """
    Finds a minimum hitting set by branch-and-bound on the unhit range of lowest index.

    Returns
    -------
    ids : list
        The sorted ids of a minimum hitting set.
    tau : int
        Its size.

    Raises
    ------
    TooLarge
        If the ground set has more than limit elements.
    NoHittingSet
        If a range is empty.
    """
    if len(rs.ground) > limit:
        raise errors.TooLarge("The ground set has {} elements, the limit is {}".format(len(rs.ground), limit))
    _check_nonempty(rs)
    num_ranges = len(rs.ranges)
    full = (1 << num_ranges) - 1
    masks = dict()
    for idx, rng in enumerate(rs.ranges):
        for i in rng.hit_members():
            masks[i] = masks.get(i, 0) | (1 << idx)
    members = [rng.hit_members() for rng in rs.ranges]
    best = [greedy_hitting_set(rs)]

    def search(covered, chosen):
        if covered == full:
            if len(chosen) < len(best[0]):
                best[0] = sorted(chosen)
            return
        if len(chosen) + 1 >= len(best[0]):
            return
        first = ((covered + 1) & ~covered).bit_length() - 1
        for i in members[first]:
            chosen.append(i)
            search(covered | masks[i], chosen)
            chosen.pop()

    search(0, [])
    return best[0], len(best[0])

