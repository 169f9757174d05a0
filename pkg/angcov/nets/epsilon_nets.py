#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the three epsilon-net constructions (weighted sampling, the fat-wedge slice rule and the
bounded double-sector net hitting 3R-extensions) and the exhaustive net verification.

Every construction is verified after it is built. Heavy ranges the construction missed are hit by adding
one maximum-weight member each, so the returned net always has the net property.
"""
import math
import logging

import numpy as np
from shapely.geometry import MultiPoint, Polygon, LineString, Point
from shapely.geometry.polygon import orient

from .. import errors
from ..geometry import wedges as wg

logger = logging.getLogger(__name__)


class Net:
    """
    An epsilon-net of a range space.

    Attributes
    ----------
    ids : list
        The sorted ids of the selected ground elements.
    epsilon : float
        The heaviness threshold the net was built for.
    kind : str
        The construction: "sample", "fatwedge" or "sector3r".
    pre_fallback_size : int
        The size of the net before the verification added elements.
    fallback_additions : int
        The number of elements added by the fallback.
    attempts : int
        The number of constructions tried (redraws of a sampling net).
    extension_radius : float
        The radius of the extensions the net was verified against, or None.
    evidence : dict
        For the sector3r construction, the id hitting the extension of each heavy range, keyed by target id.
    extent : float
        The diameter of the smallest ball enclosing the ground set (reported by the sector3r construction).
    """
    def __init__(self, ids, epsilon, kind, pre_fallback_size=None, fallback_additions=0, attempts=1,
                 extension_radius=None, evidence=None, extent=None):
        self.ids = sorted(set(int(i) for i in ids))
        self.epsilon = epsilon
        self.kind = kind
        self.pre_fallback_size = len(self.ids) if pre_fallback_size is None else pre_fallback_size
        self.fallback_additions = fallback_additions
        self.attempts = attempts
        self.extension_radius = extension_radius
        self.evidence = dict() if evidence is None else evidence
        self.extent = extent

    def __len__(self):
        return len(self.ids)

    def __contains__(self, sensor_id):
        return sensor_id in set(self.ids)

    def __repr__(self):
        return "Net(kind={}, epsilon={}, size={}, fallback={})".format(self.kind, self.epsilon, len(self.ids),
                                                                     self.fallback_additions)


def slice_count(epsilon):
    """ The number ceil(4/epsilon) of weight slices. """
    return max(1, math.ceil(4 / epsilon - 1e-9))


def verify_net(rs, epsilon, ids, extension_radius=None):
    """
    Scans all the ranges and reports the epsilon-heavy ones the ids do not hit.

    Parameters
    ----------
    rs : RangeSpace
        The range space.
    epsilon : float
        The heaviness threshold.
    ids : iterable
        The candidate net.
    extension_radius : float, optional
        When given, a range counts as hit if the ids meet its extension.

    Returns
    -------
    list
        The indices of the unhit heavy ranges.
    """
    selected = set(int(i) for i in ids)
    unhit = []
    for idx in rs.heavy_ranges(epsilon):
        rng = rs.ranges[idx]
        targets = rng.members
        if extension_radius is not None and rng.extended is not None:
            targets = rng.extended
        if not any(i in selected for i in targets):
            unhit.append(idx)
    return unhit


def _max_weight_member(rs, members):
    best_id, best_weight = None, -1.0
    for i in members:
        weight = rs.weights[rs.index[i]] if i in rs.index else 0.0
        if weight > best_weight:
            best_id, best_weight = i, weight
    return best_id


def _complete(rs, epsilon, ids, extension_radius=None):
    """ Adds one max-weight member of every unhit heavy range. Returns the ids and the number of additions. """
    selected = set(int(i) for i in ids)
    added = 0
    for idx in verify_net(rs, epsilon, selected, extension_radius):
        rng = rs.ranges[idx]
        targets = rng.extended if (extension_radius is not None and rng.extended is not None) else rng.members
        if any(i in selected for i in targets):
            continue
        if len(targets) == 0:
            raise errors.InfeasibleExtension("The extension of the range of target {} is empty".format(rng.target_id),
                                             rng.target_id)
        selected.add(_max_weight_member(rs, targets))
        added += 1
    leftover = verify_net(rs, epsilon, selected, extension_radius)
    if len(leftover) > 0:
        raise errors.VerificationFailed("The net misses {} heavy ranges after the fallback".format(len(leftover)))
    return selected, added


def sample_epsilon_net(rs, epsilon, vc_bound=None, seed=0, retries=10):
    """
    Builds an epsilon-net by weighted sampling with replacement.

    The sample has ceil((8 d / epsilon) ln(8 / epsilon)) draws. A sample that misses a heavy range is redrawn
    with the next seed, at most retries times, after which the missed ranges are hit by the fallback.

    Returns
    -------
    Net
        A verified net.
    """
    if not 0 < epsilon <= 1:
        raise errors.BadParams("epsilon must lie in (0, 1], got {}".format(epsilon))
    if rs.total_weight() <= 0:
        raise errors.BadParams("The ground set has no weight")
    vc_bound = rs.vc_bound if vc_bound is None else vc_bound
    size = math.ceil((8 * vc_bound / epsilon) * math.log(8 / epsilon))
    probs = rs.weights / rs.weights.sum()
    ids = set()
    attempts = 0
    for attempt in range(retries):
        attempts += 1
        draws = np.random.default_rng(seed + attempt).choice(len(rs.ground), size=size, replace=True, p=probs)
        ids = set(int(i) for i in rs.ids[np.unique(draws)])
        if len(verify_net(rs, epsilon, ids)) == 0:
            return Net(ids, epsilon, "sample", attempts=attempts)
    logger.debug("Sampling net missed heavy ranges after %d attempts, using the fallback", attempts)
    pre_size = len(ids)
    ids, added = _complete(rs, epsilon, ids)
    return Net(ids, epsilon, "sample", pre_fallback_size=pre_size, fallback_additions=added, attempts=attempts)


def weight_slices(ys, ids, weights, count):
    """
    Splits points into horizontal slices of roughly equal weight, topmost first.

    Each point goes to the slice floor(weight above it / (total / count)), capped at count - 1.
    Points with equal height are ordered by id.

    Returns
    -------
    numpy.ndarray
        The slice index of every point.
    """
    order = np.lexsort((ids, -ys))
    cap = weights.sum() / count
    before = np.concatenate([[0.0], np.cumsum(weights[order])[:-1]])
    slices = np.empty(len(ys), dtype=int)
    slices[order] = np.minimum(count - 1, np.floor(before / cap + 1e-9).astype(int))
    return slices


def hull_sequence(xs, ys, ids):
    """
    Returns the ids of the convex hull vertices in counter-clockwise order starting from the topmost vertex.
    Ties between coincident points go to the lowest id.
    """
    lookup = dict()
    for x, y, i in sorted(zip(xs, ys, ids), key=lambda item: item[2], reverse=True):
        lookup[(x, y)] = i
    hull = MultiPoint(list(zip(xs, ys))).convex_hull
    if isinstance(hull, Point):
        coords = [(hull.x, hull.y)]
    elif isinstance(hull, LineString):
        coords = list(hull.coords)
    elif isinstance(hull, Polygon):
        coords = list(orient(hull, sign=1.0).exterior.coords)[:-1]
    else:
        coords = []
    if len(coords) == 0:
        return []
    start = max(range(len(coords)), key=lambda k: (coords[k][1], -coords[k][0]))
    coords = coords[start:] + coords[:start]
    sequence = []
    for c in coords:
        key = (c[0], c[1])
        if key not in lookup:
            nearest = int(np.argmin(np.hypot(np.asarray(xs) - c[0], np.asarray(ys) - c[1])))
            key = (xs[nearest], ys[nearest])
        sequence.append(lookup[key])
    return sequence


def slice_picks(xs, ys, ids, slices, count):
    """
    Applies the slice rule: for every slice i, p_i is the last vertex of slice i on the hull of the points in
    slices 0..i (counter-clockwise from the topmost vertex) and N(p_i) is the next hull vertex.
    """
    picks = []
    for i in range(count):
        upto = slices <= i
        if not (slices == i).any():
            continue
        in_slice = set(int(v) for v in ids[slices == i])
        sequence = hull_sequence(list(xs[upto]), list(ys[upto]), list(ids[upto]))
        positions = [k for k, v in enumerate(sequence) if v in in_slice]
        if len(positions) == 0:
            continue
        last = positions[-1]
        picks.append(sequence[last])
        picks.append(sequence[(last + 1) % len(sequence)])
    return picks


def fat_wedge_epsilon_net(rs, epsilon):
    """
    Builds an epsilon-net for fat double wedges with the slice rule.

    The ground is split into ceil(4/epsilon) horizontal slices of weight at most about epsilon/4 of the total,
    and the slice rule picks p_i and N(p_i) per slice, once on the hulls of the points above and once on the
    hulls of the points below.

    Returns
    -------
    Net
        A verified net of size at most 4 ceil(4/epsilon) plus the fallback additions.
    """
    if not 0 < epsilon <= 1:
        raise errors.BadParams("epsilon must lie in (0, 1], got {}".format(epsilon))
    count = slice_count(epsilon)
    xs, ys = rs.xy[:, 0], rs.xy[:, 1]
    picks = set()
    for sign in (1.0, -1.0):
        slices = weight_slices(sign * ys, rs.ids, rs.weights, count)
        picks.update(slice_picks(xs, sign * ys, rs.ids, slices, count))
    pre_size = len(picks)
    missed = len(verify_net(rs, epsilon, picks))
    if missed > 0:
        logger.debug("Fat-wedge net missed %d heavy ranges at epsilon=%.4f", missed, epsilon)
    ids, added = _complete(rs, epsilon, picks)
    return Net(ids, epsilon, "fatwedge", pre_fallback_size=pre_size, fallback_additions=added)


def rotate(xy, angle):
    """ Expresses the coordinates in the frame rotated by angle. """
    cos, sin = math.cos(angle), math.sin(angle)
    return np.column_stack([xy[:, 0] * cos + xy[:, 1] * sin, -xy[:, 0] * sin + xy[:, 1] * cos])


def strip_count(width, radius):
    return max(1, math.ceil(width / radius - 1e-9))


def sector3r_epsilon_net(rs, epsilon, radius, threshold=math.pi / 3):
    """
    Builds a net for double sectors of radius R that hits the 3R-extension of every heavy range.

    Every range is assigned to the coordinate frame (rotated by 0, +pi/3 or -pi/3) in which its wedges split into
    axis-parallel parts. In every frame with assigned ranges the ground is cut into ceil(4/epsilon) weight slices
    and vertical strips of width R; every nonempty block contributes p_ij, N(p_ij) and its leftmost and rightmost
    points.

    Parameters
    ----------
    rs : RangeSpace
        A range space of radius-R double sectors whose ranges carry their 3R extensions.
    epsilon : float
        The heaviness threshold.
    radius : float
        The radius R of the double sectors.
    threshold : float, optional
        The frame threshold passed to choose_frame.

    Returns
    -------
    Net
        A net verified against the extensions.

    Raises
    ------
    InfeasibleExtension
        If the extension of a heavy range contains no ground element.
    """
    if not 0 < epsilon <= 1:
        raise errors.BadParams("epsilon must lie in (0, 1], got {}".format(epsilon))
    count = slice_count(epsilon)
    frames = set()
    for rng in rs.ranges:
        frames.add(wg.choose_frame(rng.wedge, threshold) if rng.wedge is not None else 0)
    picks = set()
    for frame in sorted(frames):
        local = rotate(rs.xy, wg.FRAME_ROTATIONS[frame])
        xs, ys = local[:, 0], local[:, 1]
        slices = weight_slices(ys, rs.ids, rs.weights, count)
        x_min = xs.min() if len(xs) > 0 else 0.0
        columns = strip_count(xs.max() - x_min, radius) if len(xs) > 0 else 1
        strips = np.minimum(columns - 1, np.floor((xs - x_min) / radius).astype(int))
        for j in range(columns):
            column = strips == j
            if not column.any():
                continue
            picks.update(slice_picks(xs[column], ys[column], rs.ids[column], slices[column], count))
            for i in range(count):
                block = column & (slices == i)
                if not block.any():
                    continue
                block_ids, block_xs = rs.ids[block], xs[block]
                picks.add(int(block_ids[np.lexsort((block_ids, block_xs))[0]]))
                picks.add(int(block_ids[np.lexsort((block_ids, -block_xs))[0]]))
    pre_size = len(picks)
    extension = 3 * radius
    missed = len(verify_net(rs, epsilon, picks, extension))
    if missed > 0:
        logger.debug("Sector net missed %d heavy extensions at epsilon=%.4f", missed, epsilon)
    ids, added = _complete(rs, epsilon, picks, extension)
    evidence = dict()
    for idx in rs.heavy_ranges(epsilon):
        rng = rs.ranges[idx]
        hitters = [i for i in rng.hit_members() if i in ids]
        evidence[rng.target_id] = hitters[0]
    return Net(ids, epsilon, "sector3r", pre_fallback_size=pre_size, fallback_additions=added,
               extension_radius=extension, evidence=evidence, extent=rs.extent())
