#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the problem instance, the witnesses of a coverage and the solution returned by the solvers.
"""
import math

import numpy as np

from .. import errors
from ..geometry import primitives as prim
from ..geometry import polygons as pg

VARIANTS = ("ang", "angdist", "artang")


class Instance:
    """
    An angular coverage instance.

    Attributes
    ----------
    variant : str
        "ang" (no side constraint), "angdist" (witnesses within the radius) or
        "artang" (witnesses see the target inside the polygon).
    sensors : list
        The candidate sensors X as Point2 with unique ids.
    targets : list
        The targets T as Point2 with unique ids.
    alpha : float
        The coverage angle in [0, pi/2]. The framework solvers require alpha <= pi/3.
    delta : float
        The approximation parameter, the solvers guarantee (1 - 1/delta) * alpha coverage.
    radius : float
        The sensing radius R of the angdist variant, None otherwise.
    env : PolygonEnv
        The polygon P of the artang variant, None otherwise.
    region : PolygonEnv
        The target region Q inside P, or None when the targets may lie anywhere in P.
    provenance : dict
        How the instance was generated (kind, seed, parameters), or an empty dict.
    """
    def __init__(self, variant, sensors, targets, alpha, delta=2.0, radius=None, env=None, region=None,
                 provenance=None):
        if variant not in VARIANTS:
            raise errors.BadParams("Unknown variant {!r}, expected one of {}".format(variant, VARIANTS))
        self.variant = variant
        self.sensors = sorted(sensors, key=lambda p: p.id)
        self.targets = sorted(targets, key=lambda p: p.id)
        self.alpha = float(alpha)
        self.delta = float(delta)
        self.radius = None if radius is None else float(radius)
        self.env = env
        self.region = region
        self.provenance = dict() if provenance is None else provenance
        self._validate()
        self.sensor_xy = prim.as_array(self.sensors)
        self.target_xy = prim.as_array(self.targets)
        self._sensor_rows = {p.id: row for row, p in enumerate(self.sensors)}
        self._target_rows = {p.id: row for row, p in enumerate(self.targets)}
        self._distances = None
        self._visibility = None

    def _validate(self):
        for name, points in (("sensor", self.sensors), ("target", self.targets)):
            ids = [p.id for p in points]
            if any(i is None for i in ids) or len(set(ids)) != len(ids):
                raise errors.BadParams("The {} ids must be unique integers".format(name))
        if not (-prim.ANGLE_TOL <= self.alpha <= math.pi / 2 + prim.ANGLE_TOL):
            raise errors.BadParams("alpha must lie in [0, pi/2], got {}".format(self.alpha))
        if self.delta <= 1:
            raise errors.BadParams("delta must be greater than 1, got {}".format(self.delta))
        if self.alpha > 0 and len(self.sensors) < 2 and len(self.targets) > 0:
            raise errors.BadParams("At least two sensors are needed for a positive angle")
        if self.variant == "angdist" and (self.radius is None or self.radius <= 0):
            raise errors.BadParams("The angdist variant needs a positive radius")
        if self.variant == "artang":
            if self.env is None:
                raise errors.BadParams("The artang variant needs a polygon")
            for p in self.sensors:
                if not self.env.contains(p):
                    raise errors.OutsidePolygon("The sensor {} lies outside the polygon".format(p))
            area = self.env if self.region is None else self.region
            for p in self.targets:
                if not (area.contains(p) and self.env.contains(p)):
                    raise errors.OutsidePolygon("The target {} lies outside the target region".format(p))

    @property
    def m(self):
        return len(self.sensors)

    @property
    def n(self):
        return len(self.targets)

    def sensor_row(self, sensor_id):
        return self._sensor_rows[sensor_id]

    def target_row(self, target_id):
        return self._target_rows[target_id]

    def sensor(self, sensor_id):
        return self.sensors[self._sensor_rows[sensor_id]]

    def target(self, target_id):
        return self.targets[self._target_rows[target_id]]

    @property
    def distances(self):
        """ The (m, n) matrix of sensor-target distances. """
        if self._distances is None:
            diff = self.sensor_xy[:, None, :] - self.target_xy[None, :, :]
            self._distances = np.hypot(diff[..., 0], diff[..., 1]).reshape(self.m, self.n)
        return self._distances

    @property
    def visibility(self):
        """ The (m, n) matrix of sensor-target visibility. All True outside the artang variant. """
        if self._visibility is None:
            if self.variant == "artang":
                self._visibility = pg.visibility_matrix(self.env, self.sensors, self.targets)
            else:
                self._visibility = np.ones((self.m, self.n), dtype=bool)
        return self._visibility

    def eligible_mask(self, bound=None):
        """ The (m, n) matrix of sensors that may witness a target: distinct from it, within bound, visible. """
        mask = self.distances > prim.LENGTH_TOL
        if bound is not None:
            mask &= self.distances <= bound + prim.LENGTH_TOL
        if self.variant == "artang":
            mask &= self.visibility
        return mask

    def eligible(self, target_row, sensor_row, bound=None):
        dist = self.distances[sensor_row, target_row]
        if dist <= prim.LENGTH_TOL:
            return False
        if bound is not None and dist > bound + prim.LENGTH_TOL:
            return False
        return self.variant != "artang" or bool(self.visibility[sensor_row, target_row])

    def default_bound(self):
        """ The distance bound of a plain solve: R for angdist, none otherwise. """
        return self.radius if self.variant == "angdist" else None

    def with_params(self, variant=None, alpha=None, delta=None, radius=None):
        """ Returns a copy of the instance with some parameters replaced. """
        return Instance(self.variant if variant is None else variant, self.sensors, self.targets,
                        self.alpha if alpha is None else alpha,
                        self.delta if delta is None else delta,
                        self.radius if radius is None else radius,
                        self.env, self.region, dict(self.provenance))

    def __repr__(self):
        return "Instance(variant={}, m={}, n={}, alpha={:.6f}, delta={}, radius={})".format(
            self.variant, self.m, self.n, self.alpha, self.delta, self.radius)


class Witness:
    """
    The best pair of selected sensors for one target.

    Attributes
    ----------
    target_id : int
    pair : tuple
        The ids of the two sensors, or an empty tuple when no eligible pair exists.
    angle : float
        The angle between the two sensors seen from the target.
    level : float
        The coverage level min(angle, pi - angle).
    distances : tuple
        The distances of both sensors to the target.
    visible : tuple
        The visibility flags of both sensors.
    gdop : tuple
        The distance-based and the bearing-based dilution of precision.
    """
    def __init__(self, target_id, pair=None, angle=None, level=None, distances=None, visible=None, gdop=None):
        self.target_id = target_id
        self.pair = tuple() if pair is None else tuple(pair)
        self.angle = angle
        self.level = -math.inf if level is None else level
        self.distances = tuple() if distances is None else tuple(distances)
        self.visible = tuple() if visible is None else tuple(visible)
        self.gdop = tuple() if gdop is None else tuple(gdop)

    def to_dict(self):
        return {"target": self.target_id, "pair": list(self.pair), "angle": self.angle,
                "level": None if self.level == -math.inf else self.level,
                "distances": list(self.distances), "visible": list(self.visible),
                "gdop": [None if math.isinf(v) else v for v in self.gdop]}

    def __repr__(self):
        return "Witness(target={}, pair={}, level={:.6f})".format(self.target_id, self.pair, self.level)


class RoundLog:
    """ What one refinement round did. """
    def __init__(self, round_index, epsilon, level, uncovered, ranges, added, hitting_size, net_kind):
        self.round_index = round_index
        self.epsilon = epsilon
        self.level = level
        self.uncovered = uncovered
        self.ranges = ranges
        self.added = added
        self.hitting_size = hitting_size
        self.net_kind = net_kind

    def to_dict(self):
        return dict(vars(self))


class Solution:
    """
    The output of a solver.

    Attributes
    ----------
    selected : list
        The sorted ids of the selected sensors.
    witnesses : dict
        The witness of every target, keyed by target id.
    rounds : list
        The RoundLog of every refinement round.
    guaranteed_level : float
        The level alpha * (1 - 2^-rounds) the solver guarantees.
    achieved_level : float
        The smallest witness level over the targets (beta*).
    bound : float
        The distance bound the witnesses respect, or None.
    provenance : dict
        The round that added each selected id (0 for the seed).
    solver : str
        The name of the solver.
    """
    def __init__(self, selected, witnesses=None, rounds=None, guaranteed_level=None, achieved_level=None,
                 bound=None, provenance=None, solver=None):
        self.selected = sorted(selected)
        self.witnesses = dict() if witnesses is None else witnesses
        self.rounds = list() if rounds is None else rounds
        self.guaranteed_level = guaranteed_level
        self.achieved_level = achieved_level
        self.bound = bound
        self.provenance = dict() if provenance is None else provenance
        self.solver = solver

    def __len__(self):
        return len(self.selected)

    def max_witness_distance(self):
        dists = [d for w in self.witnesses.values() for d in w.distances]
        return max(dists) if len(dists) > 0 else 0.0

    def worst_gdop(self):
        values = [w.gdop[0] for w in self.witnesses.values() if len(w.gdop) > 0]
        return max(values) if len(values) > 0 else None

    def to_dict(self):
        worst = self.worst_gdop()
        return {"solver": self.solver,
                "selected": list(self.selected),
                "guaranteed_level": self.guaranteed_level,
                "achieved_level": self.achieved_level,
                "bound": self.bound,
                "worst_gdop": None if worst is None or math.isinf(worst) else worst,
                "provenance": {str(k): v for k, v in sorted(self.provenance.items())},
                "rounds": [r.to_dict() for r in self.rounds],
                "witnesses": [self.witnesses[k].to_dict() for k in sorted(self.witnesses)]}

    def __repr__(self):
        return "Solution(solver={}, size={}, achieved_level={})".format(self.solver, len(self.selected),
                                                                         self.achieved_level)
