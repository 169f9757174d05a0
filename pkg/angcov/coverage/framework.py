#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the refinement framework: a seed sensor set is refined in rounds with halving steps
epsilon = alpha/2, alpha/4, ... and after round i every target is (alpha - alpha/2^i)-covered.

A round collects the targets the current set does not cover at level alpha - epsilon, builds one double wedge
per target from a pair that covers it at level alpha - 2 epsilon and adds a hitting set of those double wedges.
"""
import math
import logging

import numpy as np

from .. import errors
from .. import helpers
from ..config import SolverConfig
from ..geometry import primitives as prim
from ..hitting import solvers as hs
from ..nets import range_space as rsp
from . import dudc
from .instance import Witness, RoundLog, Solution

logger = logging.getLogger(__name__)


class VerificationReport:
    """
    The result of verify_solution.

    Attributes
    ----------
    passed : bool
        True iff every target is covered at the requested level.
    level : float
        The requested level.
    bound : float
        The distance bound of the witnesses, or None.
    witnesses : dict
        The best witness of every target, keyed by target id.
    failures : list
        The ids of the targets that are not covered.
    """
    def __init__(self, passed, level, bound, witnesses, failures):
        self.passed = passed
        self.level = level
        self.bound = bound
        self.witnesses = witnesses
        self.failures = failures

    def achieved_level(self):
        levels = [w.level for w in self.witnesses.values()]
        return min(levels) if len(levels) > 0 else math.pi / 2

    def to_dict(self):
        return {"passed": self.passed, "level": self.level, "bound": self.bound,
                "achieved_level": self.achieved_level() if len(self.failures) == 0 else None,
                "failures": list(self.failures),
                "witnesses": [self.witnesses[k].to_dict() for k in sorted(self.witnesses)]}


def _eligible_rows(instance, selected_rows, target_row, bound):
    return [row for row in selected_rows if instance.eligible(target_row, row, bound)]


def _sorted_rows(instance, selected):
    return sorted(instance.sensor_row(i) for i in set(selected))


def covered_at(instance, selected_rows, target_row, level, bound=None):
    """ True iff some eligible pair of the selected rows level-covers the target. """
    rows = _eligible_rows(instance, selected_rows, target_row, bound)
    if len(rows) < 2:
        return False
    covers = prim.pair_covers(instance.target_xy[target_row], instance.sensor_xy[rows], level)
    return bool(np.triu(covers, k=1).any())


def uncovered_targets(instance, selected, level, bound=None):
    """
    Returns the sorted ids of the targets that no pair of the selected sensors level-covers.

    Both sensors of a pair must lie within the distance bound (when given) and see the target (artang).
    """
    rows = _sorted_rows(instance, selected)
    return [t.id for target_row, t in enumerate(instance.targets)
            if not covered_at(instance, rows, target_row, level, bound)]


def best_witness(instance, selected_rows, target_row, bound=None):
    """ Finds the eligible pair with the largest coverage level, ties to the lowest ids. """
    t = instance.targets[target_row]
    rows = _eligible_rows(instance, selected_rows, target_row, bound)
    if len(rows) < 2:
        return Witness(t.id)
    levels = prim.pair_levels(instance.target_xy[target_row], instance.sensor_xy[rows])
    levels = np.where(np.isnan(levels), -np.inf, levels)
    levels[np.tril_indices(len(rows))] = -np.inf
    flat = int(np.argmax(levels))
    i, j = divmod(flat, len(rows))
    if levels[i, j] == -np.inf:
        return Witness(t.id)
    s1, s2 = instance.sensors[rows[i]], instance.sensors[rows[j]]
    return Witness(t.id, pair=(s1.id, s2.id), angle=prim.angle_at(t, s1, s2), level=float(levels[i, j]),
                   distances=(s1.dist(t), s2.dist(t)),
                   visible=(bool(instance.visibility[rows[i], target_row]),
                            bool(instance.visibility[rows[j], target_row])),
                   gdop=(prim.gdop(s1, s2, t, "distance"), prim.gdop(s1, s2, t, "bearing")))


def verify_solution(instance, selected, level, bound="default"):
    """
    Verifies a sensor set exhaustively.

    Parameters
    ----------
    instance : Instance
        The instance.
    selected : iterable
        The ids of the sensors.
    level : float
        The coverage level to check.
    bound : float or None or "default", optional
        The distance bound of the witnesses. "default" uses R for angdist and no bound otherwise.

    Returns
    -------
    VerificationReport
        The best witness of every target and the pass/fail verdict.
    """
    bound = instance.default_bound() if bound == "default" else bound
    rows = _sorted_rows(instance, selected)
    witnesses = dict()
    failures = []
    for target_row, t in enumerate(instance.targets):
        witnesses[t.id] = best_witness(instance, rows, target_row, bound)
        if not covered_at(instance, rows, target_row, level, bound):
            failures.append(t.id)
    return VerificationReport(len(failures) == 0, level, bound, witnesses, failures)


def _vc_bound(instance, config):
    if instance.variant == "artang":
        return config.vc_bound_for_holes(instance.env.h)
    return config.vc_bound


def seed(instance, config=None):
    """
    Computes the seed set S_1 in which every target has an eligible sensor.

    Returns
    -------
    list
        The sorted ids of the seed: the lowest-id sensor for ang, a greedy disk cover for angdist and a hitting set
        of the visibility ranges for artang.

    Raises
    ------
    Infeasible
        If some target has no sensor within R or no sensor seeing it.
    """
    config = SolverConfig() if config is None else config
    if instance.n == 0:
        return []
    if instance.variant == "angdist":
        return dudc.greedy_dudc(instance.sensors, instance.targets, instance.radius)
    if instance.variant == "artang":
        rs = rsp.visibility_ranges(instance, vc_bound=_vc_bound(instance, config))
        builder = hs.net_builder("sample", retries=config.net_retries)
        return hs.bg_hitting_set(rs, builder, prune=config.prune, loop_constant=config.bg_loop_constant,
                                 seed=config.seed)
    if instance.m == 0:
        raise errors.Infeasible("There are no sensors")
    chosen = [instance.sensors[0].id]
    eligible = instance.eligible_mask()
    for target_row, t in enumerate(instance.targets):
        if not eligible[0, target_row]:
            rows = np.flatnonzero(eligible[:, target_row])
            if len(rows) == 0:
                raise errors.Infeasible("Every sensor coincides with target {}".format(t.id), t.id)
            chosen.append(instance.sensors[int(rows[0])].id)
    return sorted(set(chosen))


def _hitting_set(instance, rs, policy, config, round_seed):
    if policy.extension is not None:
        from . import relax3r
        return relax3r.shifted_hitting_3r(rs, policy.range_radius, config.shift_l, config, seed=round_seed), "sector3r"
    kind = "fatwedge" if instance.variant == "ang" else "sample"
    builder = hs.net_builder(kind, retries=config.net_retries)
    return hs.bg_hitting_set(rs, builder, prune=config.prune, loop_constant=config.bg_loop_constant,
                             seed=round_seed), kind


def refine(instance, selected, epsilon, policy=None, config=None, seed_round=False, round_index=1):
    """
    Runs one refinement round.

    Parameters
    ----------
    instance : Instance
        The instance.
    selected : iterable
        The ids of the current set S, which covers every target at level alpha - 2 epsilon
        (or, in a seed round, has an eligible sensor for every target).
    epsilon : float
        The step, at most alpha/2.
    policy : DistancePolicy, optional
        The distance constraints. The default is the instance's plain policy.
    config : SolverConfig, optional
        The solver knobs.
    seed_round : bool, optional
        True for the first round after the seed.
    round_index : int, optional
        The index of the round, used for logging and seeding.

    Returns
    -------
    selected : list
        The sorted ids of S union S', which covers every target at level alpha - epsilon.
    log : RoundLog
        What the round did.

    Raises
    ------
    Infeasible
        If the range of some target is empty.
    """
    config = SolverConfig() if config is None else config
    policy = rsp.DistancePolicy.for_instance(instance) if policy is None else policy
    if epsilon > instance.alpha / 2 + prim.ANGLE_TOL or epsilon < 0:
        raise errors.BadParams("epsilon must lie in [0, alpha/2], got {}".format(epsilon))
    level = instance.alpha - epsilon
    if level > math.pi / 3 + prim.ANGLE_TOL:
        raise errors.BadParams("The round level {:.6f} exceeds pi/3".format(level))
    selected = sorted(set(selected))
    uncovered = uncovered_targets(instance, selected, level, policy.bound)
    if len(uncovered) == 0:
        return selected, RoundLog(round_index, epsilon, level, 0, 0, 0, 0, None)
    rs = rsp.build_ranges(instance, selected, uncovered, epsilon, policy, seed_round=seed_round,
                          vc_bound=_vc_bound(instance, config))
    if len(rs.unhit_ranges(selected)) == 0:
        logger.info("Round %d: the current set already hits all %d ranges", round_index, len(rs.ranges))
        hitting, kind = [], None
    else:
        hitting, kind = _hitting_set(instance, rs, policy, config, config.seed + 1000 * round_index)
    result = sorted(set(selected) | set(hitting))
    missed = uncovered_targets(instance, result, level, policy.bound)
    if len(missed) > 0:
        raise errors.VerificationFailed("Round {} leaves target {} uncovered at level {:.6f}".format(
            round_index, missed[0], level))
    log = RoundLog(round_index, epsilon, level, len(uncovered), len(rs.ranges), len(result) - len(selected),
                   len(hitting), kind)
    logger.info("Round %d: epsilon=%.6f level=%.6f uncovered=%d ranges=%d added=%d", round_index, epsilon, level,
                len(uncovered), len(rs.ranges), log.added)
    return result, log


def iterate(instance, config=None, rounds=None, relaxed=False):
    """
    Runs the seed and the refinement rounds with epsilon = alpha/2, alpha/4, ...

    Parameters
    ----------
    instance : Instance
        The instance, with alpha <= pi/3.
    config : SolverConfig, optional
        The solver knobs.
    rounds : int, optional
        The number of rounds. The default is ceil(log2(delta)), which reaches level (1 - 1/delta) * alpha.
    relaxed : bool, optional
        For angdist, let the witnesses lie within 3R and hit the 3R-extensions of the double sectors.

    Returns
    -------
    Solution
        A verified solution at level alpha * (1 - 2^-rounds).
    """
    config = SolverConfig() if config is None else config
    if instance.alpha > math.pi / 3 + prim.ANGLE_TOL:
        raise errors.BadParams("The framework needs alpha <= pi/3, got {}".format(instance.alpha))
    if relaxed and instance.variant != "angdist":
        raise errors.BadParams("The 3R relaxation applies to the angdist variant only")
    rounds = helpers.ceil_log2(instance.delta) if rounds is None else rounds
    if rounds < 1:
        raise errors.BadParams("At least one round is needed, got {}".format(rounds))
    policy = rsp.DistancePolicy.for_instance(instance, relaxed)
    solver = "relax3r" if relaxed else "iterate"
    selected = seed(instance, config)
    provenance = {i: 0 for i in selected}
    logs = []
    if instance.n > 0:
        for i in range(1, rounds + 1):
            epsilon = instance.alpha / 2 ** i
            selected, log = refine(instance, selected, epsilon, policy, config, seed_round=i == 1, round_index=i)
            for sensor_id in selected:
                provenance.setdefault(sensor_id, i)
            logs.append(log)
    level = instance.alpha * (1 - 2.0 ** -rounds)
    report = verify_solution(instance, selected, level, policy.bound)
    if not report.passed:
        raise errors.VerificationFailed("The solution fails at level {:.6f} for target {}".format(
            level, report.failures[0]))
    return Solution(selected, report.witnesses, logs, guaranteed_level=level,
                    achieved_level=report.achieved_level(), bound=policy.bound, provenance=provenance, solver=solver)


def solve(instance, config=None, relaxed=False, rounds=None):
    """ Solves an instance with the framework, relaxed to 3R on request. """
    if relaxed:
        from . import relax3r
        return relax3r.solve_angdist_3r(instance, config, rounds)
    return iterate(instance, config, rounds)
