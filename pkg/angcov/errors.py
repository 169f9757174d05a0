#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the exceptions raised by the geometry, hitting-set, coverage and supplier solvers.
"""


class AngcovError(Exception):
    """ Base class of every error raised by the library. """


class CoincidentPoints(AngcovError):
    """ Two points that must be distinct (a sensor and its target, or the two sensors of a pair) coincide. """


class ZeroAngle(AngcovError):
    """ The coverage disks do not exist for a zero angle. """


class DisjointWedges(AngcovError):
    """ Two double wedges with disjoint angular intervals can not be merged into one. """


class OutsidePolygon(AngcovError):
    """ A point lies outside the polygon (or inside one of its holes). """


class BadParams(AngcovError):
    """ The parameters of an operation or an instance are invalid. """


class PreconditionViolated(AngcovError):
    """
    The current sensor set does not satisfy the precondition of a refinement round.

    Attributes
    ----------
    target_id : int
        The first target whose precondition fails.
    """
    def __init__(self, message, target_id=None):
        super().__init__(message)
        self.target_id = target_id


class Infeasible(AngcovError):
    """
    No sensor subset of the instance can satisfy the request.

    Attributes
    ----------
    target_id : int
        The target that can not be covered, if a single one is responsible.
    """
    def __init__(self, message, target_id=None):
        super().__init__(message)
        self.target_id = target_id


class InfeasibleExtension(Infeasible):
    """ The 3R-extension of a heavy range contains no ground element. """


class InfeasibleAtRadius(Infeasible):
    """ Some client has fewer than the required number of suppliers within the radius guess. """


class InfeasibleBudget(Infeasible):
    """ No candidate radius admits a supplier set within the budget. """


class NoHittingSet(AngcovError):
    """ A range is empty, so no hitting set exists. """


class TooLarge(AngcovError):
    """ The ground set is too large for an exhaustive solver. """


class ThreeClientViolation(AngcovError):
    """ A supplier covers three separated clients, which is geometrically impossible. """


class VerificationFailed(AngcovError):
    """ A result failed its post-hoc verification. """
