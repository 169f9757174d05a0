#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the SolverConfig class which groups the tunable constants of the solvers.
"""
import math

from . import helpers


class SolverConfig:
    """
    Holds the knobs shared by the net constructions, the hitting-set solvers and the framework.

    Attributes
    ----------
    seed : int
        The seed of every random generator used during a solve. The default is 0.
    vc_bound : int
        The VC-dimension bound used for the size of the sampling nets. The default is 4.
    net_retries : int
        How many times a sampling net is redrawn before the deterministic fallback. The default is 10.
    bg_loop_constant : int
        The constant c of the reweighting loop cap c * tau * log2(max(2, |X|/tau)) + 1. The default is 4.
    prune : bool
        Whether redundant ids are removed from the hitting sets. The default is True.
    shift_l : int
        The strip width factor of the shifting technique (strips of width l * 6R). The default is 2.
    frame_threshold : float
        The largest central angle of an axis-parallel sector part that is not a full quadrant. The default is pi/3.
    exact_limit : int
        The largest ground set the exact hitting-set solver accepts. The default is 24.
    oracle_limit : int
        The largest sensor set the exact minimum cover accepts. The default is 20.
    threads : int
        The number of worker threads used by the benchmark.
        The default is taken from the ANGCOV_THREADS environment variable, otherwise 1.
    """
    def __init__(self, seed=None, vc_bound=None, net_retries=None, bg_loop_constant=None,
                 prune=None, shift_l=None, frame_threshold=None, exact_limit=None,
                 oracle_limit=None, threads=None):
        self.seed = 0 if seed is None else seed
        self.vc_bound = 4 if vc_bound is None else vc_bound
        self.net_retries = 10 if net_retries is None else net_retries
        self.bg_loop_constant = 4 if bg_loop_constant is None else bg_loop_constant
        self.prune = True if prune is None else prune
        self.shift_l = 2 if shift_l is None else shift_l
        self.frame_threshold = math.pi / 3 if frame_threshold is None else frame_threshold
        self.exact_limit = 24 if exact_limit is None else exact_limit
        self.oracle_limit = 20 if oracle_limit is None else oracle_limit
        self.threads = helpers.thread_count() if threads is None else threads

    def vc_bound_for_holes(self, num_holes):
        """ Scales the VC bound by ceil(log2(h + 2)) for polygons with h holes. """
        return self.vc_bound * math.ceil(math.log2(num_holes + 2))

    def __repr__(self):
        return "SolverConfig(" + ", ".join(key + "=" + repr(val) for key, val in vars(self).items()) + ")"
