#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the benchmark harness: it generates a suite of instances, runs the solvers on them
(concurrently when several threads are allowed) and writes one CSV row per instance and solver.
"""
import csv
import time
import logging
from concurrent.futures import ThreadPoolExecutor

from tqdm import tqdm

from .. import errors
from ..config import SolverConfig
from ..coverage import framework as fw
from . import generators
from . import oracle

logger = logging.getLogger(__name__)

SOLVERS = ("iterate", "relax3r")
COLUMNS = ("instance", "variant", "m", "n", "alpha", "delta", "solver", "status", "size", "k_opt", "ratio",
           "achieved_level", "max_distance", "worst_gdop")


class BenchRecord:
    """
    One row of the benchmark.

    Attributes
    ----------
    instance_id : int
        The seed that generated the instance.
    variant : str
    m : int
    n : int
    alpha : float
    delta : float
    solver : str
    status : str
        "ok", "infeasible" or "error".
    size : int
        The size of the solution, or None.
    k_opt : int
        The exact optimum, or None when the oracle did not run.
    achieved_level : float
        The smallest witness level beta*.
    max_distance : float
        The largest witness distance.
    worst_gdop : float
        The largest distance-based dilution of precision over the witnesses.
    wall_time : float
        The seconds spent in the solver.
    """
    def __init__(self, instance_id, variant, m, n, alpha, delta, solver, status="ok", size=None, k_opt=None,
                 achieved_level=None, max_distance=None, worst_gdop=None, wall_time=None):
        self.instance_id = instance_id
        self.variant = variant
        self.m = m
        self.n = n
        self.alpha = alpha
        self.delta = delta
        self.solver = solver
        self.status = status
        self.size = size
        self.k_opt = k_opt
        self.achieved_level = achieved_level
        self.max_distance = max_distance
        self.worst_gdop = worst_gdop
        self.wall_time = wall_time

    def ratio(self):
        if self.size is None or not self.k_opt:
            return None
        return self.size / self.k_opt

    def row(self, timing=False):
        values = [self.instance_id, self.variant, self.m, self.n, _fmt(self.alpha), _fmt(self.delta), self.solver,
                  self.status, self.size, self.k_opt, _fmt(self.ratio()), _fmt(self.achieved_level),
                  _fmt(self.max_distance), _fmt(self.worst_gdop)]
        if timing:
            values.append(_fmt(self.wall_time))
        return ["" if v is None else v for v in values]


def _fmt(value):
    return None if value is None else "{:.9g}".format(value)


def run_solver(instance, solver, config):
    """ Runs one solver and returns its solution. """
    if solver == "iterate":
        return fw.iterate(instance, config)
    if solver == "relax3r":
        return fw.solve(instance, config, relaxed=True)
    raise errors.BadParams("Unknown solver {!r}, expected one of {}".format(solver, SOLVERS))


def bench_instance(instance_id, gen_params, solvers, config, with_oracle=False):
    """ Generates the instance of one seed and runs every solver on it. """
    instance = generators.gen(seed=instance_id, **gen_params)
    k_opt = None
    if with_oracle:
        try:
            k_opt = oracle.exact_min_cover(instance, config.oracle_limit)[1]
        except errors.AngcovError as err:
            logger.error(err, exc_info=True)
    records = []
    for solver in solvers:
        record = BenchRecord(instance_id, instance.variant, instance.m, instance.n, instance.alpha, instance.delta,
                             solver, k_opt=k_opt)
        start = time.perf_counter()
        try:
            solution = run_solver(instance, solver, config)
            record.size = len(solution)
            record.achieved_level = solution.achieved_level
            record.max_distance = solution.max_witness_distance()
            record.worst_gdop = solution.worst_gdop()
            if record.worst_gdop == float("inf"):
                record.worst_gdop = None
            if record.size > instance.m:
                raise errors.VerificationFailed("The solution is larger than the sensor set")
        except errors.Infeasible as err:
            logger.error(err, exc_info=True)
            record.status = "infeasible"
        except errors.AngcovError as err:
            logger.error(err, exc_info=True)
            record.status = "error"
        record.wall_time = time.perf_counter() - start
        records.append(record)
    return records


def run_bench(seeds, gen_params=None, solvers=None, config=None, with_oracle=False, progress=True):
    """
    Runs the benchmark over the instances generated by the given seeds.

    Parameters
    ----------
    seeds : iterable
        The seeds, which double as instance ids.
    gen_params : dict, optional
        Keyword arguments of generators.gen other than the seed.
    solvers : list, optional
        The solvers to run. The default is ["iterate"].
    config : SolverConfig, optional
        The solver knobs; config.threads caps the concurrency.
    with_oracle : bool, optional
        Whether k_OPT is computed for every instance.
    progress : bool, optional
        Whether a progress bar is shown.

    Returns
    -------
    list
        The records ordered by instance id and then by solver order.
    """
    config = SolverConfig() if config is None else config
    gen_params = dict() if gen_params is None else gen_params
    solvers = ["iterate"] if solvers is None else list(solvers)
    seeds = list(seeds)
    progress_bar = tqdm(total=len(seeds), disable=not progress)
    results = dict()
    with ThreadPoolExecutor(max_workers=max(1, config.threads)) as executor:
        futures = {seed: executor.submit(bench_instance, seed, gen_params, solvers, config, with_oracle)
                   for seed in seeds}
        for seed, future in futures.items():
            results[seed] = future.result()
            progress_bar.update(1)
    progress_bar.close()
    records = []
    for seed in sorted(results):
        records += results[seed]
    return records


def write_csv(records, outfile, timing=False):
    """ Writes the records as CSV to an open text file. The wall time column is only written with timing. """
    writer = csv.writer(outfile, lineterminator="\n")
    writer.writerow(list(COLUMNS) + (["wall_time"] if timing else []))
    for record in records:
        writer.writerow(record.row(timing))
