#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
This module contains the angcov command line interface.

    angcov gen --kind uniform --m 30 --n 15 --seed 7 --out inst.json
    angcov solve inst.json --out sol.json
    angcov verify inst.json sol.json
    angcov oracle inst.json
    angcov bench --kind circle --seeds 10 --solvers iterate relax3r --variant angdist
    angcov render inst.json --solution sol.json --target 0 --out inst.svg

Exit codes: 0 success, 1 failed verification, 2 infeasible instance, 3 bad input.
Errors are reported on stderr as one JSON object {"error": ..., "message": ...}.
"""
import sys
import json
import logging
import argparse

from .. import errors
from .. import helpers
from ..config import SolverConfig
from ..coverage import framework as fw
from ..geometry import primitives as prim
from ..suppliers import ft_suppliers as fts
from . import bench
from . import generators
from . import instance_io
from . import oracle
from . import render as rd

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INFEASIBLE = 2
EXIT_BAD_INPUT = 3

BAD_INPUT_ERRORS = (errors.BadParams, errors.CoincidentPoints, errors.OutsidePolygon, errors.ZeroAngle,
                    errors.DisjointWedges, errors.PreconditionViolated, errors.TooLarge)


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-file", default=None, help="Write the log to this file instead of stderr")
    common.add_argument("--verbose", action="store_true", help="Log the progress of the solvers")
    common.add_argument("--quiet", action="store_true", help="Hide the progress bars")
    common.add_argument("--seed", type=int, default=0, help="The seed of the generators and the solvers")
    common.add_argument("--out", default=None, help="The output file, stdout when omitted")
    return common


def _add_instance_params(parser):
    parser.add_argument("--variant", choices=["ang", "angdist", "artang"], default=None)
    parser.add_argument("--alpha", type=float, default=None, help="The coverage angle in radians")
    parser.add_argument("--delta", type=float, default=None, help="The approximation parameter, greater than 1")
    parser.add_argument("--radius", type=float, default=None, help="The sensing radius of the angdist variant")


def _add_generator_params(parser):
    parser.add_argument("--kind", choices=list(generators.KINDS), default="uniform")
    parser.add_argument("--m", type=int, default=20, help="The number of sensors")
    parser.add_argument("--n", type=int, default=10, help="The number of targets")
    parser.add_argument("--size", type=float, default=10.0, help="The side of the bounding square")
    parser.add_argument("--no-feasible", dest="feasible", action="store_false",
                        help="Keep targets that the full sensor set can not cover")


def _parse_args(argv=None):
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="angcov", description="Angular coverage sensor placement.")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", parents=[common], help="Generate a random instance")
    _add_generator_params(gen)
    _add_instance_params(gen)

    solve = commands.add_parser("solve", parents=[common], help="Select sensors for an instance")
    solve.add_argument("instance")
    _add_instance_params(solve)
    solve.add_argument("--relax3r", action="store_true", help="Let angdist witnesses lie within 3R")
    solve.add_argument("--rounds", type=int, default=None, help="Override the number of refinement rounds")
    solve.add_argument("--suppliers", action="store_true", help="Run the fault-tolerant k-suppliers solver")
    solve.add_argument("--k", type=int, default=None, help="The supplier budget, searches the radius")
    solve.add_argument("--multiplicity", type=int, default=2, help="The suppliers every client needs")

    verify = commands.add_parser("verify", parents=[common], help="Verify a solution file")
    verify.add_argument("instance")
    verify.add_argument("solution")
    _add_instance_params(verify)
    verify.add_argument("--level", type=float, default=None,
                        help="The level to check, (1 - 1/delta) * alpha when omitted")
    verify.add_argument("--relax3r", action="store_true", help="Accept witnesses within 3R")

    exact = commands.add_parser("oracle", parents=[common], help="Compute a minimum cover exactly")
    exact.add_argument("instance")
    _add_instance_params(exact)
    exact.add_argument("--limit", type=int, default=None, help="The largest number of sensors accepted")

    sweep = commands.add_parser("bench", parents=[common], help="Run the solvers over generated instances")
    _add_generator_params(sweep)
    _add_instance_params(sweep)
    sweep.add_argument("--seeds", type=int, default=10, help="The number of instances, seeded from --seed on")
    sweep.add_argument("--solvers", nargs="+", choices=list(bench.SOLVERS), default=["iterate"])
    sweep.add_argument("--oracle", action="store_true", help="Compute k_OPT for every instance")
    sweep.add_argument("--timing", action="store_true", help="Write the wall time column")

    draw = commands.add_parser("render", parents=[common], help="Render an instance as SVG")
    draw.add_argument("instance")
    draw.add_argument("--solution", default=None, help="A solution file whose selection is drawn")
    draw.add_argument("--target", type=int, default=None, help="The target whose witness double wedge is drawn")
    return parser.parse_args(argv)


def _load(args):
    instance = instance_io.read_instance(args.instance)
    if any(v is not None for v in (args.variant, args.alpha, args.delta, args.radius)):
        instance = instance.with_params(args.variant, args.alpha, args.delta, args.radius)
    return instance


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as outfile:
            outfile.write(text)


def _gen_params(args):
    params = {"kind": args.kind, "m": args.m, "n": args.n, "size": args.size, "feasible": args.feasible,
              "variant": args.variant, "delta": 2.0 if args.delta is None else args.delta, "radius": args.radius}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    return params


def gen_cmd(args, config):
    instance = generators.gen(seed=args.seed, **_gen_params(args))
    _emit(instance_io.dumps(instance_io.instance_to_dict(instance)), args.out)
    return EXIT_OK


def _supplier_solution(instance, args):
    inst = fts.SupplierInstance.from_instance(instance, args.multiplicity)
    if args.k is not None:
        radius, selected = fts.radius_search(inst, args.k)
    else:
        if instance.radius is None:
            raise errors.BadParams("The supplier solver needs --radius or --k")
        radius = instance.radius
        selected = fts.solve_ft_suppliers(inst, radius)
    served = fts.served_counts(inst, selected, (1 + fts.SQRT3) * radius, tol=3 * prim.LENGTH_TOL)
    if (served < inst.multiplicity).any():
        raise errors.VerificationFailed("The supplier selection fails its re-verification")
    return {"solver": "suppliers", "selected": selected, "radius": radius, "multiplicity": inst.multiplicity,
            "service_radius": (1 + fts.SQRT3) * radius}


def solve_cmd(args, config):
    instance = _load(args)
    if args.suppliers:
        _emit(instance_io.dumps(_supplier_solution(instance, args)), args.out)
        return EXIT_OK
    solution = fw.solve(instance, config, relaxed=args.relax3r, rounds=args.rounds)
    report = fw.verify_solution(instance, solution.selected, solution.guaranteed_level, solution.bound)
    if not report.passed:
        raise errors.VerificationFailed("The solution fails its re-verification at target {}".format(
            report.failures[0]))
    logger.info("Selected %d of %d sensors, achieved level %.6f", len(solution), instance.m,
                solution.achieved_level)
    _emit(instance_io.write_solution(solution), args.out)
    return EXIT_OK


def verify_cmd(args, config):
    instance = _load(args)
    selected = instance_io.read_selection(args.solution)
    unknown = [i for i in selected if i not in {p.id for p in instance.sensors}]
    if len(unknown) > 0:
        raise errors.BadParams("The solution selects unknown sensors {}".format(unknown))
    level = instance.alpha * (1 - 1 / instance.delta) if args.level is None else args.level
    bound = instance.default_bound()
    if args.relax3r and bound is not None:
        bound = 3 * bound
    report = fw.verify_solution(instance, selected, level, bound)
    _emit(instance_io.dumps(report.to_dict()), args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def oracle_cmd(args, config):
    instance = _load(args)
    limit = config.oracle_limit if args.limit is None else args.limit
    selected, k_opt = oracle.exact_min_cover(instance, limit)
    _emit(instance_io.dumps({"k_opt": k_opt, "selected": selected}), args.out)
    return EXIT_OK


def bench_cmd(args, config):
    seeds = range(args.seed, args.seed + args.seeds)
    records = bench.run_bench(seeds, _gen_params(args), args.solvers, config, with_oracle=args.oracle,
                              progress=not args.quiet)
    if args.out is None:
        bench.write_csv(records, sys.stdout, args.timing)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as outfile:
            bench.write_csv(records, outfile, args.timing)
    return EXIT_OK


def render_cmd(args, config):
    instance = instance_io.read_instance(args.instance)
    selected = instance_io.read_selection(args.solution) if args.solution is not None else None
    svg = rd.render(instance, selected, args.target)
    _emit(svg, args.out)
    return EXIT_OK


COMMANDS = {"gen": gen_cmd, "solve": solve_cmd, "verify": verify_cmd, "oracle": oracle_cmd, "bench": bench_cmd,
            "render": render_cmd}


def exit_code(err):
    """ Maps an error to the exit code of the command line interface. """
    if isinstance(err, errors.Infeasible):
        return EXIT_INFEASIBLE
    if isinstance(err, BAD_INPUT_ERRORS + (OSError,)):
        return EXIT_BAD_INPUT
    return EXIT_FAILED


def report_error(err):
    payload = {"error": type(err).__name__, "message": str(err)}
    target_id = getattr(err, "target_id", None)
    if target_id is not None:
        payload["target"] = target_id
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")


def main(argv=None):
    """ Runs the command line interface and returns the exit code. """
    args = _parse_args(argv)
    helpers.configure_logging(filename=args.log_file, level=logging.INFO if args.verbose else logging.WARNING)
    config = SolverConfig(seed=args.seed)
    try:
        return COMMANDS[args.command](args, config)
    except (errors.AngcovError, OSError) as err:
        logger.debug(err, exc_info=True)
        report_error(err)
        return exit_code(err)


if __name__ == "__main__":
    sys.exit(main())
