"""Tests for angcov.app.bench."""

# Standard Library
import csv
import io
import math

# Third Party
import pytest

# Local
from angcov import errors
from angcov.app import bench
from angcov.config import SolverConfig
from angcov.coverage.instance import Instance
from angcov.geometry.primitives import Point2

ANGDIST = {"kind": "uniform", "m": 12, "n": 5, "variant": "angdist", "radius": 4.0}


def _csv(records, timing=False):
    buffer = io.StringIO()
    bench.write_csv(records, buffer, timing=timing)
    return buffer.getvalue()


#============================================
def test_one_row_per_seed_and_solver():
    records = bench.run_bench(range(3), ANGDIST, solvers=["iterate", "relax3r"], progress=False)
    assert [(r.instance_id, r.solver) for r in records] == [(0, "iterate"), (0, "relax3r"), (1, "iterate"),
                                                            (1, "relax3r"), (2, "iterate"), (2, "relax3r")]
    for record in records:
        assert record.status == "ok"
        assert record.size <= record.m
        assert record.achieved_level >= (1 - 1 / record.delta) * record.alpha - 1e-9
        assert record.wall_time >= 0
        bound = 4.0 if record.solver == "iterate" else 12.0
        assert record.max_distance <= bound + 1e-9


#============================================
def test_oracle_ratio():
    records = bench.run_bench([5], {"kind": "uniform", "m": 8, "n": 3}, with_oracle=True, progress=False)
    record = records[0]
    assert record.k_opt >= 2
    assert record.ratio() == pytest.approx(record.size / record.k_opt)


#============================================
def test_csv_is_deterministic():
    params = {"kind": "uniform", "m": 10, "n": 4}
    first = _csv(bench.run_bench(range(4), params, progress=False))
    second = _csv(bench.run_bench(range(4), params, config=SolverConfig(threads=3), progress=False))
    assert first == second
    rows = list(csv.reader(io.StringIO(first)))
    assert rows[0] == list(bench.COLUMNS)
    assert len(rows) == 5
    assert [row[0] for row in rows[1:]] == ["0", "1", "2", "3"]


#============================================
def test_timing_column():
    records = bench.run_bench([0], {"kind": "uniform", "m": 10, "n": 4}, progress=False)
    rows = list(csv.reader(io.StringIO(_csv(records, timing=True))))
    assert rows[0][-1] == "wall_time"
    assert len(rows[1]) == len(bench.COLUMNS) + 1
    assert float(rows[1][-1]) >= 0


#============================================
def test_failures_become_statuses():
    # the relaxed solver only runs on angdist instances
    records = bench.run_bench([0], {"kind": "uniform", "m": 10, "n": 4}, solvers=["relax3r"], progress=False)
    assert records[0].status == "error"
    assert records[0].size is None
    row = records[0].row()
    assert row[bench.COLUMNS.index("size")] == ""


#============================================
def test_infeasible_status(monkeypatch):
    sensors = [Point2(1, 0, 0), Point2(2, 0, 1), Point2(3, 0, 2)]
    collinear = Instance("ang", sensors, [Point2(0, 0, 0)], math.pi / 4)
    monkeypatch.setattr(bench.generators, "gen", lambda seed, **params: collinear)
    records = bench.run_bench([1], progress=False)
    assert records[0].status == "infeasible"


#============================================
def test_unknown_solver(cross_instance):
    with pytest.raises(errors.BadParams):
        bench.run_solver(cross_instance, "anneal", SolverConfig())
