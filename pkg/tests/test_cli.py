"""Tests for angcov.app.cli."""

# Standard Library
import csv
import io
import json
import math

# Third Party
import pytest

# Local
from angcov import errors
from angcov.app import cli
from angcov.app import instance_io
from angcov.coverage.instance import Instance
from angcov.geometry.primitives import Point2


def _error(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


@pytest.fixture
def instance_file(tmp_path):
    path = tmp_path / "inst.json"
    assert cli.main(["gen", "--kind", "uniform", "--m", "14", "--n", "6", "--seed", "7", "--out", str(path)]) == 0
    return path


#============================================
def test_gen_solve_verify(tmp_path, instance_file, capsys):
    solution = tmp_path / "sol.json"
    assert cli.main(["solve", str(instance_file), "--out", str(solution)]) == cli.EXIT_OK
    data = json.loads(solution.read_text(encoding="utf-8"))
    assert data["solver"] == "iterate"
    assert data["achieved_level"] >= data["guaranteed_level"] - 1e-9
    assert cli.main(["verify", str(instance_file), str(solution)]) == cli.EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert report["level"] == pytest.approx(math.pi / 12)


#============================================
def test_gen_to_stdout(capsys):
    assert cli.main(["gen", "--m", "6", "--n", "2", "--seed", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["sensors"]) == 6
    assert data["provenance"]["seed"] == 1


#============================================
def test_verify_fails_for_an_empty_selection(tmp_path, instance_file, capsys):
    solution = tmp_path / "empty.json"
    solution.write_text(json.dumps({"selected": []}), encoding="utf-8")
    assert cli.main(["verify", str(instance_file), str(solution)]) == cli.EXIT_FAILED
    assert not json.loads(capsys.readouterr().out)["passed"]


#============================================
def test_verify_rejects_unknown_sensors(tmp_path, instance_file, capsys):
    solution = tmp_path / "bogus.json"
    solution.write_text(json.dumps({"selected": [0, 99]}), encoding="utf-8")
    assert cli.main(["verify", str(instance_file), str(solution)]) == cli.EXIT_BAD_INPUT
    assert _error(capsys)["error"] == "BadParams"


#============================================
def test_infeasible_oracle(tmp_path, capsys):
    sensors = [Point2(1, 0, 0), Point2(2, 0, 1), Point2(-1, 0, 2)]
    path = tmp_path / "collinear.json"
    instance_io.write_instance(Instance("ang", sensors, [Point2(0, 0, 0)], math.pi / 6), path)
    assert cli.main(["oracle", str(path)]) == cli.EXIT_INFEASIBLE
    payload = _error(capsys)
    assert payload["error"] == "Infeasible"
    assert payload["target"] == 0


#============================================
def test_oracle(instance_file, capsys):
    assert cli.main(["oracle", str(instance_file)]) == cli.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["k_opt"] == len(data["selected"])


#============================================
def test_missing_file(tmp_path, capsys):
    assert cli.main(["solve", str(tmp_path / "absent.json")]) == cli.EXIT_BAD_INPUT
    assert _error(capsys)["error"] == "FileNotFoundError"


#============================================
def test_alpha_override_above_sixty_degrees(instance_file, capsys):
    assert cli.main(["solve", str(instance_file), "--alpha", "1.2"]) == cli.EXIT_BAD_INPUT
    assert _error(capsys)["error"] == "BadParams"


#============================================
def test_relaxed_solve(tmp_path, capsys):
    path = tmp_path / "angdist.json"
    assert cli.main(["gen", "--variant", "angdist", "--radius", "4", "--m", "16", "--n", "5", "--out", str(path)]) == 0
    assert cli.main(["solve", str(path), "--relax3r"]) == cli.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["solver"] == "relax3r"
    assert data["bound"] == pytest.approx(12.0)


#============================================
def test_supplier_solve(tmp_path, capsys):
    path = tmp_path / "angdist.json"
    assert cli.main(["gen", "--variant", "angdist", "--radius", "4", "--m", "16", "--n", "5", "--out", str(path)]) == 0
    assert cli.main(["solve", str(path), "--suppliers", "--k", "6"]) == cli.EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["solver"] == "suppliers"
    assert 2 <= len(data["selected"]) <= 6
    assert data["service_radius"] == pytest.approx((1 + math.sqrt(3)) * data["radius"])


#============================================
def test_bench_csv(tmp_path):
    out = tmp_path / "bench.csv"
    assert cli.main(["bench", "--m", "10", "--n", "4", "--seeds", "3", "--seed", "5", "--quiet", "--out", str(out)]) == 0
    rows = list(csv.reader(io.StringIO(out.read_text(encoding="utf-8"))))
    assert rows[0][0] == "instance"
    assert [row[0] for row in rows[1:]] == ["5", "6", "7"]


#============================================
def test_render(tmp_path, instance_file):
    out = tmp_path / "inst.svg"
    assert cli.main(["render", str(instance_file), "--out", str(out)]) == 0
    assert "<svg" in out.read_text(encoding="utf-8")


#============================================
def test_exit_codes():
    assert cli.exit_code(errors.InfeasibleBudget("no")) == cli.EXIT_INFEASIBLE
    assert cli.exit_code(errors.ZeroAngle("zero")) == cli.EXIT_BAD_INPUT
    assert cli.exit_code(errors.VerificationFailed("bad")) == cli.EXIT_FAILED
    assert cli.exit_code(errors.NoHittingSet("none")) == cli.EXIT_FAILED
