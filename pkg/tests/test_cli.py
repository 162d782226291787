import json
import os

import pytest
from click.testing import CliRunner

from orlab.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


GRID = "64,4096"  # small grid keeps CLI tests fast
SC_GRID = {"L": 64, "N": 4096}


def test_growth_check_json(runner):
    r = runner.invoke(main, ["growth", "check", "--phi", "power:p=2"])
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert d["delta2"]["satisfied"] and d["nabla2"]["satisfied"]


def test_norm_power2_matches_l2(runner):
    r = runner.invoke(main, ["norm", "--phi", "power:p=2",
                             "--fn", "gauss", "--grid", GRID])
    assert r.exit_code == 0
    d = json.loads(r.output)
    # ||e^{-x^2}||_2 = (pi/2)^{1/4}.
    assert d["value"] == pytest.approx((3.14159265 / 2.0) ** 0.25, rel=1e-3)


def test_maximal_exact_rect(runner):
    r = runner.invoke(main, ["maximal", "--op", "hl", "--fn", "rect:a=0,b=1",
                             "--grid", GRID, "--at", "2.0"])
    assert r.exit_code == 0
    assert float(r.output.strip().splitlines()[0]) == pytest.approx(
        0.5, rel=1e-12)


def test_verify_scenario_file_pass(runner, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"id": "t", "command": "verify:poisson",
                             "phi": "power:p=2", "fn": "gauss",
                             "grid": SC_GRID}))
    r = runner.invoke(main, ["verify", "poisson", "--scenario", str(p)])
    assert r.exit_code == 0, r.output
    d = json.loads(r.stdout)
    assert d["overall"] is True


def test_verify_failure_exits_2(runner, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({
        "id": "t", "command": "verify:poisson", "phi": "power:p=2",
        "fn": "gauss", "grid": SC_GRID,
        "tolerances": {"isometry_rel": 1e-15}}))
    r = runner.invoke(main, ["verify", "poisson", "--scenario", str(p)])
    assert r.exit_code == 2
    d = json.loads(r.stdout)
    assert d["overall"] is False


def test_unknown_scenario_key_exits_1(runner, tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"id": "t", "command": "verify:poisson",
                             "phi": "power:p=2", "gird": SC_GRID}))
    r = runner.invoke(main, ["verify", "poisson", "--scenario", str(p)])
    assert r.exit_code == 1
    assert "gird" in r.output or "gird" in (r.stderr or "")


def test_malformed_json_exits_1(runner, tmp_path):
    p = tmp_path / "s.json"
    p.write_text("{not json")
    r = runner.invoke(main, ["verify", "poisson", "--scenario", str(p)])
    assert r.exit_code == 1


def test_unknown_fn_exits_1(runner):
    r = runner.invoke(main, ["norm", "--phi", "power:p=2",
                             "--fn", "mystery", "--grid", GRID])
    assert r.exit_code == 1


def test_counterexample_command(runner):
    r = runner.invoke(main, ["counterexample", "--phi1", "tlog",
                             "--phi2", "tlog", "--terms", "3"])
    assert r.exit_code == 0
    d = json.loads(r.output)
    assert len(d["terms"]) == 3
    assert d["maximal_lower_ratios"][-1] > 1.0


def test_counterexample_gate_exits_1(runner):
    r = runner.invoke(main, ["counterexample", "--phi1", "power:p=3",
                             "--phi2", "power:p=2"])
    assert r.exit_code == 1


def test_svg_output(runner, tmp_path):
    out = tmp_path / "plot.svg"
    r = runner.invoke(main, ["counterexample", "--phi1", "tlog",
                             "--phi2", "tlog", "--terms", "3",
                             "--svg", str(out)])
    assert r.exit_code == 0
    content = out.read_text()
    assert content.lstrip().startswith("<?xml")


def test_deterministic_output(runner):
    args = ["norm", "--phi", "power:p=2", "--fn", "gauss", "--grid", GRID]
    a = runner.invoke(main, args).output
    b = runner.invoke(main, args).output
    assert a == b
