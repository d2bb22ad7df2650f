import json
import subprocess
import sys
import time

import pytest

from mvweyl import cli
from mvweyl.checks import CHECKS, SCHEMA, ConfigError, RunConfig, run


def _run(tmp_path, *argv, name="r.json"):
    out = tmp_path / name
    code = cli.main([*argv, "--out", str(out), "--no-timings"])
    return code, (json.loads(out.read_text()) if out.exists() else None), out


def test_verify_all_d2_passes(tmp_path):
    code, rep, _ = _run(tmp_path, "verify-all", "--d", "2", "--lattice-samples", "10")
    assert code == 0
    assert rep["overall"] == "PASS"
    assert rep["schema"] == SCHEMA
    assert set(rep["checks"]) == set(CHECKS)
    assert "timings" not in rep


def test_conjecture_only_d2_is_fast(tmp_path):
    t = time.perf_counter()
    code, rep, _ = _run(tmp_path, "check-conjecture", "--d", "2")
    assert code == 0
    assert time.perf_counter() - t < 1.0
    assert list(rep["checks"]) == ["conjecture"]


def test_verify_all_d3_reports_the_equivariant_verdict(tmp_path, capsys):
    code, rep, _ = _run(tmp_path, "verify-all", "--d", "3", "--lattice-samples", "10")
    not_passing = {
        (name, lam): v["verdict"]
        for name, block in rep["checks"].items()
        if "verdict" not in block
        for lam, v in block.items()
        if v["verdict"] not in ("PASS", "PASS-PROJECTIVE")
    }
    assert not_passing == {("conjecture", "2,1"): "PASS-EQUIVARIANT"}
    assert all(v["verdict"] == "PASS" for v in rep["checks"].values() if "verdict" in v)
    assert rep["overall"] == "PASS-EQUIVARIANT"
    assert code == 1
    assert "overall: PASS-EQUIVARIANT" in capsys.readouterr().out


def test_malformed_lambda_is_config_error(tmp_path):
    assert cli.main(["orbital", "--d", "3", "--lambda", "2,2"]) == 2
    assert cli.main(["orbital", "--d", "3", "--lambda", "x,1"]) == 2
    assert cli.main(["orbital", "--d", "9"]) == 2
    assert cli.main(["verify-all", "--d", "3", "--checks", "nonsense"]) == 2


def test_budget_exit_code():
    assert cli.main(["orbital", "--d", "4", "--lambda", "2,2", "--groebner-pair-cap", "1"]) == 3


def test_determinism_across_runs_and_jobs(tmp_path):
    args = ["verify-all", "--d", "3", "--lattice-samples", "10", "--seed", "7"]
    _, _, a = _run(tmp_path, *args, name="a.json")
    _, _, b = _run(tmp_path, *args, name="b.json")
    _, _, c = _run(tmp_path, *args, "--jobs", "3", name="c.json")
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()


def test_seed_changes_samples_not_verdicts(tmp_path):
    _, r1, _ = _run(tmp_path, "lattice-check", "--d", "3", "--seed", "1", "--lattice-samples", "5", name="s1.json")
    _, r2, _ = _run(tmp_path, "lattice-check", "--d", "3", "--seed", "2", "--lattice-samples", "5", name="s2.json")
    assert r1["config"]["seed"] == 1 and r2["config"]["seed"] == 2
    assert r1["overall"] == r2["overall"] == "PASS"


def test_report_has_timings_by_default(tmp_path):
    out = tmp_path / "t.json"
    assert cli.main(["verify-relations", "--d", "2", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert set(rep["timings"]) == {"relations", "schurweyl-match"}
    assert rep["checks"]["relations"]["literal_sign_rule_holds"] is True


def test_run_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(d=0).validate()
    with pytest.raises(ConfigError):
        RunConfig(d=3, seed=-1).validate()
    with pytest.raises(ConfigError):
        RunConfig(d=3, jobs=0).validate()
    rep = run(RunConfig(d=1, checks=("convolution", "orbital")))
    assert rep.overall == "PASS"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "mvweyl", "verify-convolution", "--d", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "convolution: PASS" in res.stdout
