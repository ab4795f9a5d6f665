import json
import subprocess
import sys
from pathlib import Path

import pytest

from xmod import cli

CATALOG = Path(__file__).resolve().parent.parent / "catalog"
RUNS = json.loads((CATALOG / "manifest.json").read_text())["runs"]


def invoke(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_manifest_exists():
    assert len(RUNS) >= 50


@pytest.mark.parametrize("run", [r for r in RUNS if r["command"] != "check-2cat"],
                         ids=lambda r: f"{r['command']}:{r['inputs'][0]}")
def test_manifest_exit_codes(run, capsys, monkeypatch):
    monkeypatch.chdir(CATALOG)
    code, report, _ = invoke(capsys, run["command"], *run["inputs"], *run["flags"])
    assert code == run["expect_exit"]
    assert report["status"] == ["pass", "fail"][code]
    assert "timing_ms" not in report


def test_fault_reports(capsys):
    code, rep, _ = invoke(capsys, "verify-xmod", CATALOG / "s3_id_trivial_action.json")
    assert code == 1 and rep["details"]["error"] == "PeifferFails"
    code, rep, _ = invoke(capsys, "symmetric", CATALOG / "semion.json")
    assert rep["details"]["witness"] == {"pair": [1, 1], "double_braiding_phase": 2}
    code, rep, _ = invoke(capsys, "enumerate-pnts", CATALOG / "pnts_z2_identity.json")
    assert rep["details"]["gammas"] == [[0, 0], [0, 1]]


def test_errors_exit_two(tmp_path, capsys):
    code, rep, _ = invoke(capsys, "verify-group", tmp_path / "missing.json")
    assert code == 2 and rep["details"]["error"] == "ParseError"
    bad = tmp_path / "bad.json"
    bad.write_text('{"order": 2,\n "table": [[0, 1], [1, 0]')
    code, rep, _ = invoke(capsys, "verify-group", bad)
    assert code == 2 and rep["details"]["line"] == 2
    (tmp_path / "schema.json").write_text('{"order": 2}')
    code, rep, _ = invoke(capsys, "verify-group", tmp_path / "schema.json")
    assert code == 2 and rep["details"] == {"error": "SchemaError", "field": "table",
                                            "message": "missing or invalid field 'table'"}
    code, rep, _ = invoke(capsys, "enumerate-pnts", CATALOG / "pnts_a3_s3_identity.json", "--budget", "1")
    assert code == 2 and rep["details"]["error"] == "BudgetExceeded"


def test_timing_is_opt_in(capsys):
    _, rep, _ = invoke(capsys, "verify-group", CATALOG / "s3.json", "--timing")
    assert rep["timing_ms"] >= 0


def test_repeated_runs_identical(capsys):
    outs = {invoke(capsys, "hexagon", CATALOG / "semion_bad_h.json", "--pretty")[2] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "xmod", "verify-cocycle", "super.json"], cwd=CATALOG,
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["status"] == "pass"
