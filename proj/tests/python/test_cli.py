"""End-to-end CLI checks driven through subprocess."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("DEDSYM_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="DEDSYM_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_eval_values():
    assert run("eval", "E:10:5", "--h", "1", "--k", "0").stdout.strip() == "-6/691"
    assert run("eval", "F:10", "--h", "2", "--k", "1").stdout.strip() == "1024"
    assert run("eval", "G:2", "--h", "4", "--k", "6").stdout.strip() == "4"


def test_eval_exit_codes():
    assert run("eval", "E:10:5", "--h", "1", "--k", "0").returncode == 0
    assert run("eval", "bogus", "--h", "1", "--k", "0").returncode == 2
    assert run("eval", "E:10:12", "--h", "1", "--k", "0").returncode == 1
    assert run("eval", "E:10:5", "--h", "0", "--k", "0").returncode == 1


def test_eval_json_record():
    result = run("--json", "eval", "E:10:5", "--h", "1", "--k", "0")
    record = json.loads(result.stdout)
    assert record["command"] == "eval"
    assert record["inputs"] == {"symbol": "E:10:5", "h": 1, "k": 0}
    assert record["result"] == "-6/691"
    assert record["elapsed_ms"] >= 0


def test_tau_routes():
    both = run("tau", "--ell", "10", "--m", "2", "--route", "both")
    assert both.returncode == 0
    lines = dict(line.split(" ", 1) for line in both.stdout.splitlines())
    assert lines["hecke"] == "-24"
    assert lines["closed"] == "-24"
    assert lines["oracle"] == "-24"
    assert lines["agreement"] == "true"

    hecke_only = run("tau", "--ell", "10", "--m", "1", "--route", "hecke")
    assert hecke_only.stdout.strip() == "1"

    composite_closed = run("tau", "--ell", "10", "--m", "4", "--route", "closed")
    assert composite_closed.returncode == 2


def test_oracle_dump():
    result = run("oracle", "--ell", "10", "--qtrunc", "2")
    assert json.loads(result.stdout) == [0, 1, -24]
    assert json.loads(run("oracle", "--ell", "10", "--qtrunc", "1").stdout) == [0, 1]
    assert json.loads(run("oracle", "--ell", "16", "--qtrunc", "2").stdout) == [0, 1, -528]


def test_verify_filters_and_exit_codes():
    good = run("verify", "--suite", "cocycle")
    assert good.returncode == 0
    report = json.loads(good.stdout)
    assert report and all(entry["passed"] for entry in report)

    missing = run("verify", "--suite", "nonexistent")
    assert missing.returncode == 2


def test_verify_deterministic_across_threads():
    one = run("--threads", "1", "verify", "--suite", "kpr")
    four = run("--threads", "4", "verify", "--suite", "kpr")
    assert one.returncode == 0 and four.returncode == 0
    assert one.stdout == four.stdout


def test_identical_invocations_are_byte_identical():
    first = run("eval", "E:12:3", "--h", "3", "--k", "-2")
    second = run("eval", "E:12:3", "--h", "3", "--k", "-2")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert run("oracle", "--ell", "24", "--qtrunc", "8").stdout == \
        run("oracle", "--ell", "24", "--qtrunc", "8").stdout


def test_verify_out_file(tmp_path):
    target = tmp_path / "report.json"
    result = run("verify", "--suite", "trivial_kernel", "--out", str(target))
    assert result.returncode == 0
    report = json.loads(target.read_text())
    assert all(entry["passed"] for entry in report)
