from __future__ import annotations

import json
import subprocess
import sys

import pytest

from degprinc.cli import EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_degrees(capsys):
    code, out, _ = run(capsys, "degrees", "H4")
    assert code == EXIT_OK and json.loads(out)["degrees"] == [2, 12, 20, 30]
    code, out, _ = run(capsys, "degrees", "H4", "--format", "text")
    assert out.strip() == "2,12,20,30"


def test_stratum_dim(capsys):
    code, out, _ = run(capsys, "stratum-dim", "D5", "1,1,1,1,0", "--format", "text")
    assert code == EXIT_OK and out.strip() == "2"
    code, _, err = run(capsys, "stratum-dim", "D5", "1,1")
    assert code == EXIT_USAGE and "R^5" in err


def test_table_for_f4(capsys):
    code, out, _ = run(capsys, "table1", "F4")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["group"] == "F4"
    assert [r["W"] for r in doc["rows"]] == ["A1", "B2", "B3", "F4"]
    code, out, _ = run(capsys, "table1", "F4", "--format", "text")
    assert out.splitlines()[0] == "F4"


def test_parnum_and_secparnum(capsys):
    _, out, _ = run(capsys, "parnum", "D5", "4")
    assert json.loads(out)["W"] == "A2"
    _, out, _ = run(capsys, "secparnum", "B4", "2", "--format", "text")
    assert out.strip() == "2"


def test_solve_exit_codes(capsys):
    code, out, _ = run(capsys, "solve", "--group", "A2", "--objective", "y3",
                       "--constraint", "principal:0,1")
    assert code == EXIT_OK and json.loads(out)["value"] == pytest.approx(-0.408248290464)
    code, out, _ = run(capsys, "solve", "--group", "B2", "--constraint", "principal:1,2",
                       "--sense", "feasible")
    assert code == EXIT_INFEASIBLE and json.loads(out)["status"] == "infeasible-numerically"
    code, _, err = run(capsys, "solve", "--group", "B3")
    assert code == EXIT_USAGE and "--objective" in err


def test_usage_and_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "degrees", "Q7")[0] == EXIT_USAGE
    assert run(capsys, "solve", "--group", "B3", "--objective", "y2",
               "--constraint", "none")[0] == 1
    assert run(capsys, "--version")[0] == 0


def test_nonneg_and_lie(capsys):
    code, out, _ = run(capsys, "nonneg", "--group", "B3", "--objective", "y2 - 1/3*y1^2",
                       "--sphere", "1")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "nonneg"
    code, out, _ = run(capsys, "lie-solve", "--kind", "so", "--n", "4", "--objective", "pf",
                       "--target", "t2=-2", "--sense", "max")
    assert code == EXIT_OK and json.loads(out)["value"] == pytest.approx(0.5)
    assert run(capsys, "lie-solve", "--kind", "sl", "--n", "3", "--objective", "t3",
               "--target", "t2")[0] == EXIT_USAGE


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "f4-certificate")
    assert "timing" not in out and json.loads(out)["max"] == "3/2"
    _, out, _ = run(capsys, "f4-certificate", "--timing")
    assert "timing" in json.loads(out)


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "degprinc", "solve", "--group", "D4", "--objective",
           "y3 - y2^2 + y4", "--constraint", "sphere:1", "--seed", "5"]
    a, b = (subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2))
    assert a == b and json.loads(a)["status"] == "solved"


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--criteria", "3,7", "--format", "text")
    assert code == EXIT_OK
    assert [line[:6] for line in out.splitlines()] == ["[PASS]", "[PASS]"]
