import io
import json
import subprocess
import sys

import pytest

import tridkit.cli as cli
from tridkit.cli import EXIT_OK, EXIT_SINGULAR, EXIT_USAGE, EXIT_VERIFY, run_cli
from tridkit.verify import VerifyReport

SINGULAR4 = "4\n2 2 2 -3\n-1 1 3\n-2 1 -1\n"
SYM4 = "4\n25 13 5 1\n-9 -4 -1\n-9 -4 -1\n"


def run(argv, text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(argv, stdin=io.StringIO(text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def sym4_file(tmp_path):
    p = tmp_path / "sym4.txt"
    p.write_text(SYM4)
    return str(p)


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("TRIDKIT_MODE", raising=False)


def test_det_singular_is_zero():
    assert run(["det"], SINGULAR4)[:2] == (EXIT_OK, "0\n")
    assert run(["det", "--mode", "rational", "-"], SINGULAR4)[:2] == (EXIT_OK, "0\n")


def test_inv_singular():
    code, out, _ = run(["inv", "--mode", "rational"], SINGULAR4)
    assert (code, out) == (EXIT_SINGULAR, "SINGULAR\n")
    assert run(["factors"], SINGULAR4)[0] == EXIT_SINGULAR


def test_inv_rational_file(sym4_file):
    code, out, _ = run(["inv", "--mode", "rational", sym4_file])
    assert code == EXIT_OK
    assert out.splitlines() == [
        "1/16 1/16 1/16 1/16",
        "1/16 25/144 25/144 25/144",
        "1/16 25/144 61/144 61/144",
        "1/16 25/144 61/144 205/144",
    ]


def test_det_double_digits(sym4_file):
    assert run(["det", sym4_file])[1] == "576\n"
    assert run(["det"], "1\n0.1\n")[1] == "0.10000000000000001\n"


def test_formats(sym4_file):
    code, out, _ = run(["inv", "--format", "json", "--mode", "rational", sym4_file])
    doc = json.loads(out)
    assert doc["delta"] == "576" and doc["alpha"][3][3] == "205/144"
    code, out, _ = run(["inv", "--format", "csv", sym4_file])
    assert out.splitlines()[0] == "0.0625,0.0625,0.0625,0.0625"
    assert json.loads(run(["det", "--format", "json", sym4_file])[1]) == {"n": 4, "det": 576.0}
    assert run(["det", "--format", "csv", sym4_file])[1] == "det\n576\n"


def test_factors(sym4_file):
    code, out, _ = run(["factors", "--mode", "rational", sym4_file])
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "R" and lines[5] == "S"
    assert len(lines) == 10
    doc = json.loads(run(["factors", "--format", "json", "--mode", "rational", sym4_file])[1])
    assert set(doc) == {"delta", "R", "S"}


def test_verify_passes(sym4_file):
    code, out, _ = run(["verify", sym4_file])
    assert code == EXIT_OK
    assert all(line.startswith("PASS") for line in out.splitlines())
    assert run(["verify", "--mode", "rational"], SINGULAR4)[0] == EXIT_OK
    assert json.loads(run(["verify", "--format", "json", sym4_file])[1])["passed"] is True


def test_verify_failure_exit(monkeypatch, sym4_file):
    def failing(A, tol):
        report = VerifyReport()
        report.add("forced", False, "mismatch")
        return report

    monkeypatch.setattr(cli, "verify_matrix", failing)
    code, out, _ = run(["verify", sym4_file])
    assert code == EXIT_VERIFY and out == "FAIL forced (mismatch)\n"


def test_env_mode(monkeypatch, sym4_file):
    monkeypatch.setenv("TRIDKIT_MODE", "rational")
    assert run(["inv", sym4_file])[1].startswith("1/16")
    assert run(["inv", "--mode", "double", sym4_file])[1].startswith("0.0625")


def test_bench_csv():
    code, out, _ = run(["bench", "--sizes", "8,16", "--reps", "1", "--ops", "determinant,invert"])
    rows = out.splitlines()
    assert code == EXIT_OK
    assert rows[0] == "n,op,flops,nanos,reps"
    assert [r.split(",")[:2] for r in rows[1:]] == [
        ["8", "determinant"], ["8", "invert"], ["16", "determinant"], ["16", "invert"]]
    doc = json.loads(run(["bench", "--sizes", "4", "--reps", "1", "--format", "json"])[1])
    assert [r["op"] for r in doc] == ["determinant", "invert", "dense_inverse"]


@pytest.mark.parametrize("argv, text", [
    ([], ""),
    (["frobnicate"], ""),
    (["det", "--mode", "quad"], SYM4),
    (["det"], "4\n1 2 3\n1 1 1\n1 1 1\n"),
    (["det"], "x\n"),
    (["det", "/nonexistent/file.txt"], ""),
    (["bench", "--sizes", "a,b"], ""),
    (["bench", "--sizes", "8", "--ops", "sort"], ""),
])
def test_usage_and_parse_errors(argv, text):
    code, out, err = run(argv, text)
    assert code == EXIT_USAGE
    assert err.startswith("tridkit: error:")


def test_parse_error_reports_line():
    err = run(["det"], "3\n1 x 3\n1 2\n1 2\n")[2]
    assert "line 2" in err


def test_console_entry_point(sym4_file):
    proc = subprocess.run([sys.executable, "-m", "tridkit.cli", "det", sym4_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "576\n"
