import csv
import io
import json
import subprocess
import sys

import pytest

from padic_hypergeom import cli
from padic_hypergeom import verify as vf


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_family_value_six(capsys):
    code, out, _ = run(capsys, "eval", "--family", "g3n", "--n", "1", "--p", "7", "--t", "1")
    data = json.loads(out)
    assert code == 0
    assert data["recognized"] == "1"
    assert data["valuation"] == 0 and data["digits"] == [1, 0, 0]


def test_eval_explicit_rows(capsys):
    code, out, _ = run(capsys, "eval", "--upper", "1/6,5/6", "--lower", "0,1/2", "--p", "13", "--t", "1")
    assert code == 0 and json.loads(out)["recognized"] == "1"


def test_eval_trivial_zero(capsys):
    code, out, _ = run(capsys, "eval", "--family", "g3n", "--n", "1", "--p", "7", "--t", "0")
    data = json.loads(out)
    assert code == 0 and data["recognized"] == "0" and data["valuation"] is None


def test_eval_fractional_value(capsys):
    # n = 2 values carry a 1/p part
    code, out, _ = run(capsys, "eval", "--family", "g3n", "--n", "2", "--p", "7", "--t", "1")
    data = json.loads(out)
    assert code == 0 and data["valuation"] == -1 and data["recognized"].endswith("/7")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "cor_sv2", "--p", "4"],
        ["verify", "--suite", "cor_sv2", "--p", "3..11"],
        ["verify", "--suite", "nonsense", "--p", "7"],
        ["verify", "--suite", "thm_general1", "--p", "7", "--n", "2", "--precision", "3"],
        ["verify", "--p", "7", "--n", "0..2"],
        ["eval", "--family", "g3n", "--p", "7..11", "--t", "1"],
        ["eval", "--p", "7", "--t", "1"],
        ["eval", "--family", "g3n", "--n", "3", "--p", "7", "--t", "1"],
        ["table", "--p", "x"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_kummer_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm_kummer", "--p", "7")
    data = json.loads(out)
    assert code == 0
    assert [r["t"] for r in data["records"]] == [2, 3, 4, 5, 6]
    assert data["summary"] == {"total": 5, "passed": 5, "failed": 0}
    assert set(data) == {"config", "records", "summary"}


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cor_sv2", "--p", "5..7", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4 + 6
    header = out.splitlines()[0].split(",")
    assert header[:9] == ["suite_id", "p", "n", "t", "pass", "precision_digits", "lhs", "rhs", "runtime_micros"]
    assert all(r["pass"] == "true" for r in rows)


def test_jobs_do_not_change_output(capsys):
    argv = ["verify", "--suite", "thm_general1,prop31,cor_range", "--p", "5..13", "--n", "1..2"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "3")
    assert serial == parallel


def test_failed_record_exits_1(capsys, monkeypatch):
    def broken(ctx, timings=False):
        return [vf.VerificationRecord("cor_sv2", ctx.p, 1, 1, "forced", 0, 1, False, 4)]

    monkeypatch.setattr(vf, "verify_cor_sv2", broken)
    code, out, _ = run(capsys, "verify", "--suite", "cor_sv2", "--p", "7")
    assert code == 1 and json.loads(out)["summary"]["failed"] == 1


def test_scan_zeros(capsys):
    code, out, _ = run(capsys, "scan-zeros", "--n", "1", "--p", "7..31")
    zeros = json.loads(out)["zeros"]
    assert code == 0
    assert {"p": 7, "n": 1, "t": 2, "r": 1, "witness_ok": True} in zeros
    assert all(z["r"] == 1 for z in zeros)
    code, out, _ = run(capsys, "scan-zeros", "--n", "2", "--p", "7..31")
    assert code == 0 and json.loads(out)["zeros"] == []


def test_table_gtilde(capsys):
    code, out, _ = run(capsys, "table", "--family", "gtilde", "--p", "7", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 7
    assert {int(r["recognized"]) for r in rows} <= {-2, -1, 0, 1, 2}


def test_output_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUT_DIR_ENV, str(tmp_path))
    _, out, _ = run(capsys, "table", "--family", "g3n", "--p", "5", "--format", "json")
    assert (tmp_path / "table.json").read_text(encoding="utf-8") == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "padic_hypergeom", "verify", "--suite", "cor_sv2", "--p", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "padic_hypergeom", "eval", "--family", "gtilde", "--p", "13", "--t", "1", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[1].endswith(",1")
