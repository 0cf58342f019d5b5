import json
import subprocess
import sys

import pytest

from qpa.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sector_command(capsys):
    code, out, _ = run_cli(
        capsys, "sector", "--shape", "2,0", "--k", "1", "--m", "2",
        "--spectrum", "3/4,1/4",
    )
    assert code == 0
    assert json.loads(out)["fidelity"] == "9/13"


def test_sector_command_one_site(capsys):
    code, out, _ = run_cli(
        capsys, "sector", "--shape", "1,1", "--k", "1", "--m", "1",
        "--spectrum", "1/2,1/2",
    )
    assert code == 0
    assert json.loads(out)["fidelity"] == "1/2"


def test_missing_spectrum_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["sector", "--shape", "2,0", "--k", "1", "--m", "2"])
    assert err.value.code == 2


def test_bad_spectrum_is_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "sector", "--shape", "2,0", "--k", "1", "--m", "1",
        "--spectrum", "3/4,nope",
    )
    assert code == 2
    assert "column" in err


def test_overall_command(capsys):
    code, out, _ = run_cli(
        capsys, "overall", "--n", "2", "--d", "2", "--k", "1", "--m", "1",
        "--spectrum", "3/4,1/4",
    )
    assert code == 0
    body = json.loads(out)
    assert body["overall"] == "3/4"
    assert body["rule"] == "overhang"


def test_overall_pure_benchmark(capsys):
    code, out, _ = run_cli(
        capsys, "overall", "--n", "1", "--d", "2", "--k", "1", "--m", "2",
        "--spectrum", "1,0", "--objective", "one",
    )
    assert code == 0
    assert json.loads(out)["overall"] == "5/6"


def test_output_is_byte_identical_across_runs(capsys):
    args = ["overall", "--n", "3", "--d", "2", "--k", "1", "--m", "1",
            "--spectrum", "3/4,1/4", "--rule", "optimal"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_worker_pool_output_matches_serial(capsys):
    base = ["overall", "--n", "4", "--d", "2", "--k", "1", "--m", "1",
            "--spectrum", "3/4,1/4"]
    _, serial, _ = run_cli(capsys, *base, "--workers", "1")
    _, pooled, _ = run_cli(capsys, *base, "--workers", "2")
    assert serial == pooled


def test_asymptote_command(capsys):
    code, out, _ = run_cli(
        capsys, "asymptote", "--kind", "intensive", "--spectrum", "3/4,1/4",
        "--k", "1", "--m", "1", "--n", "100",
    )
    assert code == 0
    assert abs(json.loads(out)["value"] - 0.01) < 1e-12


def test_phase_diagram_csv(capsys, tmp_path):
    out_path = tmp_path / "table.csv"
    code, _, _ = run_cli(
        capsys, "phase-diagram", "--family", "depolarized", "--d", "3", "--k", "1",
        "--lambdas", "0.5", "--R-grid", "0.1,0.6", "--output", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "lambda,R,fidelity,phase"
    assert len(lines) == 3


def test_phase_diagram_inf_dimension(capsys):
    code, out, _ = run_cli(
        capsys, "phase-diagram", "--d", "inf", "--lambdas", "0.5",
        "--R-grid", "0.2,0.9", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[1]["fidelity"] == 0.0


def test_verify_command_green(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "f-symbols", "--max-n", "4")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "unknown suite" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    from qpa import verify

    def failing_suite(**kwargs):
        return verify.Verdict(
            "stub", False, 1, 1, {"sigma": "2,0", "detail": "forced"}, seed=0
        )

    monkeypatch.setitem(verify.SUITES, "stub", failing_suite)
    code, out, _ = run_cli(capsys, "verify", "--suite", "stub")
    assert code == 1
    body = json.loads(out)
    assert body["passed"] is False
    assert body["counterexample"]["detail"] == "forced"


def test_verify_seeded_deterministic(capsys):
    args = ["verify", "--suite", "monotonicity", "--cases", "40", "--seed", "7"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qpa.cli", "sector", "--shape", "2,0", "--k", "1",
         "--m", "2", "--spectrum", "3/4,1/4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["fidelity"] == "9/13"
