"""Command-line interface: output formats, exit codes, determinism."""

import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"


def run_cli(*args, expect=0):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "quartic", *args],
        capture_output=True,
        env=env,
        timeout=300,
    )
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect}; stderr:\n"
        f"{proc.stderr.decode(errors='replace')}"
    )
    return proc


class TestFreq:
    def test_classical_order2(self):
        proc = run_cli(
            "freq", "--regime", "classical", "-m", "1", "-w", "1",
            "-l", "0.025", "-A", "1", "--order", "2",
        )
        doc = json.loads(proc.stdout)
        assert doc["schema"] == 1
        assert doc["Omega"] == pytest.approx(1.0366796875, rel=1e-12)
        assert doc["reduced"]["b"] == pytest.approx(0.1, rel=1e-12)
        assert doc["warnings"] == []

    def test_quantum_order1(self):
        proc = run_cli(
            "freq", "--regime", "quantum", "-l", "0.025", "-A", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["Omega"] == pytest.approx(1.02625, rel=1e-12)
        assert doc["reduced"]["b"] == pytest.approx(0.1 / 1.3, rel=1e-12)

    def test_quantum_truncated_b(self):
        proc = run_cli(
            "freq", "--regime", "quantum", "-l", "0.025",
            "--truncation", "first-order-hbar",
        )
        doc = json.loads(proc.stdout)
        assert doc["reduced"]["b"] == pytest.approx(0.07, rel=1e-12)

    def test_order3_is_usage_error(self):
        proc = run_cli("freq", "--order", "3", expect=2)
        assert b"usage" in proc.stderr.lower()

    def test_domain_error_exit1_with_stable_name(self):
        proc = run_cli(
            "freq", "--regime", "quantum", "-l", "-0.2", expect=1,
        )
        assert proc.stderr.decode().startswith("NonPositiveLinearCoefficient")

    def test_large_b_warning_recorded(self):
        proc = run_cli("freq", "-l", "0.5")
        doc = json.loads(proc.stdout)
        assert len(doc["warnings"]) == 1


class TestLindstedt:
    def test_table(self):
        proc = run_cli("lindstedt", "--order", "2")
        text = proc.stdout.decode()
        assert "3/8*A^2" in text
        assert "-21/256*A^4" in text
        assert "x_1(T)" in text

    def test_dump_round_trips(self):
        proc = run_cli("lindstedt", "--order", "3", "--dump")
        doc = json.loads(proc.stdout)
        assert doc["order"] == 3
        assert doc["omega_corrections"][0]["polynomial"] == [[2, 3, 8]]
        assert doc["omega_corrections"][1]["polynomial"] == [[4, -21, 256]]
        from quartic.trigpoly import TrigSeries

        x1 = TrigSeries.from_json_obj(doc["displacement_corrections"][1]["series"])
        assert x1.evaluate(1.0, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_evaluation_block(self):
        proc = run_cli("lindstedt", "--order", "2", "--dump", "--b", "0.1", "-A", "1")
        doc = json.loads(proc.stdout)
        assert doc["evaluation"]["Omega"] == pytest.approx(
            1.0366796875, rel=1e-12
        )

    def test_order_cap_exit1(self):
        proc = run_cli("lindstedt", "--order", "9", expect=1)
        assert proc.stderr.decode().startswith("OrderCapExceeded")


class TestSimulate:
    def test_csv_shape_and_precision(self):
        proc = run_cli(
            "simulate", "--s1", "1", "--s3", "0.1", "-A", "1",
            "--dt", "0.001", "--steps", "10",
        )
        lines = proc.stdout.decode().strip().split("\n")
        assert lines[0] == "tau,x,p,C"
        assert len(lines) == 12
        first = lines[1].split(",")
        assert first[0] == "0"
        assert first[1] == "1"
        # conserved C = 0.5 + 0.1/4 printed with 17 significant digits
        assert first[3] == "0.52500000000000002"

    def test_unbounded_motion_exit1(self):
        proc = run_cli(
            "simulate", "--s1", "1", "--s3", "-1", "-A", "1.5",
            "--dt", "0.001", "--steps", "30000", expect=1,
        )
        assert proc.stderr.decode().startswith("UnboundedMotion")

    def test_harmonic_column_values(self):
        proc = run_cli(
            "simulate", "--s1", "1", "--s3", "0", "-A", "1",
            "--dt", "0.01", "--steps", "700",
        )
        rows = [line.split(",") for line in proc.stdout.decode().strip().split("\n")[1:]]
        for row in rows[::70]:
            tau, x = float(row[0]), float(row[1])
            assert x == pytest.approx(math.cos(tau), abs=1e-9)


class TestSeparatrix:
    def test_double_well_report(self):
        proc = run_cli("separatrix", "--well", "double", "-b", "1", "-E", "2")
        doc = json.loads(proc.stdout)
        assert doc["turning_points"]["k_plus"] == 4.0
        assert doc["turning_points"]["radicand_residual"] < 1e-10
        assert doc["bound"]["A_max"] == 2.0
        assert doc["published_forms"]["radicand_at_published_root"] == 32.0
        assert doc["published_forms"]["A_max"] == pytest.approx(math.sqrt(2))
        assert doc["period"]["round_trip"] == pytest.approx(
            4.6856803365870805, rel=1e-10
        )

    def test_inverted_report(self):
        proc = run_cli("separatrix", "--well", "inverted", "-b", "1", "-A", "0.25")
        doc = json.loads(proc.stdout)
        assert doc["inputs"]["E"] == 0.25
        assert doc["bound"]["A_max"] == pytest.approx(0.46211715726, abs=1e-10)
        assert doc["period"]["closed_form"] == pytest.approx(
            2 * math.sqrt(2) * math.atanh(0.25), rel=1e-12
        )
        assert abs(doc["period"]["difference"]) < 1e-10

    def test_double_well_requires_energy(self):
        run_cli("separatrix", "--well", "double", "-b", "1", expect=2)

    def test_inverted_accepts_matching_energy_only(self):
        run_cli("separatrix", "--well", "inverted", "-b", "1", "-E", "0.25")
        run_cli(
            "separatrix", "--well", "inverted", "-b", "1", "-E", "0.3",
            expect=2,
        )

    def test_amplitude_beyond_turning_point(self):
        proc = run_cli(
            "separatrix", "--well", "double", "-b", "1", "-E", "2",
            "-A", "2.5", expect=1,
        )
        assert proc.stderr.decode().startswith("AmplitudeBeyondTurningPoint")


class TestIsochron:
    def test_quantum_first_order(self):
        proc = run_cli(
            "isochron", "--regime", "quantum", "--order", "1",
            "-m", "1", "-w", "1", "--hbar", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["lambda_star"] == pytest.approx(1.0 / 12.0, rel=1e-15)
        assert doc["verified_omega"] == pytest.approx(1.0, abs=1e-14)

    def test_classical_second_order(self):
        proc = run_cli(
            "isochron", "--regime", "classical", "--order", "2", "-A", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["lambda_star"] == pytest.approx(8.0 / 7.0, rel=1e-15)
        assert doc["verified_omega"] == pytest.approx(1.0, abs=1e-14)

    def test_classical_first_order_usage_error(self):
        run_cli("isochron", "--regime", "classical", "--order", "1", expect=2)

    def test_quantum_second_order_roots(self):
        proc = run_cli(
            "isochron", "--regime", "quantum", "--order", "2", "-A", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["feasible"] is True
        assert doc["roots"][0] == pytest.approx(0.0912515551618235, abs=1e-9)
        assert doc["roots"][1] == pytest.approx(0.5218436829334147, abs=1e-9)
        assert all(r < 1e-12 for r in doc["residuals"])

    def test_paper_literal_flag(self):
        proc = run_cli(
            "isochron", "--regime", "quantum", "--order", "2", "-A", "1",
            "--paper-literal",
        )
        doc = json.loads(proc.stdout)
        assert "published_feasibility_margin" in doc


class TestSweep:
    def test_frequency_sweep_softening(self):
        proc = run_cli(
            "sweep", "--target", "freq", "--grid", "lambda=0:0.08:9",
            "-m", "1", "-w", "1", "--hbar", "1", "-A", "1", "--order", "1",
        )
        lines = proc.stdout.decode().strip().split("\n")
        assert lines[0] == "lambda,Omega_CM,Omega_QM,error"
        assert len(lines) == 10
        for line in lines[1:]:
            fields = line.split(",")
            assert fields[3] == ""
            assert float(fields[2]) <= float(fields[1])

    def test_empty_grid(self):
        proc = run_cli("sweep", "--target", "freq", "--grid", "lambda=0:1:0")
        assert proc.stdout.decode() == "lambda,Omega_CM,Omega_QM,error\n"

    def test_error_rows_continue(self):
        proc = run_cli(
            "sweep", "--target", "bound", "--grid", "lambda=0.06:0.1:5",
        )
        lines = proc.stdout.decode().strip().split("\n")
        labels = [line.split(",")[-1] for line in lines[1:]]
        assert "NegativeTruncatedB" in labels
        assert "" in labels  # the small-lambda rows still succeed

    def test_two_grids_cartesian(self):
        proc = run_cli(
            "sweep", "--target", "freq", "--grid", "lambda=0.01:0.02:2",
            "--grid", "A=1:2:3",
        )
        lines = proc.stdout.decode().strip().split("\n")
        assert lines[0] == "lambda,A,Omega_CM,Omega_QM,error"
        assert len(lines) == 7
        first = lines[1].split(",")
        assert float(first[0]) == 0.01
        assert float(first[1]) == 1.0

    def test_bad_grid_spec(self):
        run_cli("sweep", "--grid", "lambda=0:1", expect=2)
        run_cli("sweep", "--grid", "q=0:1:3", expect=2)

    def test_duplicate_grid_names_rejected(self):
        run_cli(
            "sweep", "--grid", "lambda=0:1:3", "--grid", "lambda=0:1:3",
            expect=2,
        )


class TestValidateCli:
    def test_json_document(self):
        proc = run_cli("validate", "--json")
        doc = json.loads(proc.stdout)
        assert doc["schema"] == 1
        assert doc["total"] == 14
        assert doc["all_passed"] is True
        assert [c["id"] for c in doc["criteria"]] == list(range(1, 15))

    def test_failing_criterion_exits_1(self, monkeypatch, capsys):
        # a perturbed regression constant must surface as a failed line and
        # a nonzero exit, never silently
        from quartic import cli, validation

        broken = validation.CriterionResult(
            cid=1, title="exact expansion coefficients", passed=False,
            detail="O_2 = -20/256*A^4 does not match the certified value",
        )
        monkeypatch.setattr(cli.validation, "run_suite", lambda: [broken])
        code = cli.main(["validate"])
        out = capsys.readouterr().out
        assert code == 1
        assert "[FAIL]" in out

    def test_text_mode_prints_one_line_per_criterion(self):
        proc = run_cli("validate")
        lines = proc.stdout.decode().strip().split("\n")
        assert len(lines) == 15  # 14 criteria + summary
        assert all(line.startswith("[PASS]") for line in lines[:-1])
        assert lines[-1] == "14/14 criteria passed"


class TestDeterminism:
    def test_freq_byte_identical(self):
        args = ("freq", "--regime", "classical", "-l", "0.025", "--order", "2")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_sweep_byte_identical(self):
        args = ("sweep", "--target", "freq", "--grid", "lambda=0:0.08:9")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_simulate_byte_identical(self):
        args = ("simulate", "--s3", "0.1", "--dt", "0.001", "--steps", "200")
        assert run_cli(*args).stdout == run_cli(*args).stdout


class TestConfigFile:
    def test_config_preseeds_flags(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("order=2\nlambda=0.025\n")
        proc = run_cli("freq", "--config", str(config))
        doc = json.loads(proc.stdout)
        assert doc["inputs"]["order"] == 2
        assert doc["Omega"] == pytest.approx(1.0366796875, rel=1e-12)

    def test_explicit_flags_win(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("order=2\nlambda=0.025\n")
        proc = run_cli("freq", "--config", str(config), "--order", "1")
        doc = json.loads(proc.stdout)
        assert doc["Omega"] == pytest.approx(1.0375, rel=1e-12)

    def test_boolean_true_key(self, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("dump=true\norder=2\n")
        proc = run_cli("lindstedt", "--config", str(config))
        doc = json.loads(proc.stdout)
        assert doc["order"] == 2

    def test_missing_file_usage_error(self):
        run_cli("freq", "--config", "/nonexistent/x.cfg", expect=2)
