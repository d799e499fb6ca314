"""Acceptance suite: one test per criterion, each printing its pass/fail line.

Run with ``pytest -s tests/test_acceptance.py`` to see every line; the same
checks back the ``quartic validate`` subcommand.  Criterion 14 is additionally
exercised end-to-end here with real subprocesses (including ``validate
--json`` twice), which the in-process suite cannot do without recursing.
"""

import os
import subprocess
import sys
from pathlib import Path

import pytest

from quartic import validation

SRC = Path(__file__).resolve().parents[1] / "src"


def _report(result):
    mark = "PASS" if result.passed else "FAIL"
    print(f"[{mark}] criterion {result.cid:2d} ({result.title}): {result.detail}")
    assert result.passed, f"criterion {result.cid}: {result.detail}"


def test_criterion_01_exact_expansion_coefficients():
    _report(validation.criterion_1())


def test_criterion_02_closed_form_vs_engine():
    _report(validation.criterion_2())


def test_criterion_03_series_vs_exact_oracle():
    _report(validation.criterion_3())


def test_criterion_04_simulation_vs_exact_oracle():
    _report(validation.criterion_4())


def test_criterion_05_energy_conservation_and_order():
    _report(validation.criterion_5())


def test_criterion_06_quantum_softening():
    _report(validation.criterion_6())


def test_criterion_07_first_order_quantum_isochronicity():
    _report(validation.criterion_7())


def test_criterion_08_second_order_classical_isochronicity():
    _report(validation.criterion_8())


def test_criterion_09_second_order_quantum_roots():
    _report(validation.criterion_9())


def test_criterion_10_inverted_special_period():
    _report(validation.criterion_10())


def test_criterion_11_bound_constants():
    _report(validation.criterion_11())


def test_criterion_12_double_well_cross_oracle():
    _report(validation.criterion_12())


def test_criterion_13_published_root_discrepancy():
    _report(validation.criterion_13())


def _stdout_of(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "quartic", *args],
        capture_output=True,
        env=env,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stderr.decode(errors="replace")
    return proc.stdout


@pytest.mark.parametrize(
    "argv",
    [
        ("freq", "--regime", "classical", "-m", "1", "-w", "1", "-l", "0.025",
         "-A", "1", "--order", "2"),
        ("sweep", "--target", "freq", "--grid", "lambda=0:0.08:9",
         "-m", "1", "-w", "1", "--hbar", "1", "-A", "1", "--order", "1"),
        ("validate", "--json"),
    ],
    ids=["freq", "sweep", "validate-json"],
)
def test_criterion_14_cli_determinism(argv):
    first = _stdout_of(*argv)
    second = _stdout_of(*argv)
    identical = first == second
    print(
        f"[{'PASS' if identical else 'FAIL'}] criterion 14 (CLI determinism, "
        f"{argv[0]}): {len(first)} bytes, repeated invocation identical: "
        f"{identical}"
    )
    assert identical


def test_full_suite_summary():
    results = validation.run_suite()
    passed = sum(1 for r in results if r.passed)
    print(f"acceptance suite: {passed}/{len(results)} criteria passed")
    assert passed == len(results) == 14
