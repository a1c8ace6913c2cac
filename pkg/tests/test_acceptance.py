"""Acceptance gate: every criterion prints its own pass/fail line.

The checks themselves live in gcurv.verify and run once per session on the
standard corpus; each test here reports one criterion.  The final test also
drives the command line entry point end to end and holds it to the ten
minute budget.
"""

import time

import pytest

from gcurv import cli
from gcurv.verify import run_acceptance_checks

_LABELS = {
    "criterion_01_curvature_constants": "curvature constants across the corpus",
    "criterion_02_effective_diameter": "effective diameter values and bound",
    "criterion_03_reflectiveness": "reflection symmetry across the corpus",
    "criterion_04_lichnerowicz_sharpness": "spectral gap sharpness",
    "criterion_05_factorization_round_trip": "factorization round trips",
    "criterion_06_structural_suite": "structural identities at sharp members",
    "criterion_07_orbit_certificate": "pair orbit certificates",
    "criterion_08_lp_oracle_equivalence": "solver agrees with brute oracle",
    "criterion_09_bakry_emery": "vertex curvature values and rigidity",
    "criterion_10_classification": "classification reports",
}


@pytest.fixture(scope="module")
def results():
    out = {res.check: res for res in run_acceptance_checks()}
    assert set(out) == set(_LABELS)
    return out


def _report(results, capsys, name):
    res = results[name]
    line = f"{name} ({_LABELS[name]}): {'PASS' if res.passed else 'FAIL'}"
    if not res.passed:
        line += f"  [{res.witness}]"
    with capsys.disabled():
        print("\n" + line)
    assert res.passed, f"{name} failed: {res.witness}"


def test_criterion_01(results, capsys):
    _report(results, capsys, "criterion_01_curvature_constants")


def test_criterion_02(results, capsys):
    _report(results, capsys, "criterion_02_effective_diameter")


def test_criterion_03(results, capsys):
    _report(results, capsys, "criterion_03_reflectiveness")


def test_criterion_04(results, capsys):
    _report(results, capsys, "criterion_04_lichnerowicz_sharpness")


def test_criterion_05(results, capsys):
    _report(results, capsys, "criterion_05_factorization_round_trip")


def test_criterion_06(results, capsys):
    _report(results, capsys, "criterion_06_structural_suite")


def test_criterion_07(results, capsys):
    _report(results, capsys, "criterion_07_orbit_certificate")


def test_criterion_08(results, capsys):
    _report(results, capsys, "criterion_08_lp_oracle_equivalence")


def test_criterion_09(results, capsys):
    _report(results, capsys, "criterion_09_bakry_emery")


def test_criterion_10(results, capsys):
    _report(results, capsys, "criterion_10_classification")
    # the full suite must also pass through the public entry point, in budget
    start = time.monotonic()
    code = cli.main(["verify-theorems", "--corpus", "standard"])
    elapsed = time.monotonic() - start
    capsys.readouterr()
    with capsys.disabled():
        print(f"verify-theorems --corpus standard: exit {code}, {elapsed:.1f}s")
    assert code == 0
    assert elapsed < 600.0
