"""Acceptance criteria 1 to 10, one printed PASS/FAIL line each.

The full verification suite runs once; each test asserts the checks tagged
with its criterion. The lines are repeated in the pytest terminal summary.
"""

import pytest

from griesskit.workbench import run_suite

CRITERIA = {
    1: "dihedral catalog table",
    2: "conformal charges of catalog and family algebras",
    3: "charges of f, xi and the frame vectors f^n",
    4: "Gram determinants",
    5: "ternary relation among u1..u4",
    6: "Miyamoto group orders",
    7: "pair orders and 3-transposition verdicts",
    8: "lattice oracle and E8 Ising vectors",
    9: "identity residuals",
    10: "map, solver, serialization and covariance properties",
}


@pytest.fixture(scope="module")
def report():
    return run_suite("all")


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(report, acceptance_line, k):
    checks = report.by_criterion(k)
    ok = bool(checks) and all(c.passed for c in checks)
    bad = "; ".join(f"{c.id}: expected {c.expected}, computed {c.computed}" for c in checks if not c.passed)
    acceptance_line(k, f"criterion {k}: {'PASS' if ok else 'FAIL'} ({CRITERIA[k]}, {len(checks)} checks)"
                    + (f" [{bad}]" if bad else ""))
    assert checks, f"no checks registered for criterion {k}"
    assert ok
