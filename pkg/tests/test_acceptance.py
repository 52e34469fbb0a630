"""Acceptance criteria 1-8, each run through its named verification suite.

Every criterion prints one PASS/FAIL line with its wall time and fails if the
suite reports a failed identity or overruns its time budget.
"""
from __future__ import annotations

import time

import pytest

from macweyl.verify import run_suite

CRITERIA = [
    (1, "route agreement", "route", {}, 300),
    (2, "specialization coherence", "special", {}, 120),
    (3, "Weyl character double route", "weyl", {}, 120),
    (4, "norm and global coherence", "norm", {"order": 12}, 60),
    (5, "Y-eigenvalue equations", "eigen", {}, 180),
    (6, "sl2 recurrences and q-Toda eigen-equations", "rr", {"M": 8, "order": 12}, 60),
    (7, "filtration counting", "filtration", {}, 30),
    (8, "structural properties", "struct", {"seed": 0, "samples": 100}, 120),
]


@pytest.mark.parametrize("number, title, suite, opts, budget", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(capsys, number, title, suite, opts, budget):
    start = time.perf_counter()
    (res,) = run_suite(suite, **opts)
    elapsed = time.perf_counter() - start
    passed = res.ok and elapsed <= budget
    with capsys.disabled():
        state = "PASS" if passed else "FAIL"
        print(f"\ncriterion {number} {title}: {state} ({res.checks} checks, {elapsed:.1f}s, budget {budget}s)")
    assert res.checks > 0
    assert res.ok, res.minimal().line()
    assert elapsed <= budget
