"""The acceptance gate: every criterion at its stated size, tolerance and time limit.

Each criterion prints one line; the summary is repeated at the end of the run.
"""

import time

import pytest

from skewham.report import emit_report
from skewham.suites import run_suite

# (number, suite, time limit in seconds or None)
CRITERIA = [
    (1, "n2", 1),
    (2, "phi-identities", 10),
    (3, "centralizer", None),
    (4, "rank-law", None),
    (5, "diamond", 60),
    (6, "image-codim", None),
    (7, "image-n4", None),
    (8, "image-n6", None),
    (9, "dominance", 120),
    (10, "corank-codim", 300),
    (11, "bad-lines", None),
    (12, "monad", None),
    (13, "discriminant", None),
    (14, "dimension", 1),
]

RESULTS: list[str] = []


@pytest.mark.parametrize("number,suite,limit", CRITERIA, ids=[f"{n:02d}-{s}" for n, s, _ in CRITERIA])
def test_criterion(number, suite, limit):
    t0 = time.perf_counter()
    rep = run_suite(suite, seed=0)
    elapsed = time.perf_counter() - t0
    in_time = limit is None or elapsed < limit
    ok = rep.passed and in_time
    failed = [c.name for c in rep.checks if not c.passed]
    budget = f" (limit {limit}s)" if limit else ""
    line = f"criterion {number:2d} {suite:15s} {'PASS' if ok else 'FAIL'}  {elapsed:7.2f}s{budget}"
    if failed:
        line += "  failing: " + "; ".join(failed)
    if not in_time:
        line += "  over time limit"
    RESULTS.append(line)
    print(line)
    assert rep.passed, emit_report(rep, "text").decode()
    assert in_time, f"{elapsed:.2f}s exceeds {limit}s"
