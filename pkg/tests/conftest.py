from __future__ import annotations

import pytest

import fenceq.cluster as cluster
from fenceq.polyseq import InexactDivision

from acceptance_log import INEXACT_EVENTS, OUTCOMES


@pytest.fixture(autouse=True, scope="session")
def count_inexact_divisions():
    """Log every failed exact division inside the mutation engine for the whole session."""
    real = cluster.poly_exact_div

    def watched(num, den):
        try:
            return real(num, den)
        except InexactDivision as exc:
            INEXACT_EVENTS.append(str(exc))
            raise

    cluster.poly_exact_div = watched
    yield
    cluster.poly_exact_div = real


def pytest_terminal_summary(terminalreporter):
    if not OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for out in OUTCOMES:
        terminalreporter.write_line(out.line())
    tag = "PASS" if not INEXACT_EVENTS else "FAIL"
    terminalreporter.write_line(
        f"{tag}  7d   zero InexactDivision events across the suite [{len(INEXACT_EVENTS)} events]"
    )


def pytest_sessionfinish(session, exitstatus):
    if INEXACT_EVENTS and exitstatus == 0:
        session.exitstatus = 1
