import contextlib
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion's verdict and runtime for the summary."""

    @contextlib.contextmanager
    def record(number, title, budget_s=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget_s is not None:
                assert elapsed < budget_s, f"took {elapsed:.1f}s, budget {budget_s}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            _CRITERIA.append((number, title, ok, elapsed, budget_s))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, budget in sorted(_CRITERIA):
        limit = f" / {budget:g}s" if budget else ""
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'}  [{number:>2}] {title}  ({elapsed:.2f}s{limit})"
        )
