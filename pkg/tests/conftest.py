from collections import defaultdict

import pytest

ACCEPTANCE = defaultdict(list)  # criterion -> [(passed, detail)]


@pytest.fixture
def record():
    """Log one check towards an acceptance criterion, then assert it."""
    def _record(criterion, passed, detail):
        ACCEPTANCE[criterion].append((bool(passed), detail))
        assert passed, f"criterion {criterion}: {detail}"
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[criterion]
        ok = all(p for p, _ in checks)
        failed = [d for p, d in checks if not p]
        summary = f"{sum(p for p, _ in checks)}/{len(checks)} checks"
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {summary}")
        for detail in failed:
            tr.write_line(f"        failed: {detail}")
