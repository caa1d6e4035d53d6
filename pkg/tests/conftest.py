import itertools

import pytest


def brute_compositions(parts, total):
    """Independent oracle: filter the full box instead of recursing."""
    return sorted(
        m for m in itertools.product(range(total + 1), repeat=parts) if sum(m) == total
    )


@pytest.fixture
def compositions_oracle():
    return brute_compositions


_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call with (label, passed, detail)."""

    def record(label, passed, detail=""):
        _CRITERIA.append((label, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in sorted(_CRITERIA, key=lambda c: int(c[0].split()[1])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
