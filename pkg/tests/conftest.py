import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(number, ok, elapsed, limit, detail=""):
        in_time = elapsed < limit
        status = "PASS" if ok and in_time else "FAIL"
        line = f"{status} criterion {number}: {detail} ({elapsed:.2f} s, limit {limit} s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok and in_time

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
