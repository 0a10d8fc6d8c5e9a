import time
from contextlib import contextmanager

import pytest

CRITERIA = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager recording one PASS/FAIL line for an acceptance criterion.

    It yields a dict; anything stored under "detail" is appended to the line.
    """
    lines = request.config.stash.setdefault(CRITERIA, [])

    @contextmanager
    def check(number: int, title: str):
        info = {}
        start = time.perf_counter()
        try:
            yield info
        except BaseException:
            line = f"FAIL [{number:2d}] {title}"
            lines.append((number, line))
            print(line)
            raise
        elapsed = time.perf_counter() - start
        detail = f"; {info['detail']}" if "detail" in info else ""
        line = f"PASS [{number:2d}] {title} ({elapsed:.1f}s{detail})"
        lines.append((number, line))
        print(line)

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(CRITERIA, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
