import time

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Time a criterion and record one PASS/FAIL line for the terminal summary."""

    class Recorder:
        def __init__(self):
            self.t0 = time.perf_counter()

        def report(self, number, title, ok, limit, detail=""):
            elapsed = time.perf_counter() - self.t0
            in_time = limit is None or elapsed < limit
            status = "PASS" if ok and in_time else "FAIL"
            budget = f" (limit {limit:g}s)" if limit is not None else ""
            line = f"[{status}] criterion {number}: {title}, {elapsed:.2f}s{budget}"
            if detail:
                line += f"; {detail}"
            ACCEPTANCE_LINES.append(line)
            print(line)
            assert ok, line
            assert in_time, line

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
