import time

import pytest

_LINES: list = []


class Criterion:
    """Times one acceptance criterion and records a single pass/fail line."""

    def __init__(self, number: int, title: str, budget: float | None):
        self.number = number
        self.title = title
        self.budget = budget
        self.detail = ""
        self._t0 = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._t0

    def finish(self, ok: bool, detail: str = "") -> bool:
        elapsed = self.elapsed
        within = self.budget is None or elapsed < self.budget
        ok = ok and within
        limit = f" / {self.budget:g}s" if self.budget is not None else ""
        line = f"[{'PASS' if ok else 'FAIL'}] {self.number:>2} {self.title}: {detail} ({elapsed:.2f}s{limit})"
        _LINES.append(line)
        print(line)
        return ok


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
