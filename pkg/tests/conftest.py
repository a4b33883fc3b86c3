import contextlib
import time

import pytest

_LINES = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title, budget=None):
        t0 = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - t0
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget}s"
        except BaseException as exc:
            _LINES.append(f"FAIL  criterion {number}: {title} ({exc!s:.120})")
            raise
        _LINES.append(f"PASS  criterion {number}: {title} [{elapsed:.2f}s]")

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
