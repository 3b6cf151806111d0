import pytest
from hypothesis import HealthCheck, settings

from evenhole.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def cycle_plus(k, attachments):
    """``C_k`` plus one fresh vertex per attachment set, numbered from ``k``."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    for j, nbrs in enumerate(attachments):
        edges += [(v, k + j) for v in nbrs]
    return Graph(k + len(attachments), edges)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@pytest.fixture
def plant12():
    return cycle_plus(12, [(0, 3)])


ACCEPTANCE_LINES: list[str] = []


def report(number, ok, detail):
    """Record and print one acceptance verdict line."""
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
