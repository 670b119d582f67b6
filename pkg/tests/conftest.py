import pytest
from hypothesis import HealthCheck, settings

from hyperpart import complete_hypergraph, make_hypergraph

settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("ci")

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def figure2():
    return make_hypergraph(6, 3, [[1, 2, 6], [1, 3, 5], [2, 3, 4]])


@pytest.fixture
def k4():
    return complete_hypergraph(4, 3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}")
