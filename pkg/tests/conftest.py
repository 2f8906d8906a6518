import pytest

from mptcycles.digraph import build

ACCEPTANCE_LINES = []


@pytest.fixture
def triangle():
    return build([1, 1, 1], [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def four():
    # 4-vertex tournament: Hamiltonian cycle 0123 plus chords 0->2, 1->3
    return build([1, 1, 1, 1], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


@pytest.fixture
def acceptance_line():
    def record(number, name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
