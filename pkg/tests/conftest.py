import pytest
from hypothesis import strategies as st

from contagious import Graph

from oracles import adjacency_sets

_ACCEPTANCE = []


@pytest.fixture
def record_criterion():
    """Log one acceptance criterion's outcome for the end-of-run summary."""

    def record(number, passed, detail):
        line = f"AC-{number:02d} {'PASS' if passed else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)


def as_sets(g: Graph):
    return adjacency_sets(g.n, g.edges())


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_and_seed(draw, min_n=1, max_n=10):
    g = draw(graphs(min_n, max_n))
    seed = draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
    return g, frozenset(seed)
