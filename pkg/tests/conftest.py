import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

from octagvc.graph import Graph, from_edge_list
from octagvc.oracle import complete_graph, cycle_graph


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def bipartite_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def all_2colorings_bipartite(g: Graph) -> bool:
    """Exhaustive: does any of the 2^n colourings properly colour g?"""
    for mask in range(1 << g.n):
        if all(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in g.edges):
            return True
    return False


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k5():
    return complete_graph(5)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
