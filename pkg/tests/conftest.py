from itertools import combinations

import pytest
from hypothesis import strategies as st

from bestmono import DegreeSequence, Graph, enumerate_graphical


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for t, p in enumerate(pairs) if mask >> t & 1])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def graphical_sequences(draw, min_n: int = 1, max_n: int = 8) -> DegreeSequence:
    return draw(graphs(min_n, max_n)).degree_sequence()


@pytest.fixture(scope="session")
def graphical_by_n() -> dict[int, list[DegreeSequence]]:
    return {n: list(enumerate_graphical(n)) for n in range(1, 9)}
