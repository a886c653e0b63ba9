import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from qextremal.graph import Graph


@st.composite
def graphs(draw, min_order=1, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


@st.composite
def connected_graphs(draw, min_order=2, max_order=9):
    n = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return Graph.from_edges(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def nxify():
    return to_nx
