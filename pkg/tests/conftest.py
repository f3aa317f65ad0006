from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from matchroots.graph import Graph, graph_from_edges

# exact arithmetic on one core: timings vary too much for per-example deadlines
settings.register_profile("matchroots", deadline=None)
settings.load_profile("matchroots")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(h.nodes())}
    return graph_from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    return graph_from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rnd.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def rnd() -> random.Random:
    return random.Random(20240611)
