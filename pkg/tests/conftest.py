import random

import pytest

from vertexvis.generators import random_connected_graph

from oracles import connected_graphs_upto


@pytest.fixture(scope="session")
def small_graphs():
    """Every labeled connected graph on 2..5 vertices (771 graphs)."""
    return list(connected_graphs_upto(5))


@pytest.fixture(scope="session")
def random_corpus():
    """200 seeded random connected graphs on 6..10 vertices."""
    rng = random.Random(20240601)
    out = []
    for i in range(200):
        n = 6 + i % 5
        p = rng.uniform(0.25, 0.6)
        out.append(random_connected_graph(n, p, seed=1000 + i))
    return out
