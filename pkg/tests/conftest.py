import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20260826)


def random_simple_graph(rng, n, p=0.5):
    from colorcert.graphs import SimpleGraph

    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def random_multigraph(rng, n, m, max_mult=3):
    from colorcert.graphs import MultiGraph

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    records = [(u, v, rng.randint(1, max_mult)) for u, v in pairs[:m]]
    return MultiGraph.from_edges(n, records)
