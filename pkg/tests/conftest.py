import random

import pytest

from cliquex import Graph


def random_graph(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC11C)
