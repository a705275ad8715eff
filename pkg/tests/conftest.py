import random
from itertools import combinations

import pytest

from lapspec.realize import DenseGraph, graph6_encode


@pytest.fixture(scope="session")
def g6_corpus():
    """10k random graph6 records on 1..11 vertices; deterministic by seed."""
    rng = random.Random(0xC0FFEE)
    lines = []
    for _ in range(10_000):
        n = rng.randint(1, 11)
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        lines.append(graph6_encode(DenseGraph.from_edges(n, edges)))
    return lines
