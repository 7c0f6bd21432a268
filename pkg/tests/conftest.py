"""Shared corpora and helpers for the test suite.

The random corpora are fully seeded: instance i uses seed base+i, order
n cycles through 1..max_n and the target density cycles through 0, 0.1,
..., 1.0 of n^2/4 edges, so average degrees span 0 to about n/2.
"""

from __future__ import annotations

import pytest

from kindep.generators import random_gnm
from kindep.graph import Graph, build


def gnm_corpus(count: int, max_n: int, seed_base: int) -> list[Graph]:
    graphs = []
    for i in range(count):
        n = (i % max_n) + 1
        frac = (i % 11) / 10
        m = min(n * (n - 1) // 2, round(frac * n * n / 4))
        graphs.append(random_gnm(n, m, seed_base + i))
    return graphs


@pytest.fixture(scope="session")
def corpus500() -> list[Graph]:
    return gnm_corpus(500, 40, 1000)


@pytest.fixture(scope="session")
def corpus200() -> list[Graph]:
    return gnm_corpus(200, 12, 2000)


@pytest.fixture(scope="session")
def corpus100() -> list[Graph]:
    return gnm_corpus(100, 10, 3000)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build(10, edges)


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])
