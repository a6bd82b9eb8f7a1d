import random

import pytest

import htpbasis as hb
from htpbasis.timegraph import TimeGraph, all_edges


@pytest.fixture(scope="session")
def base5():
    return hb.base_basis_5()


@pytest.fixture(scope="session")
def built_bases():
    """Certified bases for orders 5..9, built once per test session."""
    bases = {5: hb.base_basis_5()}
    for n in range(6, 10):
        bases[n] = hb.build(n)
    return bases


@pytest.fixture()
def subgraph_factory():
    """Seeded random subgraph generator: keep each edge with probability p."""
    def make(n: int, rng: random.Random, keep: float | None = None) -> TimeGraph:
        p = rng.uniform(0.2, 0.95) if keep is None else keep
        return TimeGraph(n, frozenset(e for e in all_edges(n) if rng.random() < p))
    return make
