"""The annihilator family that bounds the dimension of the tour span.

Two kinds of integer vectors are orthogonal to every full tour vector:

* a vertex balance: +1 on each edge leaving a vertex (city, day) and -1 on
  each edge entering it, zero net flow for any path passing through;
* a city balance (cities 1..n-1 only): +1 on every edge leaving the city on
  any day, -1 on every start edge, zero for tours that leave each city once.

Together these n^2 + n - 1 vectors are independent, which caps the tour
span at edge_count(n) - (n^2 + n - 1) = n(n-1)(n-2) + 1 dimensions.  The
family's independence is certified here against explicit dual witnesses:
partial paths ending at a chosen vertex and double-visit tours that repeat
a chosen city.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .linalg import EdgeVector, inner_product, rank
from .report import Report
from .timegraph import (
    Edge,
    edge_count,
    edge_index,
    htp_vector,
    partial_path_vector,
    timepath_vector,
)

__all__ = [
    "AnnihilatorFamily",
    "annihilator_family",
    "city_annihilator",
    "dimension_upper_bound",
    "double_visit_path",
    "family_size",
    "verify_duality",
    "vertex_annihilator",
]


def _check_range(n: int, value: int, name: str, hi: int) -> None:
    if not 1 <= value <= hi:
        raise ValueError(f"{name} must lie in [1, {hi}] for order {n}, got {value}")


def vertex_annihilator(n: int, i: int, t: int) -> EdgeVector:
    """Out-edges minus in-edges of vertex (i, t).

    On the boundary days the start and finish edges take part: entering
    (i, 1) means the start edge (0, i, 0), leaving (i, n) means the finish
    edge (i, 0, n).  Without those two conventions tours would not be
    annihilated.
    """
    _check_range(n, i, "city", n)
    _check_range(n, t, "day", n)
    entries: dict[int, int] = {}
    if t == n:
        entries[edge_index(n, Edge(i, 0, n))] = 1
    else:
        for j in range(1, n + 1):
            if j != i:
                entries[edge_index(n, Edge(i, j, t))] = 1
    if t == 1:
        entries[edge_index(n, Edge(0, i, 0))] = -1
    else:
        for j in range(1, n + 1):
            if j != i:
                entries[edge_index(n, Edge(j, i, t - 1))] = -1
    return EdgeVector(edge_count(n), entries)


def city_annihilator(n: int, i: int) -> EdgeVector:
    """All out-edges of city i (any day, finish edge included) minus all start edges.

    Only defined for i <= n-1: adding the city-n copy would make the family
    dependent on the vertex balances, and the counting below needs exactly
    n^2 + n - 1 members.
    """
    _check_range(n, i, "city", n - 1)
    entries: dict[int, int] = {}
    for t in range(1, n):
        for j in range(1, n + 1):
            if j != i:
                entries[edge_index(n, Edge(i, j, t))] = 1
    entries[edge_index(n, Edge(i, 0, n))] = 1
    for j in range(1, n + 1):
        entries[edge_index(n, Edge(0, j, 0))] = entries.get(edge_index(n, Edge(0, j, 0)), 0) - 1
    return EdgeVector(edge_count(n), entries)


def double_visit_path(n: int, i: int) -> tuple[int, ...]:
    """A tour visiting city i twice (non-consecutively), skipping city n.

    These are the dual witnesses for the city balances: the tour leaves
    city i twice but uses one start edge, so it pairs to 1 with the city-i
    balance and to 0 with every other one.
    """
    if n < 5:
        raise ValueError(f"double-visit patterns need order >= 5, got {n}")
    _check_range(n, i, "city", n - 1)
    if i == 1:
        seq = [1, 2, 1] + list(range(3, n))
    elif i == n - 1:
        seq = [n - 1, 1, n - 1] + list(range(2, n - 1))
    else:
        seq = [i, 1, i] + list(range(2, i)) + list(range(i + 1, n))
    return tuple(seq)


def family_size(n: int) -> int:
    return n * n + n - 1


def dimension_upper_bound(n: int) -> int:
    """edge_count(n) minus the family size, cross-checked against the closed form."""
    if n < 5:
        raise ValueError(f"dimension bound stated only for orders >= 5, got {n}")
    via_count = edge_count(n) - family_size(n)
    closed = n * (n - 1) * (n - 2) + 1
    if via_count != closed:
        raise RuntimeError(
            f"bound formulas disagree at n={n}: {via_count} != {closed}")
    return closed


@dataclass(frozen=True)
class AnnihilatorFamily:
    """The n^2 + n - 1 balance vectors of order n, in a fixed iteration order."""

    n: int
    city: tuple[EdgeVector, ...]
    vertex: dict[tuple[int, int], EdgeVector]

    def members(self) -> Iterator[EdgeVector]:
        yield from self.city
        for key in sorted(self.vertex):
            yield self.vertex[key]

    def __len__(self) -> int:
        return len(self.city) + len(self.vertex)

    def certified_rank(self) -> int:
        return rank(list(self.members()))


def annihilator_family(n: int) -> AnnihilatorFamily:
    if n < 5:
        raise ValueError(f"annihilator family stated only for orders >= 5, got {n}")
    city = tuple(city_annihilator(n, i) for i in range(1, n))
    vertex = {(i, t): vertex_annihilator(n, i, t)
              for i in range(1, n + 1) for t in range(1, n + 1)}
    return AnnihilatorFamily(n, city, vertex)


def _sample_htps(n: int, sample_size: int, seed: int) -> Iterator[tuple[int, ...]]:
    if n <= 6:
        yield from permutations(range(1, n + 1))
        return
    rng = random.Random(seed)
    base = list(range(1, n + 1))
    for _ in range(sample_size):
        rng.shuffle(base)
        yield tuple(base)


def verify_duality(n: int, *, sample_size: int = 10_000, seed: int = 0) -> Report:
    """Check every pairing identity of the family and certify its rank.

    The three identity groups: double-visit tours pair to zero with every
    vertex balance; partial paths pair to -1 exactly with the balance of
    their end vertex; double-visit tours pair to delta with the city
    balances.  On top of that the family rank must be n^2 + n - 1 and a
    sample of tours (all of them for n <= 6) must be annihilated.
    """
    if n < 5:
        raise ValueError(f"duality verification needs order >= 5, got {n}")
    t0 = time.monotonic()
    fam = annihilator_family(n)
    doubles = {i: timepath_vector(n, double_visit_path(n, i)) for i in range(1, n)}
    partials = {(i, t): partial_path_vector(n, i, t)
                for i in range(1, n + 1) for t in range(1, n + 1)}

    report = Report(
        title=f"annihilator family certification, order {n}",
        params={
            "n": n,
            "seed": seed,
            "edge_count": edge_count(n),
            "family_size": family_size(n),
            "expected_dimension": dimension_upper_bound(n),
        },
    )

    bad = sum(1 for k in doubles for key in fam.vertex
              if inner_product(doubles[k], fam.vertex[key]) != 0)
    report.add("double-visit tours pair to 0 with vertex balances",
               bad == 0, expected=0, actual=bad,
               detail=f"{len(doubles) * len(fam.vertex)} pairings")

    bad = 0
    for (i, t), f in partials.items():
        for (i2, t2), g in fam.vertex.items():
            want = -1 if (i, t) == (i2, t2) else 0
            if inner_product(f, g) != want:
                bad += 1
    report.add("partial paths pair to -delta with vertex balances",
               bad == 0, expected=0, actual=bad,
               detail=f"{len(partials) * len(fam.vertex)} pairings")

    bad = 0
    for i, f in doubles.items():
        for j in range(1, n):
            want = 1 if i == j else 0
            if inner_product(f, fam.city[j - 1]) != want:
                bad += 1
    report.add("double-visit tours pair to delta with city balances",
               bad == 0, expected=0, actual=bad,
               detail=f"{len(doubles) * len(fam.city)} pairings")

    measured_rank = fam.certified_rank()
    report.add("family rank equals n^2 + n - 1",
               measured_rank == family_size(n),
               expected=family_size(n), actual=measured_rank)

    report.add("edge count minus family rank equals n(n-1)(n-2)+1",
               edge_count(n) - measured_rank == dimension_upper_bound(n),
               expected=dimension_upper_bound(n),
               actual=edge_count(n) - measured_rank)

    members = list(fam.members())
    checked = 0
    bad = 0
    for perm in _sample_htps(n, sample_size, seed):
        hv = htp_vector(n, perm)
        checked += 1
        for g in members:
            if inner_product(hv, g) != 0:
                bad += 1
    report.add("every family member annihilates sampled tours",
               bad == 0, expected=0, actual=bad,
               detail=f"{checked} tours x {len(members)} members")

    report.elapsed = time.monotonic() - t0
    return report
