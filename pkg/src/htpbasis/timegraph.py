"""Layered time graphs: edge indexing, incidence vectors, tour enumeration.

The complete time graph of order n has a vertex (city, day) for each city
in 1..n and each day in 1..n, plus a start vertex visited on day 0 and a
finish vertex visited on day n+1.  Every edge advances exactly one day:

    (0, j, 0)   start -> city j on day 1
    (i, j, t)   city i on day t -> city j on day t+1,  i != j, 1 <= t <= n-1
    (i, 0, n)   city i on day n -> finish

A tour that visits every city exactly once is a permutation of 1..n read
off day by day (an "htp" below).  Its incidence vector marks the n+1 edges
it uses inside the rational coordinate space indexed by the full edge set.
This module fixes the coordinate order (sources, then internal edges by
(day, from, to), then finish edges) that every other module relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .linalg import EdgeVector

__all__ = [
    "Edge",
    "TimeGraph",
    "all_edges",
    "edge_count",
    "edge_from_index",
    "edge_index",
    "enumerate_htps",
    "htp_edges",
    "htp_vector",
    "partial_path_vector",
    "timepath_edges",
    "timepath_vector",
]


class Edge(NamedTuple):
    """A day-stamped directed edge (from_city, to_city, day)."""

    from_city: int
    to_city: int
    day: int


def _check_order(n: int, minimum: int = 3) -> None:
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"order must be an integer >= {minimum}, got {n!r}")


def edge_count(n: int) -> int:
    """Number of edges of the complete time graph of order n."""
    _check_order(n, minimum=1)
    return n * (n - 1) ** 2 + 2 * n


def edge_shape(n: int, e: Edge) -> str:
    """Classify e as 'source', 'internal' or 'destination'; reject anything else."""
    i, j, t = e
    if t == 0 and i == 0 and 1 <= j <= n:
        return "source"
    if t == n and j == 0 and 1 <= i <= n:
        return "destination"
    if 1 <= t <= n - 1 and 1 <= i <= n and 1 <= j <= n and i != j:
        return "internal"
    raise ValueError(f"invalid edge {tuple(e)} for order {n}")


def edge_index(n: int, e: Edge) -> int:
    """Canonical linear index of e in [0, edge_count(n)).

    Sources come first ordered by to_city, then internal edges ordered by
    (day, from_city, to_city), then destination edges ordered by from_city.
    """
    _check_order(n)
    shape = edge_shape(n, e)
    i, j, t = e
    if shape == "source":
        return j - 1
    if shape == "destination":
        return n + n * (n - 1) * (n - 1) + (i - 1)
    col = j - 1 if j < i else j - 2
    return n + (t - 1) * n * (n - 1) + (i - 1) * (n - 1) + col


def edge_from_index(n: int, k: int) -> Edge:
    """Inverse of edge_index."""
    _check_order(n)
    total = edge_count(n)
    if not 0 <= k < total:
        raise ValueError(f"edge index {k} out of range [0, {total}) for order {n}")
    if k < n:
        return Edge(0, k + 1, 0)
    k -= n
    internal = n * (n - 1) * (n - 1)
    if k < internal:
        t, r = divmod(k, n * (n - 1))
        i, c = divmod(r, n - 1)
        j = c + 1 if c + 1 < i + 1 else c + 2
        return Edge(i + 1, j, t + 1)
    return Edge(k - internal + 1, 0, n)


def all_edges(n: int) -> Iterator[Edge]:
    """All edges of the complete time graph, in canonical index order."""
    _check_order(n)
    for j in range(1, n + 1):
        yield Edge(0, j, 0)
    for t in range(1, n):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    yield Edge(i, j, t)
    for i in range(1, n + 1):
        yield Edge(i, 0, n)


# --------------------------------------------------------------------------
# city sequences and their incidence vectors
# --------------------------------------------------------------------------

def _check_sequence(n: int, seq: Iterable[int]) -> tuple[int, ...]:
    s = tuple(seq)
    if len(s) != n:
        raise ValueError(f"city sequence must have length {n}, got {len(s)}")
    for c in s:
        if not 1 <= c <= n:
            raise ValueError(f"city {c} out of range [1, {n}]")
    for a, b in zip(s, s[1:]):
        if a == b:
            raise ValueError(f"consecutive cities must differ, got repeated {a}")
    return s


def _check_htp(n: int, perm: Iterable[int]) -> tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    return p


def timepath_edges(n: int, seq: Iterable[int]) -> tuple[Edge, ...]:
    """The n+1 edges of the tour that visits seq[t-1] on day t."""
    _check_order(n)
    s = _check_sequence(n, seq)
    path = [Edge(0, s[0], 0)]
    for t in range(1, n):
        path.append(Edge(s[t - 1], s[t], t))
    path.append(Edge(s[-1], 0, n))
    return tuple(path)


def htp_edges(n: int, perm: Iterable[int]) -> tuple[Edge, ...]:
    """Edges of the tour for a permutation of 1..n."""
    p = _check_htp(n, perm)
    return timepath_edges(n, p)


def timepath_vector(n: int, seq: Iterable[int]) -> EdgeVector:
    """Incidence vector of a tour; a repeated edge would accumulate its count.

    For simple day-layered tours every day index occurs once, so entries are
    always 0 or 1 in practice.
    """
    entries: dict[int, int] = {}
    for e in timepath_edges(n, seq):
        k = edge_index(n, e)
        entries[k] = entries.get(k, 0) + 1
    return EdgeVector(edge_count(n), entries)


def htp_vector(n: int, perm: Iterable[int]) -> EdgeVector:
    """0/1 incidence vector of the tour of a permutation of 1..n."""
    p = _check_htp(n, perm)
    return timepath_vector(n, p)


def partial_path_vector(n: int, i: int, t: int) -> EdgeVector:
    """Incidence vector of a fixed start-to-(i, t) path with exactly t edges.

    The path steps +1 mod n through the cities, so the day-s city is
    ((i - t + s - 1) mod n) + 1; it ends at city i on day t.
    """
    _check_order(n)
    if not (1 <= i <= n and 1 <= t <= n):
        raise ValueError(f"city/day ({i}, {t}) out of range [1, {n}]^2")
    cities = [((i - t + s - 1) % n) + 1 for s in range(1, t + 1)]
    edges = [Edge(0, cities[0], 0)]
    for s in range(1, t):
        edges.append(Edge(cities[s - 1], cities[s], s))
    entries = {edge_index(n, e): 1 for e in edges}
    return EdgeVector(edge_count(n), entries)


# --------------------------------------------------------------------------
# time graphs (edge subsets) and tour enumeration
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TimeGraph:
    """An order n together with a subset of the complete edge set."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_order(self.n)
        normalized = frozenset(Edge(*e) for e in self.edges)
        for e in normalized:
            edge_shape(self.n, e)
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def complete(cls, n: int) -> "TimeGraph":
        return cls(n, frozenset(all_edges(n)))

    @classmethod
    def from_htps(cls, n: int, perms: Iterable[Iterable[int]]) -> "TimeGraph":
        """Union of the tour edges of the given permutations."""
        es: set[Edge] = set()
        for p in perms:
            es.update(htp_edges(n, p))
        return cls(n, frozenset(es))

    def __contains__(self, e: Edge) -> bool:
        return Edge(*e) in self.edges

    # -- text format: 'n <order>' then one 'i j t' line per edge ----------

    @classmethod
    def from_text(cls, text: str) -> "TimeGraph":
        n = None
        edges: set[Edge] = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise ValueError(f"line {lineno}: expected 'n <order>', got {line!r}")
                n = int(parts[1])
                continue
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'i j t', got {line!r}")
            i, j, t = (int(x) for x in parts)
            edges.add(Edge(i, j, t))
        if n is None:
            raise ValueError("missing 'n <order>' header line")
        return cls(n, frozenset(edges))

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        for e in sorted(self.edges, key=lambda e: edge_index(self.n, e)):
            lines.append(f"{e.from_city} {e.to_city} {e.day}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, path) -> "TimeGraph":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_text())


def enumerate_htps(g: TimeGraph) -> Iterator[tuple[int, ...]]:
    """Yield every permutation whose tour lies in g, in lexicographic order.

    Day-layered depth-first search: a branch dies as soon as the next edge
    is missing, so sparse graphs enumerate far faster than filtering all n!
    permutations.
    """
    n = g.n
    starts = sorted(e.to_city for e in g.edges if e.day == 0)
    finishers = {e.from_city for e in g.edges if e.day == n}
    succ: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        if 1 <= e.day <= n - 1:
            succ.setdefault((e.from_city, e.day), []).append(e.to_city)
    for k in succ:
        succ[k].sort()

    path: list[int] = []
    used = [False] * (n + 1)

    def extend(city: int, day: int) -> Iterator[tuple[int, ...]]:
        path.append(city)
        used[city] = True
        if day == n:
            if city in finishers:
                yield tuple(path)
        else:
            for nxt in succ.get((city, day), ()):
                if not used[nxt]:
                    yield from extend(nxt, day + 1)
        used[city] = False
        path.pop()

    for first in starts:
        yield from extend(first, 1)
