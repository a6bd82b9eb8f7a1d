"""Deciding whether a time graph contains a full tour.

A graph contains a tour exactly when the span of its tour vectors is
nonzero, so the dimension report doubles as a Hamiltonicity test.  At
desk scale both sides are computed outright: pruned day-layered search
enumerates the tours, exact elimination measures their span.
"""

import random

from htpbasis import TimeGraph, all_edges, dimension_of, is_hamiltonian

n = 5
rng = random.Random(7)
edges_all = list(all_edges(n))

print("random subgraphs: tour count, span dimension, and the equivalence")
print(f"{'edges':>6} {'htps':>5} {'dim':>4} {'hamiltonian':>12}")
for _ in range(10):
    keep = rng.uniform(0.3, 0.9)
    g = TimeGraph(n, frozenset(e for e in edges_all if rng.random() < keep))
    report = dimension_of(g)
    ham = is_hamiltonian(g)
    assert ham == (report.dimension > 0)
    print(f"{len(g.edges):>6} {report.htp_count:>5} {report.dimension:>4} "
          f"{str(ham).lower():>12}")

print()
print("three crafted cases:")
full = TimeGraph.complete(n)
single = TimeGraph.from_htps(n, [(1, 2, 3, 4, 5)])
sourceless = TimeGraph(n, frozenset(e for e in edges_all if e.day != 0))
for name, g in [("complete", full), ("single tour", single), ("no start edges", sourceless)]:
    report = dimension_of(g)
    print(f"  {name:>15}: dim={report.dimension} "
          f"hamiltonian={str(is_hamiltonian(g)).lower()}")

print()
print("a graph file for the command line:")
print("  $ htpbasis analyze tour.tg")
example = single.to_text().splitlines()
print("  " + "\n  ".join(example[:4] + ["..."]))
