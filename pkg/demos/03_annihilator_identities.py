"""The counting argument that caps the tour span dimension.

Vertex balances (out-edges minus in-edges of a vertex) and city balances
(all out-edges of a city minus all start edges) are orthogonal to every
tour vector.  There are n^2 + n - 1 of them and they are independent,
which is certified here by pairing them against explicit dual witnesses:

* the partial path ending at (i, t) pairs to -1 with the (i, t) balance
  and to 0 with every other vertex balance;
* the double-visit tour through city i pairs to 1 with the city-i balance
  and to 0 with the others.

Independence of the family gives
    dim(span of tours) <= edge_count - (n^2 + n - 1) = n(n-1)(n-2) + 1,
and the basis builder shows that bound is exact.
"""

from htpbasis import (
    annihilator_basis,
    annihilator_family,
    double_visit_path,
    edge_count,
    full_dimension,
    htp_vector,
    inner_product,
    verify_duality,
    vertex_annihilator,
)

n = 5
print(verify_duality(n).to_text())

# A couple of the pairings, spelled out.
tour = htp_vector(n, (1, 5, 2, 3, 4))
balance = vertex_annihilator(n, 5, 2)
print("tour (1 5 2 3 4) against the balance of city 5 on day 2:",
      inner_product(tour, balance))
print("double-visit tour for city 2:", double_visit_path(n, 2))
print()

# The annihilator of the whole tour span has dimension n^2 + n - 1, the
# family size: nothing else is orthogonal to every tour.
from itertools import permutations
tours = [htp_vector(n, p) for p in permutations(range(1, n + 1))]
ann = annihilator_basis(tours, edge_count(n))
fam = annihilator_family(n)
print(f"dim of everything orthogonal to all tours: {len(ann)}")
print(f"family size: {len(fam)}   family rank: {fam.certified_rank()}")
print(f"tour span dimension (brute force): {full_dimension(n).dimension}")
print(f"split check: {full_dimension(n).dimension} + {len(ann)} = {edge_count(n)} edges")
