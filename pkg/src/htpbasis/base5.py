"""Embedded order-5 base basis: 61 tours with their pivot days.

Each entry is (permutation, pivot day): the pivot edge of a row is the
edge leaving the pivot-day city, i.e. (p[d-1], p[d], d) for day d < 5 and
the finish edge (p[4], 0, 5) for day 5.  The table is ordered; every row's
pivot edge is used by no later row, which makes the 61 incidence vectors
independent without any arithmetic.
"""

from __future__ import annotations

BASE5_ROWS: tuple[tuple[tuple[int, int, int, int, int], int], ...] = (
    ((1, 5, 2, 3, 4), 1),
    ((3, 5, 2, 1, 4), 2),
    ((3, 5, 4, 2, 1), 1),
    ((2, 5, 4, 3, 1), 2),
    ((2, 5, 1, 3, 4), 1),
    ((4, 5, 1, 2, 3), 2),
    ((4, 5, 3, 1, 2), 1),
    ((3, 1, 5, 2, 4), 2),
    ((1, 3, 5, 2, 4), 3),
    ((1, 3, 5, 4, 2), 2),
    ((1, 2, 5, 4, 3), 3),
    ((3, 2, 5, 1, 4), 2),
    ((3, 4, 5, 1, 2), 3),
    ((2, 4, 5, 3, 1), 2),
    ((3, 4, 1, 5, 2), 3),
    ((1, 4, 3, 5, 2), 4),
    ((1, 2, 3, 5, 4), 3),
    ((1, 3, 2, 5, 4), 4),
    ((3, 4, 2, 5, 1), 3),
    ((3, 2, 4, 5, 1), 4),
    ((2, 1, 4, 5, 3), 3),
    ((2, 3, 4, 1, 5), 4),
    ((1, 3, 2, 4, 5), 1),
    ((3, 1, 2, 4, 5), 1),
    ((2, 3, 1, 4, 5), 1),
    ((3, 2, 1, 4, 5), 1),
    ((2, 4, 1, 3, 5), 1),
    ((4, 2, 1, 3, 5), 1),
    ((4, 3, 1, 2, 5), 1),
    ((3, 4, 1, 2, 5), 1),
    ((5, 2, 1, 4, 3), 4),
    ((5, 2, 1, 3, 4), 2),
    ((5, 4, 1, 3, 2), 3),
    ((5, 1, 4, 3, 2), 4),
    ((5, 1, 2, 3, 4), 4),
    ((5, 3, 1, 4, 2), 3),
    ((5, 1, 3, 4, 2), 4),
    ((5, 3, 1, 2, 4), 2),
    ((5, 1, 3, 2, 4), 4),
    ((5, 4, 1, 2, 3), 3),
    ((5, 1, 4, 2, 3), 4),
    ((5, 3, 4, 2, 1), 3),
    ((5, 4, 3, 2, 1), 4),
    ((5, 3, 4, 1, 2), 2),
    ((5, 4, 3, 1, 2), 4),
    ((1, 4, 3, 2, 5), 2),
    ((4, 1, 3, 2, 5), 4),
    ((1, 4, 2, 3, 5), 1),
    ((4, 1, 2, 3, 5), 1),
    ((2, 1, 4, 3, 5), 2),
    ((1, 2, 4, 3, 5), 4),
    ((1, 2, 3, 4, 5), 1),
    ((2, 1, 3, 4, 5), 1),
    ((5, 2, 3, 1, 4), 3),
    ((5, 3, 2, 1, 4), 4),
    ((5, 4, 2, 1, 3), 3),
    ((5, 2, 4, 1, 3), 4),
    ((5, 3, 2, 4, 1), 2),
    ((5, 2, 3, 4, 1), 4),
    ((5, 2, 4, 3, 1), 2),
    ((5, 4, 2, 3, 1), 4),
)
