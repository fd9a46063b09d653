"""Frozen small-range reference values shared across test modules.

BASIC rows are (p(n), edges, self-conjugate count, framework size); the
p(n) column is the classic partition-count sequence (OEIS A000041) and the
self-conjugate column is A000700.  MAXIMA rows are (max degree, max
dim_loc).  CENTRAL rows are (|C^(1)|, |C^(2)|, spine size, interior size).
"""

BASIC = {
    1: (1, 0, 1, 1),
    2: (2, 1, 0, 2),
    3: (3, 2, 1, 3),
    4: (5, 5, 1, 5),
    5: (7, 9, 1, 7),
    6: (11, 17, 1, 10),
    7: (15, 28, 1, 11),
    8: (22, 47, 2, 14),
    9: (30, 73, 2, 15),
    10: (42, 114, 2, 18),
    11: (56, 170, 2, 19),
    12: (77, 253, 3, 22),
}

MAXIMA = {
    1: (0, 0),
    2: (1, 1),
    3: (2, 1),
    4: (3, 2),
    5: (4, 2),
    6: (6, 2),
    7: (7, 3),
    8: (8, 3),
    9: (8, 3),
    10: (12, 3),
    11: (13, 4),
    12: (14, 4),
}

CENTRAL = {
    1: (0, 0, 1, 0),
    2: (0, 0, 0, 0),
    3: (0, 0, 1, 0),
    4: (0, 0, 1, 0),
    5: (0, 0, 1, 0),
    6: (1, 1, 1, 1),
    7: (2, 4, 1, 4),
    8: (8, 8, 6, 8),
    9: (5, 15, 12, 15),
    10: (16, 24, 6, 24),
    11: (11, 27, 12, 37),
    12: (21, 45, 11, 55),
}

# fixed points of conjugation, in decreasing lexicographic order
SC_AXES = {
    7: ((4, 1, 1, 1),),
    8: ((4, 2, 1, 1), (3, 3, 2)),
    10: ((5, 2, 1, 1, 1), (4, 3, 2, 1)),
    12: ((6, 2, 1, 1, 1, 1), (5, 3, 2, 1, 1), (4, 4, 2, 2)),
}
