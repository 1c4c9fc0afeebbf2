"""Non-singular vectors of the two base permutations, in the basis e_1..e_d.

Coordinate i is letter i; bit i-1 of the packed vector.
"""

NS_TAU6 = [
    (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
    (1, 0, 1, 0, 0, 0), (0, 1, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), (1, 0, 0, 1, 0, 0),
    (1, 1, 0, 1, 0, 0), (1, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 0), (1, 0, 0, 0, 1, 0),
    (1, 1, 0, 0, 1, 0), (1, 0, 1, 0, 1, 0), (0, 0, 0, 1, 1, 0), (1, 1, 1, 1, 1, 0),
    (0, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 0, 1),
    (0, 0, 0, 1, 0, 1), (0, 1, 0, 1, 0, 1), (1, 1, 0, 1, 0, 1), (0, 0, 1, 1, 0, 1),
    (1, 0, 1, 1, 0, 1), (1, 1, 1, 1, 0, 1), (0, 0, 0, 0, 1, 1), (0, 1, 0, 0, 1, 1),
    (1, 1, 0, 0, 1, 1), (0, 0, 1, 0, 1, 1), (1, 0, 1, 0, 1, 1), (1, 1, 1, 0, 1, 1),
    (1, 1, 0, 1, 1, 1), (1, 0, 1, 1, 1, 1), (0, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1),
]

NS_SIGMA8 = [
    (1, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0), (0, 1, 1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 1, 0, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 0), (0, 0, 1, 0, 1, 0, 0, 0), (0, 0, 0, 1, 1, 0, 0, 0), (1, 1, 1, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 0, 1, 0, 0), (1, 1, 0, 0, 0, 1, 0, 0), (1, 0, 1, 0, 0, 1, 0, 0),
    (1, 0, 0, 1, 0, 1, 0, 0), (0, 1, 1, 1, 0, 1, 0, 0), (1, 0, 0, 0, 1, 1, 0, 0), (0, 1, 1, 0, 1, 1, 0, 0),
    (0, 1, 0, 1, 1, 1, 0, 0), (0, 0, 1, 1, 1, 1, 0, 0), (0, 1, 1, 1, 1, 1, 0, 0), (1, 1, 1, 1, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 0, 1, 0), (1, 1, 0, 0, 0, 0, 1, 0), (1, 0, 1, 0, 0, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 1, 0), (0, 1, 1, 1, 0, 0, 1, 0), (1, 0, 0, 0, 1, 0, 1, 0), (0, 1, 1, 0, 1, 0, 1, 0),
    (0, 1, 0, 1, 1, 0, 1, 0), (0, 0, 1, 1, 1, 0, 1, 0), (0, 1, 1, 1, 1, 0, 1, 0), (1, 1, 1, 1, 1, 0, 1, 0),
    (0, 0, 0, 0, 0, 1, 1, 0), (1, 1, 1, 0, 0, 1, 1, 0), (1, 1, 0, 1, 0, 1, 1, 0), (1, 0, 1, 1, 0, 1, 1, 0),
    (0, 1, 1, 1, 0, 1, 1, 0), (1, 1, 1, 1, 0, 1, 1, 0), (1, 1, 0, 0, 1, 1, 1, 0), (1, 0, 1, 0, 1, 1, 1, 0),
    (0, 1, 1, 0, 1, 1, 1, 0), (1, 1, 1, 0, 1, 1, 1, 0), (1, 0, 0, 1, 1, 1, 1, 0), (0, 1, 0, 1, 1, 1, 1, 0),
    (1, 1, 0, 1, 1, 1, 1, 0), (0, 0, 1, 1, 1, 1, 1, 0), (1, 0, 1, 1, 1, 1, 1, 0), (0, 1, 1, 1, 1, 1, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 0, 0, 1), (0, 0, 1, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0, 1), (1, 1, 1, 1, 0, 0, 0, 1), (0, 0, 0, 0, 1, 0, 0, 1), (1, 1, 1, 0, 1, 0, 0, 1),
    (1, 1, 0, 1, 1, 0, 0, 1), (1, 0, 1, 1, 1, 0, 0, 1), (0, 1, 1, 1, 1, 0, 0, 1), (1, 1, 1, 1, 1, 0, 0, 1),
    (0, 0, 0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 1, 0, 1), (1, 1, 0, 0, 0, 1, 0, 1), (0, 0, 1, 0, 0, 1, 0, 1),
    (1, 0, 1, 0, 0, 1, 0, 1), (1, 1, 1, 0, 0, 1, 0, 1), (0, 0, 0, 1, 0, 1, 0, 1), (1, 0, 0, 1, 0, 1, 0, 1),
    (1, 1, 0, 1, 0, 1, 0, 1), (1, 0, 1, 1, 0, 1, 0, 1), (0, 0, 0, 0, 1, 1, 0, 1), (1, 0, 0, 0, 1, 1, 0, 1),
    (1, 1, 0, 0, 1, 1, 0, 1), (1, 0, 1, 0, 1, 1, 0, 1), (1, 0, 0, 1, 1, 1, 0, 1), (0, 1, 1, 1, 1, 1, 0, 1),
    (0, 0, 0, 0, 0, 0, 1, 1), (0, 1, 0, 0, 0, 0, 1, 1), (1, 1, 0, 0, 0, 0, 1, 1), (0, 0, 1, 0, 0, 0, 1, 1),
    (1, 0, 1, 0, 0, 0, 1, 1), (1, 1, 1, 0, 0, 0, 1, 1), (0, 0, 0, 1, 0, 0, 1, 1), (1, 0, 0, 1, 0, 0, 1, 1),
    (1, 1, 0, 1, 0, 0, 1, 1), (1, 0, 1, 1, 0, 0, 1, 1), (0, 0, 0, 0, 1, 0, 1, 1), (1, 0, 0, 0, 1, 0, 1, 1),
    (1, 1, 0, 0, 1, 0, 1, 1), (1, 0, 1, 0, 1, 0, 1, 1), (1, 0, 0, 1, 1, 0, 1, 1), (0, 1, 1, 1, 1, 0, 1, 1),
    (1, 1, 0, 0, 0, 1, 1, 1), (1, 0, 1, 0, 0, 1, 1, 1), (0, 1, 1, 0, 0, 1, 1, 1), (1, 1, 1, 0, 0, 1, 1, 1),
    (1, 0, 0, 1, 0, 1, 1, 1), (0, 1, 0, 1, 0, 1, 1, 1), (1, 1, 0, 1, 0, 1, 1, 1), (0, 0, 1, 1, 0, 1, 1, 1),
    (1, 0, 1, 1, 0, 1, 1, 1), (0, 1, 1, 1, 0, 1, 1, 1), (1, 0, 0, 0, 1, 1, 1, 1), (0, 1, 0, 0, 1, 1, 1, 1),
    (1, 1, 0, 0, 1, 1, 1, 1), (0, 0, 1, 0, 1, 1, 1, 1), (1, 0, 1, 0, 1, 1, 1, 1), (0, 1, 1, 0, 1, 1, 1, 1),
    (0, 0, 0, 1, 1, 1, 1, 1), (1, 0, 0, 1, 1, 1, 1, 1), (0, 1, 0, 1, 1, 1, 1, 1), (0, 0, 1, 1, 1, 1, 1, 1),
]
