"""Order-3 stabilizer data for known numerical fiducials in dimensions 5-45.

``ORDER3_ROWS[d] = (F, chi, eigenspace_dims, fiducial_eigenspace_dim)``: the
numerical fiducial in dimension ``d`` is an eigenvector of ``[F, chi]``,
whose three eigenspaces have the listed dimensions.

``ZAUNER_CONJUGATORS[d] = (L, eta)``: ``[L, eta] [F, chi] [L, eta]^-1 = [Z, 0]``.

Matrices are row-major 4-tuples with unreduced entries.
"""

from __future__ import annotations

ORDER3_ROWS: dict[int, tuple[tuple[int, int, int, int], tuple[int, int], tuple[int, int, int], int]] = {
    5: ((-1, -1, 1, 0), (2, 2), (1, 2, 2), 2),
    26: ((-7, -9, -1, 6), (-11, 11), (8, 9, 9), 9),
    6: ((-2, 3, -1, 1), (3, 0), (1, 2, 3), 3),
    27: ((-10, 1, -10, 9), (-3, -12), (8, 9, 10), 10),
    7: ((-2, -2, -2, 1), (2, 0), (2, 2, 3), 3),
    28: ((-3, 21, 5, 2), (-10, -6), (9, 9, 10), 10),
    8: ((-4, 3, 1, 3), (3, -1), (2, 3, 3), 3),
    29: ((-13, -6, 2, 12), (-10, 12), (9, 10, 10), 10),
    9: ((-3, 2, 1, 2), (2, 1), (2, 3, 4), 4),
    30: ((-8, -7, -9, 7), (11, -3), (9, 10, 11), 11),
    10: ((-4, -7, -1, 3), (-2, 0), (3, 3, 4), 4),
    31: ((-9, -10, -2, 8), (-14, 6), (10, 10, 11), 11),
    11: ((-5, 4, 3, 4), (-5, 0), (3, 4, 4), 4),
    32: ((-11, -31, -15, 10), (11, -7), (10, 11, 11), 11),
    12: ((-4, 11, 1, 3), (4, -5), (3, 4, 5), 5),
    33: ((-7, -5, 2, 6), (8, -5), (10, 11, 12), 12),
    13: ((-2, -2, -5, 1), (6, 0), (4, 4, 5), 5),
    34: ((-12, 3, 1, 11), (-1, -16), (11, 11, 12), 12),
    14: ((-2, -3, 1, 1), (-5, 1), (4, 5, 5), 5),
    35: ((-13, -12, 16, 12), (11, -12), (11, 12, 12), 12),
    15: ((-5, 1, -6, 4), (-7, -6), (4, 5, 6), 6),
    36: ((-8, 21, -13, 7), (0, 7), (11, 12, 13), 13),
    16: ((-8, 13, 3, 7), (1, 0), (5, 5, 6), 6),
    37: ((-16, 1, 18, 15), (-4, 3), (12, 12, 13), 13),
    17: ((-5, -7, 3, 4), (6, 7), (5, 6, 6), 5),
    38: ((-6, -31, 1, 5), (12, -10), (12, 13, 13), 13),
    18: ((-5, 5, 3, 4), (9, 0), (5, 6, 7), 7),
    39: ((-17, -11, 0, 16), (8, 15), (12, 13, 14), 14),
    19: ((-2, 4, 4, 1), (-7, -4), (6, 6, 7), 7),
    40: ((-3, 19, -13, 2), (-12, -19), (13, 13, 14), 14),
    20: ((-2, -3, 1, 1), (-9, -6), (6, 7, 7), 7),
    41: ((-2, -10, -12, 1), (19, 13), (13, 14, 14), 14),
    21: ((-5, -6, -7, 4), (-6, 1), (6, 7, 8), 8),
    42: ((-15, 11, 19, 14), (0, -15), (13, 14, 15), 15),
    22: ((-2, -1, 3, 1), (8, 2), (7, 7, 8), 8),
    43: ((-11, 1, 18, 10), (-1, 21), (14, 14, 15), 15),
    23: ((-11, -10, -5, 10), (0, -3), (7, 8, 8), 8),
    44: ((-8, -29, 5, 7), (16, -5), (14, 15, 15), 15),
    24: ((-2, -3, 1, 1), (0, -3), (7, 8, 9), 9),
    45: ((-20, -1, 21, 19), (-8, 6), (14, 15, 16), 16),
    25: ((-6, -1, 6, 5), (-7, 12), (8, 8, 9), 9),
}

ZAUNER_CONJUGATORS: dict[int, tuple[tuple[int, int, int, int], tuple[int, int]]] = {
    5: ((1, 0, 1, 1), (0, -2)),
    19: ((2, 1, 0, -9), (5, -6)),
    33: ((6, 2, 5, -15), (13, 15)),
    6: ((0, 1, 1, -1), (1, -1)),
    20: ((0, 1, -1, -1), (9, -3)),
    34: ((0, 1, -1, -11), (13, 3)),
    7: ((2, 0, -3, -3), (0, 3)),
    21: ((2, 1, -4, 8), (-3, -7)),
    35: ((14, 2, 10, 4), (4, 6)),
    8: ((0, 1, -1, -3), (-2, 3)),
    22: ((1, 0, 2, 1), (8, 6)),
    36: ((17, 1, 5, -4), (-2, -5)),
    9: ((2, 0, -3, -4), (0, -4)),
    23: ((0, 3, -8, -7), (-10, -4)),
    37: ((6, 0, -15, -6), (-7, -6)),
    10: ((3, 1, -7, -2), (2, 4)),
    24: ((0, 1, -1, -1), (3, 0)),
    38: ((0, 1, -1, -5), (-6, 16)),
    11: ((1, 1, 2, 3), (0, 5)),
    25: ((1, 0, 6, 1), (3, 4)),
    39: ((7, 2, 2, 6), (17, 14)),
    12: ((0, 1, -1, -3), (3, 2)),
    26: ((9, 0, 11, -23), (2, -7)),
    40: ((27, 1, 14, -35), (-19, 2)),
    13: ((4, 2, 5, 6), (-6, -5)),
    27: ((1, 0, 10, -1), (-4, 7)),
    41: ((18, 0, -5, 16), (1, -15)),
    14: ((0, 1, -1, -1), (-4, 3)),
    28: ((12, 1, -25, 26), (-6, -8)),
    42: ((2, 1, 11, -36), (8, 7)),
    15: ((1, 0, 5, -1), (0, 7)),
    29: ((11, 0, -2, 8), (-4, -2)),
    43: ((8, 1, -16, -18), (14, 16)),
    16: ((3, 1, -11, -14), (5, 8)),
    30: ((10, 1, 29, 3), (12, 1)),
    44: ((7, 1, -37, 20), (6, 19)),
    17: ((1, 1, 2, 3), (8, -4)),
    31: ((11, 0, 6, -14), (-5, 4)),
    45: ((1, 0, 20, 1), (14, -6)),
    18: ((2, 1, 7, -14), (-3, 3)),
    32: ((27, 1, -8, -5), (13, -15)),
}
