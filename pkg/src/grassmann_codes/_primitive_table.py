"""Primitive polynomials over F_p, keyed by (p, degree).

Values are base-p encodings of the monic modulus (leading coefficient
included).  Generated by scripts/gen_primitive_table.py; do not edit.
"""

PRIMITIVE_POLYS = {
    (2, 1): 3,
    (2, 2): 7,
    (2, 3): 11,
    (2, 4): 19,
    (2, 5): 37,
    (2, 6): 67,
    (2, 7): 131,
    (2, 8): 285,
    (2, 9): 529,
    (2, 10): 1033,
    (2, 11): 2053,
    (2, 12): 4179,
    (2, 13): 8219,
    (2, 14): 16427,
    (2, 15): 32771,
    (2, 16): 65581,
    (2, 17): 131081,
    (2, 18): 262183,
    (2, 19): 524327,
    (2, 20): 1048585,
    (2, 21): 2097157,
    (2, 22): 4194307,
    (2, 23): 8388641,
    (2, 24): 16777243,
    (3, 1): 4,
    (3, 2): 14,
    (3, 3): 34,
    (3, 4): 86,
    (3, 5): 250,
    (3, 6): 734,
    (3, 7): 2203,
    (3, 8): 6590,
    (3, 9): 19747,
    (3, 10): 59081,
    (3, 11): 177163,
    (3, 12): 531656,
    (3, 13): 1594330,
    (3, 14): 4782974,
    (3, 15): 14348923,
    (5, 1): 7,
    (5, 2): 32,
    (5, 3): 142,
    (5, 4): 662,
    (5, 5): 3147,
    (5, 6): 15632,
    (5, 7): 78142,
    (5, 8): 390663,
    (5, 9): 1953163,
    (5, 10): 9765658,
    (7, 1): 9,
    (7, 2): 59,
    (7, 3): 366,
    (7, 4): 2476,
    (7, 5): 16818,
    (7, 6): 117808,
    (7, 7): 823587,
    (7, 8): 5764811,
    (11, 1): 14,
    (11, 2): 139,
    (11, 3): 1346,
    (11, 4): 14654,
    (11, 5): 161187,
    (11, 6): 1771712,
    (13, 1): 15,
    (13, 2): 184,
    (13, 3): 2216,
    (13, 4): 28745,
    (13, 5): 371347,
    (13, 6): 4827006,
    (17, 1): 20,
    (17, 2): 309,
    (17, 3): 4933,
    (17, 4): 83549,
    (17, 5): 1419877,
    (19, 1): 23,
    (19, 2): 382,
    (19, 3): 6882,
    (19, 4): 130369,
    (19, 5): 2476127,
    (23, 1): 25,
    (23, 2): 559,
    (23, 3): 12193,
    (23, 4): 279875,
    (23, 5): 6436369,
    (29, 1): 31,
    (29, 2): 873,
    (29, 3): 24429,
    (29, 4): 707329,
    (31, 1): 38,
    (31, 2): 1004,
    (31, 3): 29836,
    (31, 4): 923600,
    (37, 1): 39,
    (37, 2): 1411,
    (37, 3): 50703,
    (37, 4): 1874200,
    (41, 1): 47,
    (41, 2): 1734,
    (41, 3): 68968,
    (41, 4): 2825819,
    (43, 1): 52,
    (43, 2): 1895,
    (43, 3): 79564,
    (43, 4): 3418864,
    (47, 1): 49,
    (47, 2): 2269,
    (47, 3): 103874,
    (47, 4): 4879767,
    (53, 1): 55,
    (53, 2): 2867,
    (53, 3): 148935,
    (53, 4): 7890552,
    (59, 1): 62,
    (59, 2): 3542,
    (59, 3): 205441,
    (59, 4): 12117434,
    (61, 1): 63,
    (61, 2): 3784,
    (61, 3): 227059,
    (61, 4): 13845904,
}
