"""Golden data the test suite asserts against.

The gamma tables and the coefficient-tuple case lists are transcribed
from the published displays; the reduced matrix forms and their scale
relation to mk_matrix output were expanded by hand.  Tests must not
derive these from the code under test.
"""

from fractions import Fraction

from todamass import MassExpr, MassPair

def _pair(a, b, c, d) -> MassPair:
    return MassPair(MassExpr(a, b, 0), MassExpr(c, d, 0))


# ((c1 of s1, c2 of s1), (c1 of s2, c2 of s2)) in published display order.
EXPECTED_GAMMA = {
    "A2": [
        ((2, 0), (0, 0)),
        ((2, 0), (2, 2)),
        ((2, 2), (2, 2)),
        ((2, 2), (0, 2)),
        ((0, 0), (0, 2)),
    ],
    "B2": [
        ((2, 0), (0, 0)),
        ((2, 0), (4, 2)),
        ((4, 2), (4, 2)),
        ((4, 2), (4, 4)),
        ((0, 0), (0, 2)),
        ((2, 2), (0, 2)),
        ((2, 2), (4, 4)),
    ],
    "G2": [
        ((2, 0), (0, 0)),
        ((2, 0), (6, 2)),
        ((6, 2), (6, 2)),
        ((6, 2), (12, 6)),
        ((8, 4), (12, 6)),
        ((8, 4), (12, 8)),
        ((0, 0), (0, 2)),
        ((2, 2), (0, 2)),
        ((2, 2), (6, 6)),
        ((6, 4), (6, 6)),
        ((6, 4), (12, 8)),
    ],
}

EXPECTED_SPECIAL = {
    "A2": _pair(2, 2, 2, 2),
    "B2": _pair(4, 2, 4, 4),
    "G2": _pair(8, 4, 12, 8),
}

# The published case lists of coefficient tuples (l11, l12, l21, l22).
EXPECTED_MK_TUPLES = {
    "A2": {
        (2, 0, 0, 0),
        (0, 0, 0, 2),
        (2, 2, 0, 2),
        (2, 0, 2, 2),
        (2, 2, 2, 2),
    },
    "B2": {
        (2, 0, 0, 0),
        (2, 0, 4, 2),
        (4, 2, 4, 2),
        (0, 0, 0, 2),
        (2, 2, 0, 2),
        (2, 2, 4, 4),
        (4, 2, 4, 4),
    },
    "G2": {
        (2, 0, 0, 0),
        (2, 0, 6, 2),
        (6, 2, 6, 2),
        (6, 2, 12, 6),
        (8, 4, 12, 6),
        (8, 4, 12, 8),
        (0, 0, 0, 2),
        (2, 2, 0, 2),
        (2, 2, 6, 6),
        (6, 4, 6, 6),
        (6, 4, 12, 8),
    },
}


def reduced_matrix(label: str, l11: int, l12: int, l21: int, l22: int):
    """The hand-reduced 2x2 display form for each algebra's case analysis."""
    if label == "A2":
        return ((2 * l11 - l21 - 2, 2 * l21 - l11),
                (2 * l12 - l22, 2 * l22 - l12 - 2))
    if label == "B2":
        return ((2 * l11 - l21 - 2, l21 - l11),
                (2 * l12 - l22, l22 - l12 - 1))
    if label == "G2":
        return ((6 * l11 - 3 * l21 - 6, 2 * l21 - 3 * l11),
                (6 * l12 - 3 * l22, 2 * l22 - 3 * l12 - 2))
    raise ValueError(label)


# mk_matrix output equals this scalar times the reduced form, verified by
# expanding both displays by hand; kernels (and singularity) coincide.
REDUCED_SCALE = {"A2": -1, "B2": -2, "G2": -1}

# Hand-expanded reduced matrices and determinants for the three worked
# examples: (label, tuple, reduced matrix, reduced det).
WORKED_MK_EXAMPLES = [
    ("A2", (2, 0, 0, 0), ((2, -2), (0, -2)), -4),
    ("B2", (4, 2, 4, 2), ((2, 0), (2, -1)), -2),
    ("G2", (2, 0, 0, 0), ((6, -6), (0, -2)), -12),
]

# Decomposition counts of the special pair at (mu1, mu2) = (1, 1),
# confirmed by hand against the evaluated tables above.
SPECIAL_DECOMPOSITION_COUNTS = {"A2": 2, "B2": 3, "G2": 5}

UNIT = Fraction(1)
