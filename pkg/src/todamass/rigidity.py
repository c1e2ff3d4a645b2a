"""Non-degeneracy certificates: the M_K matrices and the Q-condition.

Each enumerated mass pair has integer coefficients (l11, l12, l21, l22)
with respect to (mu1, mu2).  Linearizing the Pohozaev identity around the
pair produces a 2x2 integer matrix; non-singularity of that matrix for
every enumerated pair is what pins blowup masses to the quantized table.

The Q-condition asks that 1, alpha1, alpha2 be linearly independent over
the rationals.  Callers declare a finite rational basis for the numbers
involved (first basis element representing 1) and the test reduces to an
exact rank computation on a 3-row rational matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BasisMismatch, SingularFound
from .gamma import enumerate_gamma
from .massalgebra import CartanMatrix, RationalLike, as_rational
from .pohozaev import MassPair

__all__ = [
    "MKInput",
    "MKMatrix",
    "mk_matrix",
    "mk_nonsingular_certificate",
    "QVector",
    "q_condition",
    "rational_rank",
]


@dataclass(frozen=True)
class MKInput:
    """Integer mu-coefficients (l11, l12, l21, l22) of an enumerated pair.

    l11, l12 are the mu1 and mu2 coefficients of the first component mass;
    l21, l22 those of the second.
    """

    l11: int
    l12: int
    l21: int
    l22: int

    @classmethod
    def from_mass_pair(cls, p: MassPair) -> "MKInput":
        coeffs = (p.s1.c1, p.s1.c2, p.s2.c1, p.s2.c2)
        if p.s1.c0 != 0 or p.s2.c0 != 0:
            raise ValueError("mass pair has nonzero constant terms")
        if any(c.denominator != 1 for c in coeffs):
            raise ValueError("mass pair has non-integer coefficients")
        return cls(*(int(c) for c in coeffs))


@dataclass(frozen=True)
class MKMatrix:
    """Row-major 2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))


def mk_matrix(inp: MKInput, K: CartanMatrix) -> MKMatrix:
    """Linearization matrix of the Pohozaev identity at the given pair."""
    k12, k21 = K.k12, K.k21
    prod = k12 * k21
    return MKMatrix(
        a=2 * k21 * inp.l11 + prod * inp.l21 - 2 * k21,
        b=2 * k12 * inp.l21 + prod * inp.l11,
        c=2 * k21 * inp.l12 + prod * inp.l22,
        d=2 * k12 * inp.l22 + prod * inp.l12 - 2 * k12,
    )


def mk_nonsingular_certificate(K: CartanMatrix) -> list[tuple[MKInput, int]]:
    """Determinants of the M_K matrix for every enumerated mass pair.

    Returns (input, det) tuples in enumeration order.  Raises
    SingularFound if any determinant vanishes; that none does is the
    non-degeneracy fact the certificate records.
    """
    certificate: list[tuple[MKInput, int]] = []
    for pair in enumerate_gamma(K).pairs:
        inp = MKInput.from_mass_pair(pair)
        det = mk_matrix(inp, K).det
        if det == 0:
            raise SingularFound(f"singular M_K matrix for {inp} in {K.label}")
        certificate.append((inp, det))
    return certificate


@dataclass(frozen=True)
class QVector:
    """Exact rational coordinates of a real number in a declared basis.

    The basis is a finite list of real numbers, linearly independent over
    the rationals, whose first element represents 1.  Only the labels
    travel with the vector; two vectors may be combined when their bases
    agree in length and (when both are labelled) in the labels themselves.
    """

    coordinates: tuple[Fraction, ...]
    basis: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        coords = tuple(as_rational(c) for c in self.coordinates)
        if not coords:
            raise ValueError("QVector needs at least one coordinate")
        object.__setattr__(self, "coordinates", coords)
        if self.basis is not None:
            basis = tuple(str(b) for b in self.basis)
            if len(basis) != len(coords):
                raise ValueError("basis and coordinates have different lengths")
            object.__setattr__(self, "basis", basis)

    @classmethod
    def from_rational(cls, value: RationalLike, dimension: int = 1) -> "QVector":
        coords = [as_rational(value)] + [Fraction(0)] * (dimension - 1)
        return cls(tuple(coords))

    def rational_part(self) -> Optional[Fraction]:
        """The value as a rational, if the non-unit coordinates vanish."""
        if all(c == 0 for c in self.coordinates[1:]):
            return self.coordinates[0]
        return None


def _check_shared_basis(a1: QVector, a2: QVector) -> int:
    if len(a1.coordinates) != len(a2.coordinates):
        raise BasisMismatch(
            f"coordinate lengths differ: {len(a1.coordinates)} vs {len(a2.coordinates)}"
        )
    if a1.basis is not None and a2.basis is not None and a1.basis != a2.basis:
        raise BasisMismatch(f"bases differ: {a1.basis} vs {a2.basis}")
    return len(a1.coordinates)


def rational_rank(rows: Sequence[Sequence[RationalLike]]) -> int:
    """Rank of a matrix over the rationals by exact Gaussian elimination."""
    matrix = [[as_rational(x) for x in row] for row in rows]
    rank = 0
    col = 0
    n_cols = len(matrix[0]) if matrix else 0
    while rank < len(matrix) and col < n_cols:
        pivot_row = next(
            (r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None
        )
        if pivot_row is None:
            col += 1
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, len(matrix)):
            if matrix[r][col] != 0:
                factor = matrix[r][col] / pivot
                matrix[r] = [
                    matrix[r][c] - factor * matrix[rank][c] for c in range(n_cols)
                ]
        rank += 1
        col += 1
    return rank


def q_condition(alpha1: QVector, alpha2: QVector) -> bool:
    """Whether 1, alpha1, alpha2 are linearly independent over the rationals.

    The unit is represented by the coordinate vector (1, 0, ..., 0) in the
    shared basis, so the test is exactly rank 3 of the stacked matrix.
    """
    n = _check_shared_basis(alpha1, alpha2)
    unit = [Fraction(1)] + [Fraction(0)] * (n - 1)
    rows = [unit, list(alpha1.coordinates), list(alpha2.coordinates)]
    return rational_rank(rows) == 3
