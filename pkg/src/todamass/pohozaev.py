"""The Pohozaev quadratic and the root-swap reflections it admits.

A pair of component masses (s1, s2) at a blowup point with weights
(mu1, mu2) must satisfy the quadratic identity

    k21*s1^2 + k12*k21*s1*s2 + k12*s2^2 = 2*k21*mu1*s1 + 2*k12*mu2*s2

where [[2, k12], [k21, 2]] is the Cartan matrix of the system.  Viewed as
a quadratic in s1 alone (s2 fixed), the identity has two roots whose sum
is 2*mu1 - k12*s2; swapping a solution for its conjugate root is the
component-1 reflection, and symmetrically for component 2.  Both swaps
leave the quadratic's residual invariant as a polynomial, which is the
mechanism behind the finite orbit enumerated in :mod:`todamass.gamma`.

Everything here is symbolic: masses are :class:`MassExpr` forms and the
residual is returned as an exact quadratic polynomial in (mu1, mu2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .massalgebra import CartanMatrix, MassExpr, RationalLike, as_rational

__all__ = ["MassPair", "QuadPoly", "pi_residual", "reflect"]


@dataclass(frozen=True)
class MassPair:
    """An ordered pair of symbolic component masses."""

    s1: MassExpr
    s2: MassExpr

    def canonical(self) -> tuple[str, str]:
        return (self.s1.canonical(), self.s2.canonical())


@dataclass(frozen=True)
class QuadPoly:
    """Exact polynomial of total degree <= 2 in (mu1, mu2).

    Fields hold the coefficients of mu1^2, mu1*mu2, mu2^2, mu1, mu2, 1.
    """

    m20: Fraction = Fraction(0)
    m11: Fraction = Fraction(0)
    m02: Fraction = Fraction(0)
    m10: Fraction = Fraction(0)
    m01: Fraction = Fraction(0)
    m00: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("m20", "m11", "m02", "m10", "m01", "m00"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def __add__(self, other: "QuadPoly") -> "QuadPoly":
        if not isinstance(other, QuadPoly):
            return NotImplemented
        return QuadPoly(
            self.m20 + other.m20,
            self.m11 + other.m11,
            self.m02 + other.m02,
            self.m10 + other.m10,
            self.m01 + other.m01,
            self.m00 + other.m00,
        )

    def __sub__(self, other: "QuadPoly") -> "QuadPoly":
        if not isinstance(other, QuadPoly):
            return NotImplemented
        return self + other.scaled(-1)

    def scaled(self, factor: RationalLike) -> "QuadPoly":
        q = as_rational(factor)
        return QuadPoly(
            q * self.m20, q * self.m11, q * self.m02,
            q * self.m10, q * self.m01, q * self.m00,
        )

    def is_zero(self) -> bool:
        return all(
            getattr(self, name) == 0
            for name in ("m20", "m11", "m02", "m10", "m01", "m00")
        )

    def eval(self, mu1: RationalLike, mu2: RationalLike) -> Fraction:
        a, b = as_rational(mu1), as_rational(mu2)
        return (
            self.m20 * a * a
            + self.m11 * a * b
            + self.m02 * b * b
            + self.m10 * a
            + self.m01 * b
            + self.m00
        )

    def coefficients(self) -> dict[str, Fraction]:
        return {
            "mu1^2": self.m20,
            "mu1*mu2": self.m11,
            "mu2^2": self.m02,
            "mu1": self.m10,
            "mu2": self.m01,
            "1": self.m00,
        }


def _product(a: MassExpr, b: MassExpr) -> QuadPoly:
    # (a1*mu1 + a2*mu2 + a0) * (b1*mu1 + b2*mu2 + b0), expanded exactly.
    return QuadPoly(
        m20=a.c1 * b.c1,
        m11=a.c1 * b.c2 + a.c2 * b.c1,
        m02=a.c2 * b.c2,
        m10=a.c1 * b.c0 + a.c0 * b.c1,
        m01=a.c2 * b.c0 + a.c0 * b.c2,
        m00=a.c0 * b.c0,
    )


_MU1 = MassExpr(1, 0, 0)
_MU2 = MassExpr(0, 1, 0)


def pi_residual(p: MassPair, K: CartanMatrix) -> QuadPoly:
    """Left side minus right side of the Pohozaev identity, expanded.

    The pair satisfies the identity for all (mu1, mu2) exactly when the
    returned polynomial is zero.
    """
    s1, s2 = p.s1, p.s2
    lhs = (
        _product(s1, s1).scaled(K.k21)
        + _product(s1, s2).scaled(K.k12 * K.k21)
        + _product(s2, s2).scaled(K.k12)
    )
    rhs = _product(_MU1, s1).scaled(2 * K.k21) + _product(_MU2, s2).scaled(2 * K.k12)
    return lhs - rhs


def reflect(p: MassPair, K: CartanMatrix, component: int) -> MassPair:
    """Swap one component of the pair for its conjugate quadratic root.

    component=1 sends s1 to 2*mu1 - k12*s2 - s1; component=2 sends s2 to
    2*mu2 - k21*s1 - s2.  Each map is an involution and preserves the
    Pohozaev residual identically.
    """
    if component == 1:
        new_s1 = MassExpr(2, 0, 0) - p.s2.scaled(K.k12) - p.s1
        return MassPair(new_s1, p.s2)
    if component == 2:
        new_s2 = MassExpr(0, 2, 0) - p.s1.scaled(K.k21) - p.s2
        return MassPair(p.s1, new_s2)
    raise ValueError(f"component must be 1 or 2, got {component!r}")
