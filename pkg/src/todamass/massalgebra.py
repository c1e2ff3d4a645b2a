"""Exact arithmetic on symbolic local-mass expressions.

The quantities tracked here are affine-linear forms

    c1*mu1 + c2*mu2 + c0

in two formal indeterminates mu1, mu2 with exact rational coefficients.
They arise as component masses of blowup solutions, where mu_i = 1 + alpha_i
encodes a vortex strength.  Everything in this module is exact; floats enter
only through explicit evaluation by the caller.

``Rational`` is :class:`fractions.Fraction`: it already guarantees the
normal form we need (reduced, positive denominator, arbitrary precision).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import NotOfForm

Rational = Fraction

RationalLike = Union[Fraction, int, str, float]

__all__ = [
    "Rational",
    "RationalLike",
    "as_rational",
    "MassExpr",
    "Theorem13Certificate",
    "CartanMatrix",
    "CARTAN_MATRICES",
    "cartan",
    "mass_add",
    "mass_eval",
    "theorem13_certificate",
]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce a value to an exact Fraction.

    Strings may be ratios ("3/2") or decimals ("1.5"); decimals and floats
    are converted by exact expansion of their decimal representation, so
    as_rational(0.1) == Fraction(1, 10), not the binary value of 0.1.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def _fmt(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MassExpr:
    """An affine-linear mass expression c1*mu1 + c2*mu2 + c0."""

    c1: Fraction
    c2: Fraction
    c0: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", as_rational(self.c1))
        object.__setattr__(self, "c2", as_rational(self.c2))
        object.__setattr__(self, "c0", as_rational(self.c0))

    @staticmethod
    def zero() -> "MassExpr":
        return MassExpr(Fraction(0), Fraction(0), Fraction(0))

    def __add__(self, other: "MassExpr") -> "MassExpr":
        if not isinstance(other, MassExpr):
            return NotImplemented
        return MassExpr(self.c1 + other.c1, self.c2 + other.c2, self.c0 + other.c0)

    def __sub__(self, other: "MassExpr") -> "MassExpr":
        if not isinstance(other, MassExpr):
            return NotImplemented
        return MassExpr(self.c1 - other.c1, self.c2 - other.c2, self.c0 - other.c0)

    def __neg__(self) -> "MassExpr":
        return MassExpr(-self.c1, -self.c2, -self.c0)

    def scaled(self, factor: RationalLike) -> "MassExpr":
        q = as_rational(factor)
        return MassExpr(q * self.c1, q * self.c2, q * self.c0)

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0 and self.c0 == 0

    def eval(self, mu1: RationalLike, mu2: RationalLike) -> Fraction:
        m1, m2 = as_rational(mu1), as_rational(mu2)
        return self.c1 * m1 + self.c2 * m2 + self.c0

    def eval_float(self, mu1: float, mu2: float) -> float:
        return float(self.c1) * mu1 + float(self.c2) * mu2 + float(self.c0)

    def canonical(self) -> str:
        """Canonical text form "q1*mu1 + q2*mu2 + q0" with exact literals."""
        return f"{_fmt(self.c1)}*mu1 + {_fmt(self.c2)}*mu2 + {_fmt(self.c0)}"

    def __str__(self) -> str:
        return self.canonical()

    @classmethod
    def parse(cls, text: str) -> "MassExpr":
        """Parse the canonical text form (and shorthands like "mu1 - 1/2")."""
        s = text.strip()
        if not s:
            raise ValueError("empty mass expression")
        c1 = c2 = c0 = Fraction(0)
        for term in re.findall(r"[+-]?[^+-]+", s):
            m = _TERM_RE.match(term)
            if m is None:
                raise ValueError(f"cannot parse mass expression term {term!r}")
            coef_text, var = m.group("coef"), m.group("var")
            coef_text = coef_text.replace(" ", "")
            if coef_text in ("", "+", "-"):
                if var is None:
                    raise ValueError(f"cannot parse mass expression term {term!r}")
                coef = Fraction(-1 if coef_text == "-" else 1)
            else:
                coef = as_rational(coef_text)
            if var == "mu1":
                c1 += coef
            elif var == "mu2":
                c2 += coef
            else:
                c0 += coef
        return cls(c1, c2, c0)


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\s*(?:\d+\s*/\s*\d+|\d+\.\d*|\.\d+|\d+)?)"
    r"\s*(?:\*\s*)?(?P<var>mu1|mu2)?\s*$"
)


def mass_add(a: MassExpr, b: MassExpr) -> MassExpr:
    """Coefficientwise exact sum of two mass expressions."""
    return a + b


def mass_eval(m: MassExpr, mu1: RationalLike, mu2: RationalLike) -> Fraction:
    """Evaluate a mass expression at an exact rational point (mu1, mu2)."""
    return m.eval(mu1, mu2)


@dataclass(frozen=True)
class Theorem13Certificate:
    """Integer triple (n1, n2, n3) witnessing m = 2*(n1*mu1 + n2*mu2 + n3)."""

    n1: int
    n2: int
    n3: int

    def reconstruct(self) -> MassExpr:
        return MassExpr(2 * self.n1, 2 * self.n2, 2 * self.n3)


def theorem13_certificate(m: MassExpr) -> Theorem13Certificate:
    """Return the witness that m is twice an integer combination of mu1, mu2, 1.

    Raises NotOfForm when any halved coefficient fails to be an integer.
    """
    halves = (m.c1 / 2, m.c2 / 2, m.c0 / 2)
    if any(h.denominator != 1 for h in halves):
        raise NotOfForm(f"{m.canonical()} is not of the form 2*(n1*mu1 + n2*mu2 + n3)")
    return Theorem13Certificate(int(halves[0]), int(halves[1]), int(halves[2]))


@dataclass(frozen=True)
class CartanMatrix:
    """A rank-2 Cartan matrix [[2, k12], [k21, 2]] tagged with its label."""

    label: str
    k12: int
    k21: int
    k11: int = 2
    k22: int = 2


# The three admissible systems.  k12*k21 takes the values 1, 2, 3.
CARTAN_MATRICES = {
    "A2": CartanMatrix("A2", -1, -1),
    "B2": CartanMatrix("B2", -1, -2),
    "G2": CartanMatrix("G2", -1, -3),
}


def cartan(label: str) -> CartanMatrix:
    """Look up one of the three admissible Cartan matrices by label."""
    try:
        return CARTAN_MATRICES[label]
    except KeyError:
        raise ValueError(
            f"unknown algebra {label!r}; expected one of {sorted(CARTAN_MATRICES)}"
        ) from None
