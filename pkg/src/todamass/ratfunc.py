"""Light rational-function arithmetic over complex coefficient arrays.

Coefficients are stored ascending (constant term first), matching
numpy.polynomial conventions.  No general simplification is attempted;
only exact trailing zeros and common monomial factors z^k are cancelled,
which keeps monomial examples exact and degree growth harmless at the
small degrees this package works with.
"""

from __future__ import annotations

import numpy as np
import numpy.polynomial.polynomial as npp

__all__ = ["as_poly", "trim", "RationalFunc", "schwarzian"]


def as_poly(coeffs) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if arr.ndim != 1:
        raise ValueError("coefficient array must be one-dimensional")
    return arr


def trim(coeffs, rel_tol: float = 0.0) -> np.ndarray:
    """Drop high-order coefficients that vanish (within rel_tol * scale)."""
    arr = as_poly(coeffs)
    scale = float(np.max(np.abs(arr))) if arr.size else 0.0
    threshold = rel_tol * scale
    last = arr.size - 1
    while last > 0 and abs(arr[last]) <= threshold:
        last -= 1
    out = arr[: last + 1].copy()
    if out.size == 1 and abs(out[0]) <= threshold:
        out[0] = 0.0
    return out


def _strip_common_z_power(num: np.ndarray, den: np.ndarray):
    k = 0
    limit = min(num.size, den.size) - 1
    while k < limit and num[k] == 0 and den[k] == 0:
        k += 1
    if k:
        return num[k:], den[k:]
    return num, den


class RationalFunc:
    """A ratio of two complex polynomials, both ascending."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1.0,)):
        n = trim(as_poly(num))
        d = trim(as_poly(den))
        if d.size == 1 and d[0] == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num, self.den = _strip_common_z_power(n, d)

    def __add__(self, other: "RationalFunc") -> "RationalFunc":
        other = _coerce(other)
        return RationalFunc(
            npp.polyadd(
                npp.polymul(self.num, other.den), npp.polymul(other.num, self.den)
            ),
            npp.polymul(self.den, other.den),
        )

    def __sub__(self, other: "RationalFunc") -> "RationalFunc":
        other = _coerce(other)
        return RationalFunc(
            npp.polysub(
                npp.polymul(self.num, other.den), npp.polymul(other.num, self.den)
            ),
            npp.polymul(self.den, other.den),
        )

    def __mul__(self, other) -> "RationalFunc":
        if isinstance(other, (int, float, complex)):
            return RationalFunc(self.num * other, self.den)
        other = _coerce(other)
        return RationalFunc(
            npp.polymul(self.num, other.num), npp.polymul(self.den, other.den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunc":
        if isinstance(other, (int, float, complex)):
            return RationalFunc(self.num, self.den * other)
        other = _coerce(other)
        return RationalFunc(
            npp.polymul(self.num, other.den), npp.polymul(self.den, other.num)
        )

    def squared(self) -> "RationalFunc":
        return self * self

    def derivative(self) -> "RationalFunc":
        # (n/d)' = (n'd - nd') / d^2
        n, d = self.num, self.den
        return RationalFunc(
            npp.polysub(
                npp.polymul(npp.polyder(n), d), npp.polymul(n, npp.polyder(d))
            ),
            npp.polymul(d, d),
        )

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return npp.polyval(z, self.num) / npp.polyval(z, self.den)


def _coerce(value) -> RationalFunc:
    if isinstance(value, RationalFunc):
        return value
    if isinstance(value, (int, float, complex)):
        return RationalFunc([value])
    raise TypeError(f"cannot interpret {value!r} as a rational function")


def schwarzian(num, den=(1.0,)) -> RationalFunc:
    """The Schwarzian derivative f'''/f' - (3/2) (f''/f')^2 of f = num/den.

    Returned unsimplified: its denominator vanishes at every critical
    point and pole of f, but actual (double) poles occur only at branch
    points.  Evaluation away from denominator zeros is stable at the
    degrees used here.
    """
    p = as_poly(num)
    q = as_poly(den)
    wronskian = npp.polysub(
        npp.polymul(npp.polyder(p), q), npp.polymul(p, npp.polyder(q))
    )
    d1 = RationalFunc(wronskian, npp.polymul(q, q))  # f'
    d2 = d1.derivative()
    d3 = d2.derivative()
    return d3 / d1 - (d2 / d1).squared() * 1.5
