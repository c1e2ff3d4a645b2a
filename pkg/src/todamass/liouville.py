"""Numerical oracle for Liouville developing maps.

A non-constant rational map f = P/Q on the sphere induces the conformal
metric density

    e^u = 8 |f'|^2 / (1 + |f|^2)^2
        = 8 |W|^2 / (|P|^2 + |Q|^2)^2,   W = P'Q - PQ',

where the constant 8 is the normalization that makes u solve
Delta u + e^u = 0 (a constant of 4 in the same formula instead solves
Delta u + 2 e^u = 0 and halves every mass below; mind the convention when
comparing against other sources).  The homogeneous form on the right is
smooth everywhere, including across poles of f, and is invariant under
f -> 1/f, which is what makes two-chart integration over the sphere
straightforward.

The total mass integral of e^u over the plane equals 8*pi*deg(f); the
quantities exposed here (total mass, ramification profile, Schwarzian
pole coefficients, the even-integer check on mass/4pi) let tests verify
that quantization independently of the exact enumeration modules.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import numpy.polynomial.polynomial as npp

from .errors import (
    ConstantMap,
    EvaluationAtUndefinedPoint,
    NotAVortex,
    RootClusterAmbiguous,
)
from .quadrature import adaptive_polar_disk, fixed_polar_panel
from .ratfunc import as_poly, schwarzian, trim

__all__ = [
    "RationalMap",
    "MassIntegral",
    "u_density",
    "total_mass",
    "total_mass_report",
    "RamificationProfile",
    "ramification",
    "boundary_log_slope",
    "schwarzian_pole_coefficient",
    "mass_quantization_check",
    "MassBranch",
    "DichotomyVerdict",
    "mass_dichotomy_classify",
]


def _wronskian(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    raw = npp.polysub(
        npp.polymul(npp.polyder(num), den), npp.polymul(num, npp.polyder(den))
    )
    # Leading terms of degree-matched maps cancel; sweep the float dust.
    return trim(raw, rel_tol=1e-12)


def _common_root_reduce(
    num: np.ndarray, den: np.ndarray, tol: float
) -> tuple[np.ndarray, np.ndarray]:
    if num.size < 2 or den.size < 2:
        return num, den
    roots_num = list(np.roots(num[::-1]))
    roots_den = list(np.roots(den[::-1]))
    matched_den = [False] * len(roots_den)
    keep_num: list[complex] = []
    any_match = False
    for rp in roots_num:
        hit = None
        for idx, rq in enumerate(roots_den):
            if not matched_den[idx] and abs(rp - rq) <= tol * max(1.0, abs(rp)):
                hit = idx
                break
        if hit is None:
            keep_num.append(rp)
        else:
            matched_den[hit] = True
            any_match = True
    if not any_match:
        return num, den
    keep_den = [r for r, used in zip(roots_den, matched_den) if not used]
    new_num = num[-1] * npp.polyfromroots(keep_num)
    new_den = den[-1] * npp.polyfromroots(keep_den)
    return as_poly(new_num), as_poly(new_den)


class RationalMap:
    """A reduced, non-constant rational map given by coefficient lists.

    Coefficients are ascending (constant term first).  The constructor
    trims trailing zeros, cancels numerically detected common roots, and
    rejects constant maps.  Attributes ``num``, ``den``, ``wronskian``
    hold the reduced data; all are plain complex ndarrays.
    """

    __slots__ = ("num", "den", "wronskian")

    def __init__(self, numerator, denominator=(1.0,), *, reduce_tol: float = 1e-7):
        num = trim(as_poly(numerator))
        den = trim(as_poly(denominator))
        if den.size == 1 and den[0] == 0:
            raise ValueError("denominator is identically zero")
        num, den = _common_root_reduce(num, den, reduce_tol)
        w = _wronskian(num, den)
        if w.size == 1 and w[0] == 0:
            raise ConstantMap("map has identically vanishing derivative")
        self.num = num
        self.den = den
        self.wronskian = w

    @property
    def degree(self) -> int:
        return max(self.num.size, self.den.size) - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return npp.polyval(z, self.num) / npp.polyval(z, self.den)

    def density(self, z) -> np.ndarray:
        """e^u elementwise; no guard against undefined points (see u_density)."""
        z = np.asarray(z, dtype=complex)
        p = npp.polyval(z, self.num)
        q = npp.polyval(z, self.den)
        w = npp.polyval(z, self.wronskian)
        denom = p.real**2 + p.imag**2 + q.real**2 + q.imag**2
        return 8.0 * (w.real**2 + w.imag**2) / denom**2

    def reciprocal(self) -> "RationalMap":
        """The map 1/f; the density is identical."""
        return RationalMap(self.den.copy(), self.num.copy())

    def inverted(self) -> "RationalMap":
        """The chart map g(w) = f(1/w), as a rational map in w."""
        d = self.degree
        new_num = np.zeros(d + 1, dtype=complex)
        new_den = np.zeros(d + 1, dtype=complex)
        new_num[d + 1 - self.num.size:] = self.num[::-1]
        new_den[d + 1 - self.den.size:] = self.den[::-1]
        return RationalMap(new_num, new_den)

    def __repr__(self) -> str:
        return f"RationalMap(num={self.num.tolist()}, den={self.den.tolist()})"


def u_density(f: RationalMap, z: complex) -> float:
    """The metric density e^{u(z)} = 8|f'|^2 / (1 + |f|^2)^2 at one point.

    Computed in homogeneous form, so it is finite at poles of f.  Raising
    EvaluationAtUndefinedPoint requires both homogeneous coordinates to
    vanish, which cannot happen for a reduced map.
    """
    zz = complex(z)
    p = complex(npp.polyval(zz, f.num))
    q = complex(npp.polyval(zz, f.den))
    denom = p.real**2 + p.imag**2 + q.real**2 + q.imag**2
    if denom == 0.0:
        raise EvaluationAtUndefinedPoint(f"both coordinates vanish at {zz}")
    w = complex(npp.polyval(zz, f.wronskian))
    return 8.0 * (w.real**2 + w.imag**2) / denom**2


@dataclass(frozen=True)
class MassIntegral:
    """Total mass integral with its accumulated error estimate."""

    value: float
    error_estimate: float
    cells: int
    evaluations: int


def total_mass_report(
    f: RationalMap,
    rel_tol: float = 1e-6,
    *,
    order: int = 10,
    max_cells: int = 20000,
) -> MassIntegral:
    """Integrate e^u over the plane, with an error estimate.

    The plane splits into |z| <= 1 and the image of |w| <= 1 under
    w -> 1/w; the second chart integrates the density of f(1/w), which is
    the same smooth integrand after the change of variables.  Tolerances
    are allocated from a fixed pilot estimate, so the reported
    error_estimate bounds the requested rel_tol * mass budget.
    """
    if not (0.0 < rel_tol <= 1e-3):
        raise ValueError("rel_tol must lie in (0, 1e-3]")
    charts = (f, f.inverted())
    pilot_terms = []
    for chart in charts:
        for r0, r1 in ((0.0, 0.5), (0.5, 1.0)):
            for k in range(4):
                pilot_terms.append(
                    fixed_polar_panel(
                        chart.density,
                        r0,
                        r1,
                        k * math.pi / 2.0,
                        (k + 1) * math.pi / 2.0,
                        order=12,
                    )
                )
    pilot = max(abs(math.fsum(pilot_terms)), 1e-12)
    budget = 0.5 * rel_tol * pilot
    results = [
        adaptive_polar_disk(chart.density, budget, order=order, max_cells=max_cells)
        for chart in charts
    ]
    return MassIntegral(
        value=math.fsum(r.value for r in results),
        error_estimate=math.fsum(r.error_estimate for r in results),
        cells=sum(r.cells for r in results),
        evaluations=sum(r.evaluations for r in results) + 8 * 144 * len(charts),
    )


def total_mass(
    f: RationalMap,
    rel_tol: float = 1e-6,
    *,
    order: int = 10,
    max_cells: int = 20000,
) -> float:
    return total_mass_report(f, rel_tol, order=order, max_cells=max_cells).value


@dataclass(frozen=True)
class RamificationProfile:
    """Branch points of the map with their ramification defects.

    Each finite entry is (location, alpha) with alpha = local multiplicity
    minus one; alpha_infinity is the defect of the point at infinity in
    the chart w = 1/z (at least 2 for any rational map, by the exact
    bookkeeping alpha_infinity = 2*degree - deg Wronskian).
    """

    finite_points: tuple[tuple[complex, int], ...]
    alpha_infinity: int
    degree: int

    @property
    def total_branching(self) -> int:
        return sum(alpha for _, alpha in self.finite_points) + self.alpha_infinity


def _polish_root(
    poly: np.ndarray, multiplicity: int, start: complex
) -> Optional[complex]:
    target = poly
    for _ in range(multiplicity - 1):
        target = npp.polyder(target)
    deriv = npp.polyder(target)
    x = complex(start)
    for _ in range(60):
        fx = complex(npp.polyval(x, target))
        dfx = complex(npp.polyval(x, deriv))
        if dfx == 0:
            return x if fx == 0 else None
        step = fx / dfx
        x -= step
        if abs(step) <= 1e-15 * max(1.0, abs(x)):
            return x
    return x


def ramification(f: RationalMap, tol: float = 1e-7) -> RamificationProfile:
    """Cluster the Wronskian roots into branch points with multiplicities.

    Roots within ``tol`` of a running cluster centroid are treated as one
    branch point of multiplicity the cluster size (numerical root finding
    scatters an exact m-fold root over a radius of roughly eps**(1/m), so
    pass a tolerance suited to the expected multiplicities).  Each cluster
    is refined by Newton iteration on the (m-1)-th derivative.  If two
    refined branch points land within 2*tol of each other the clustering
    was inconsistent and RootClusterAmbiguous is raised.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    w = f.wronskian
    d = f.degree
    if w.size == 1:
        return RamificationProfile((), 2 * d, d)
    roots = sorted(np.roots(w[::-1]), key=lambda r: (r.real, r.imag))
    clusters: list[list[complex]] = []
    centers: list[complex] = []
    for r in roots:
        for idx, center in enumerate(centers):
            if abs(r - center) <= tol:
                clusters[idx].append(r)
                centers[idx] = sum(clusters[idx]) / len(clusters[idx])
                break
        else:
            clusters.append([complex(r)])
            centers.append(complex(r))
    refined: list[tuple[complex, int]] = []
    for members, center in zip(clusters, centers):
        m = len(members)
        point = _polish_root(w, m, center)
        if point is None:
            raise RootClusterAmbiguous(
                f"refinement failed for a size-{m} cluster near {center}"
            )
        refined.append((point, m))
    for i in range(len(refined)):
        for j in range(i + 1, len(refined)):
            if abs(refined[i][0] - refined[j][0]) < 2 * tol:
                raise RootClusterAmbiguous(
                    f"branch points {refined[i][0]} and {refined[j][0]} are "
                    f"closer than twice the clustering tolerance {tol:g}"
                )
    refined.sort(key=lambda pm: (pm[0].real, pm[0].imag))
    alpha_inf = 2 * d - (w.size - 1)
    return RamificationProfile(tuple(refined), alpha_inf, d)


def boundary_log_slope(
    f: RationalMap, radius: float = 1e3, ratio: float = 2.0, samples: int = 64
) -> float:
    """Measured d(mean_theta u)/d(log r) at large radius.

    For a map with defect alpha_infinity at infinity this approaches
    -2 * alpha_infinity as the radius grows.
    """
    if radius <= 0 or ratio <= 1:
        raise ValueError("radius must be positive and ratio must exceed 1")

    def mean_log(r: float) -> float:
        theta = 2.0 * np.pi * (np.arange(samples) + 0.5) / samples
        return float(np.mean(np.log(f.density(r * np.exp(1j * theta)))))

    return (mean_log(radius * ratio) - mean_log(radius)) / math.log(ratio)


def schwarzian_pole_coefficient(
    f: RationalMap,
    p: complex,
    *,
    samples: int = 64,
    radius: Optional[float] = None,
) -> complex:
    """Coefficient of (z - p)^-2 in the Schwarzian derivative of f at p.

    For a branch point of defect alpha the exact value is
    -alpha*(alpha + 2)/2.  The coefficient is extracted as the limit of
    circle averages of (z - p)^2 {f; z} along shrinking circles (the
    averages kill the simple-pole and analytic terms), with one Richardson
    step to cancel the leading quadratic remainder.
    """
    pt = complex(p)
    w = f.wronskian
    scale = float(np.sum(np.abs(w))) * max(1.0, abs(pt)) ** (w.size - 1)
    if w.size == 1 or abs(complex(npp.polyval(pt, w))) > 1e-8 * scale:
        raise NotAVortex(f"{pt} is not a zero of the Wronskian of the map")

    if radius is None:
        singular: list[complex] = list(np.roots(w[::-1]))
        if f.den.size > 1:
            singular.extend(np.roots(f.den[::-1]))
        distances = [abs(s - pt) for s in singular if abs(s - pt) > 1e-6]
        radius = min(0.1, 0.4 * min(distances)) if distances else 0.1
        radius = max(radius, 1e-4)

    S = schwarzian(f.num, f.den)

    def circle_average(r: float) -> complex:
        ang = np.exp(2j * np.pi * (np.arange(samples) + 0.5) / samples)
        z = pt + r * ang
        return complex(np.mean((z - pt) ** 2 * S(z)))

    coarse = circle_average(radius)
    fine = circle_average(radius / 2.0)
    return (4.0 * fine - coarse) / 3.0


def mass_quantization_check(
    f: RationalMap, rel_tol: float = 1e-6
) -> tuple[float, bool]:
    """Return (mass / 4pi, whether it is an even integer within tolerance)."""
    mass = total_mass(f, rel_tol)
    m = mass / (4.0 * math.pi)
    is_even = abs(m - 2.0 * round(m / 2.0)) <= 10.0 * rel_tol * m
    return m, is_even


class MassBranch(enum.Enum):
    NON_INTEGER = "NonIntegerBranch"
    INTEGER = "IntegerBranch"
    NEITHER = "Neither"


@dataclass(frozen=True)
class DichotomyVerdict:
    """Which quantization branch a measured mass value fits.

    ``case`` is the reported branch (IntegerBranch wins when both fit,
    which happens exactly when alpha0 is itself an integer); ``k`` is the
    witness for that branch.  The individual witnesses are kept for both
    branches, None when that branch does not fit.
    """

    case: MassBranch
    k: Optional[int]
    noninteger_k: Optional[int]
    integer_k: Optional[int]


def mass_dichotomy_classify(
    alpha0: float,
    integer_alphas: Sequence[int],
    m: float,
    tol: float = 1e-9,
) -> DichotomyVerdict:
    """Classify a local mass m against the two admissible progressions.

    A blowup with one strength alpha0 > -1 at the origin and any number of
    positive-integer strengths elsewhere forces either
    m = 2*(alpha0 + 1) + 2*k for some integer k, or m = 2*k1 for some
    positive integer k1.
    """
    if not alpha0 > -1:
        raise ValueError("alpha0 must exceed -1")
    for a in integer_alphas:
        if not (isinstance(a, int) and a >= 1):
            raise ValueError(f"integer strengths must be positive integers, got {a!r}")
    if not m > 0:
        raise ValueError("m must be positive")
    if not tol > 0:
        raise ValueError("tol must be positive")

    shift = 2.0 * (alpha0 + 1.0)
    k_non = round((m - shift) / 2.0)
    fits_non = abs(m - shift - 2.0 * k_non) <= tol
    k_int = round(m / 2.0)
    fits_int = k_int >= 1 and abs(m - 2.0 * k_int) <= tol

    if fits_int:
        return DichotomyVerdict(
            case=MassBranch.INTEGER,
            k=k_int,
            noninteger_k=k_non if fits_non else None,
            integer_k=k_int,
        )
    if fits_non:
        return DichotomyVerdict(
            case=MassBranch.NON_INTEGER,
            k=k_non,
            noninteger_k=k_non,
            integer_k=None,
        )
    return DichotomyVerdict(
        case=MassBranch.NEITHER, k=None, noninteger_k=None, integer_k=None
    )
