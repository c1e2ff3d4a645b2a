"""Forbidden total masses and the compactness criterion for vortex data.

For a configuration of vortices with strengths (alpha1_t, alpha2_t) the
component-i forbidden set collects the numbers

    4*pi * ( sum over a subset J of vortices of s_{i,t}  +  n ),  n >= 0,

where (s_{1,t}, s_{2,t}) ranges over the quantized local-mass set
Gamma(mu1_t, mu2_t) of vortex t, with mu_{j,t} = 1 + alpha_{j,t}.  A total
mass parameter rho_i staying away from this set rules out blowup, which
is the compactness criterion implemented by :func:`check_compactness`.

Arithmetic stays exact (Fractions) whenever every strength is rational;
otherwise declared numeric values are used in floating point.  Every
emitted value carries provenance: which vortices contributed, which
Gamma element was chosen at each, and the integer offset n.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import BasisMismatch, NonPositiveMu, TooManyVortices
from .gamma import enumerate_gamma
from .massalgebra import CartanMatrix, RationalLike, as_rational, cartan
from .rigidity import QVector, q_condition

__all__ = [
    "FOUR_PI",
    "DEDUP_TOL",
    "DEFAULT_MAX_VORTICES",
    "VortexStrength",
    "Vortex",
    "VortexConfig",
    "Provenance",
    "ForbiddenValue",
    "ForbiddenSet",
    "Regime",
    "NearestForbidden",
    "CompactnessVerdict",
    "local_mass_candidates",
    "gamma_i",
    "provenance_value",
    "check_compactness",
]

FOUR_PI = 4.0 * math.pi

# Emitted values closer than this (absolute) collapse to one entry.
DEDUP_TOL = 1e-9

DEFAULT_MAX_VORTICES = 16
DEFAULT_MAX_PROVENANCES = 8


@dataclass(frozen=True)
class VortexStrength:
    """One vortex strength alpha, exact when possible.

    Exactly one of ``exact`` (a rational) and ``qvector`` (coordinates in
    a declared rational basis, together with the declared numeric value)
    is set.  ``numeric`` is always populated and must exceed -1.
    """

    numeric: float
    exact: Optional[Fraction] = None
    qvector: Optional[QVector] = None

    def __post_init__(self) -> None:
        if self.exact is not None and self.qvector is not None:
            raise ValueError("strength cannot be both exact and basis-coordinates")
        if not self.numeric > -1.0:
            raise ValueError(f"vortex strength must exceed -1, got {self.numeric}")

    @classmethod
    def from_json(cls, obj: Union[str, int, float, dict]) -> "VortexStrength":
        if isinstance(obj, dict):
            qv = QVector(
                tuple(as_rational(c) for c in obj["coords"]),
                tuple(obj["basis"]) if obj.get("basis") is not None else None,
            )
            rational = qv.rational_part()
            if rational is not None:
                return cls(numeric=float(rational), exact=rational)
            if "numeric" not in obj:
                raise ValueError(
                    "irrational strength needs a declared 'numeric' value"
                )
            return cls(numeric=float(obj["numeric"]), qvector=qv)
        q = as_rational(obj)
        return cls(numeric=float(q), exact=q)


@dataclass(frozen=True)
class Vortex:
    alpha1: VortexStrength
    alpha2: VortexStrength

    def strength(self, component: int) -> VortexStrength:
        return self.alpha1 if component == 1 else self.alpha2


@dataclass(frozen=True)
class VortexConfig:
    """A Cartan label plus a finite list of vortices."""

    algebra: str
    vortices: tuple[Vortex, ...]

    @property
    def cartan(self) -> CartanMatrix:
        return cartan(self.algebra)

    @classmethod
    def from_dict(cls, data: dict) -> "VortexConfig":
        K = cartan(data["algebra"])
        vortices = tuple(
            Vortex(
                VortexStrength.from_json(entry["alpha1"]),
                VortexStrength.from_json(entry["alpha2"]),
            )
            for entry in data.get("vortices", [])
        )
        return cls(algebra=K.label, vortices=vortices)


@dataclass(frozen=True)
class Provenance:
    """How a forbidden value was produced.

    ``terms`` lists (vortex index, Gamma element index) for each vortex in
    the contributing subset J, and ``n`` is the nonnegative integer offset.
    """

    terms: tuple[tuple[int, int], ...]
    n: int


@dataclass(frozen=True)
class ForbiddenValue:
    value: float
    exact: Optional[Fraction]  # value / (4*pi) when exact arithmetic applied
    provenances: tuple[Provenance, ...]


@dataclass(frozen=True)
class ForbiddenSet:
    algebra: str
    component: int
    cutoff: float
    values: tuple[ForbiddenValue, ...]

    def floats(self) -> list[float]:
        return [v.value for v in self.values]


def local_mass_candidates(
    mu1: RationalLike, mu2: RationalLike, K: CartanMatrix
) -> list[tuple[Fraction, Fraction]]:
    """Gamma(mu1, mu2) evaluated exactly at one vortex's weights."""
    m1, m2 = as_rational(mu1), as_rational(mu2)
    if m1 <= 0 or m2 <= 0:
        raise NonPositiveMu(f"weights must be positive, got ({m1}, {m2})")
    return enumerate_gamma(K).evaluated(m1, m2)


def _component_candidates(
    config: VortexConfig, component: int
) -> tuple[bool, list[list[Fraction]], list[list[float]]]:
    """Per-vortex component-i values of Gamma at that vortex's weights.

    Returns (all_exact, exact_rows, float_rows); exact_rows is only
    meaningful when all_exact is true, float_rows is always usable.
    """
    gamma = enumerate_gamma(config.cartan)
    all_exact = all(
        v.alpha1.exact is not None and v.alpha2.exact is not None
        for v in config.vortices
    )
    exact_rows: list[list[Fraction]] = []
    float_rows: list[list[float]] = []
    for vortex in config.vortices:
        if all_exact:
            mu1 = 1 + vortex.alpha1.exact
            mu2 = 1 + vortex.alpha2.exact
            if mu1 <= 0 or mu2 <= 0:
                raise NonPositiveMu(f"weights must be positive, got ({mu1}, {mu2})")
            values = [
                (p.s1 if component == 1 else p.s2).eval(mu1, mu2)
                for p in gamma.pairs
            ]
            exact_rows.append(values)
            float_rows.append([float(v) for v in values])
        else:
            mu1f = 1.0 + vortex.alpha1.numeric
            mu2f = 1.0 + vortex.alpha2.numeric
            if not (mu1f > 0.0 and mu2f > 0.0):
                raise NonPositiveMu(
                    f"weights must be positive, got ({mu1f}, {mu2f})"
                )
            float_rows.append(
                [
                    (p.s1 if component == 1 else p.s2).eval_float(mu1f, mu2f)
                    for p in gamma.pairs
                ]
            )
    return all_exact, exact_rows, float_rows


def gamma_i(
    config: VortexConfig,
    component: int,
    cutoff: float,
    *,
    max_vortices: int = DEFAULT_MAX_VORTICES,
    max_provenances: int = DEFAULT_MAX_PROVENANCES,
) -> ForbiddenSet:
    """Enumerate the component-i forbidden set up to the cutoff.

    Values are sorted ascending and deduplicated within DEDUP_TOL; at most
    ``max_provenances`` provenance records are retained per value.
    """
    if component not in (1, 2):
        raise ValueError(f"component must be 1 or 2, got {component!r}")
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    n_vortices = len(config.vortices)
    if n_vortices > max_vortices:
        raise TooManyVortices(
            f"{n_vortices} vortices exceeds the bound {max_vortices}"
        )

    all_exact, exact_rows, float_rows = _component_candidates(config, component)

    # Candidate sums are nonnegative and only grow along a branch, so any
    # partial sum already past the cutoff can be pruned.
    prune_at = cutoff + DEDUP_TOL
    entries: list[tuple[float, Optional[Fraction], Provenance]] = []

    def emit(sum_exact: Optional[Fraction], sum_float: float,
             terms: tuple[tuple[int, int], ...]) -> None:
        n = 0
        while True:
            if sum_exact is not None:
                total = sum_exact + n
                value = FOUR_PI * float(total)
            else:
                total = None
                value = FOUR_PI * (sum_float + n)
            if value > cutoff:
                break
            entries.append((value, total, Provenance(terms, n)))
            n += 1

    def walk(t: int, sum_exact: Optional[Fraction], sum_float: float,
             terms: tuple[tuple[int, int], ...]) -> None:
        if t == n_vortices:
            emit(sum_exact, sum_float, terms)
            return
        walk(t + 1, sum_exact, sum_float, terms)  # vortex t not in J
        row_f = float_rows[t]
        for j, vf in enumerate(row_f):
            new_float = sum_float + vf
            if FOUR_PI * new_float > prune_at:
                continue
            new_exact = sum_exact + exact_rows[t][j] if all_exact else None
            walk(t + 1, new_exact, new_float, terms + ((t, j),))

    walk(0, Fraction(0) if all_exact else None, 0.0, ())

    entries.sort(key=lambda e: e[0])
    merged: list[ForbiddenValue] = []
    i = 0
    while i < len(entries):
        anchor_value, anchor_exact, _ = entries[i]
        j = i
        provs: list[Provenance] = []
        while j < len(entries) and entries[j][0] <= anchor_value + DEDUP_TOL:
            if len(provs) < max_provenances:
                provs.append(entries[j][2])
            j += 1
        merged.append(
            ForbiddenValue(
                value=anchor_value, exact=anchor_exact, provenances=tuple(provs)
            )
        )
        i = j
    return ForbiddenSet(
        algebra=config.algebra,
        component=component,
        cutoff=float(cutoff),
        values=tuple(merged),
    )


def provenance_value(
    config: VortexConfig, component: int, prov: Provenance
) -> float:
    """Recompute the forbidden value described by a provenance record."""
    gamma = enumerate_gamma(config.cartan)
    total = float(prov.n)
    for t, j in prov.terms:
        vortex = config.vortices[t]
        expr = gamma.pairs[j].s1 if component == 1 else gamma.pairs[j].s2
        total += expr.eval_float(
            1.0 + vortex.alpha1.numeric, 1.0 + vortex.alpha2.numeric
        )
    return FOUR_PI * total


class Regime(str, enum.Enum):
    """Which hypothesis, if any, makes the compactness criterion applicable."""

    INTEGER_ALPHAS = "IntegerAlphas"
    Q_CONDITION = "QCondition"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class NearestForbidden:
    value: float
    distance: float


@dataclass(frozen=True)
class CompactnessVerdict:
    compact_criterion_met: bool
    regime: Regime
    # one entry per component; None when the criterion is inapplicable
    nearest_forbidden: tuple[Optional[NearestForbidden], Optional[NearestForbidden]]
    rho: tuple[float, float]
    tol: float


def _all_integer_strengths(config: VortexConfig) -> bool:
    for vortex in config.vortices:
        for strength in (vortex.alpha1, vortex.alpha2):
            if strength.exact is None or strength.exact.denominator != 1:
                return False
            if strength.exact < 0:
                return False
    return True


def _all_q_condition(config: VortexConfig) -> bool:
    for vortex in config.vortices:
        a1, a2 = vortex.alpha1, vortex.alpha2
        if a1.qvector is None or a2.qvector is None:
            return False
        if not q_condition(a1.qvector, a2.qvector):
            return False
    return True


def check_compactness(
    config: VortexConfig,
    rho1: float,
    rho2: float,
    tol: float = 1e-6,
    *,
    max_vortices: int = DEFAULT_MAX_VORTICES,
) -> CompactnessVerdict:
    """Decide whether (rho1, rho2) stays clear of the forbidden sets.

    With every strength a nonnegative integer, the forbidden values are
    the positive multiples of 4*pi (zero excluded).  Otherwise, if every
    vortex satisfies the Q-condition, the finite sets from gamma_i apply,
    enumerated up to cutoff rho_i + 4*pi, which already contains the
    nearest forbidden value.  In any other regime the criterion is
    reported as inapplicable.  BasisMismatch propagates from q_condition.
    """
    if not (rho1 > 0 and rho2 > 0):
        raise ValueError("rho1 and rho2 must be positive")
    if not tol > 0:
        raise ValueError("tol must be positive")
    rhos = (float(rho1), float(rho2))

    if _all_integer_strengths(config):
        regime = Regime.INTEGER_ALPHAS
        nearest = []
        for rho in rhos:
            n = max(1, round(rho / FOUR_PI))
            value = FOUR_PI * n
            nearest.append(NearestForbidden(value=value, distance=abs(rho - value)))
    elif _all_q_condition(config):
        regime = Regime.Q_CONDITION
        nearest = []
        for component, rho in zip((1, 2), rhos):
            fs = gamma_i(
                config, component, rho + FOUR_PI, max_vortices=max_vortices
            )
            best = min(fs.values, key=lambda fv: abs(rho - fv.value))
            nearest.append(
                NearestForbidden(value=best.value, distance=abs(rho - best.value))
            )
    else:
        return CompactnessVerdict(
            compact_criterion_met=False,
            regime=Regime.INAPPLICABLE,
            nearest_forbidden=(None, None),
            rho=rhos,
            tol=float(tol),
        )

    met = all(entry.distance > tol for entry in nearest)
    return CompactnessVerdict(
        compact_criterion_met=met,
        regime=regime,
        nearest_forbidden=(nearest[0], nearest[1]),
        rho=rhos,
        tol=float(tol),
    )
