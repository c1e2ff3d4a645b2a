"""Enumeration of the quantized local-mass set Gamma(mu1, mu2).

Starting from the trivial pair (0, 0), closing under the two component
reflections yields a finite orbit: 6, 8, or 12 symbolic pairs for the
three admissible Cartan matrices.  Gamma(mu1, mu2) is that orbit with the
trivial seed removed, so it has 5, 7, or 11 elements.  Each element is a
pair of even nonnegative integer combinations of mu1 and mu2, satisfies
the Pohozaev identity symbolically, and one distinguished element per
algebra (the "special" pair) is the unique one that decomposes as a sum
of two other elements when mu1 = mu2 = 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import OrbitOverflow
from .massalgebra import CartanMatrix, MassExpr, RationalLike, as_rational
from .pohozaev import MassPair, reflect

__all__ = [
    "GammaSet",
    "ORBIT_STATE_CAP",
    "enumerate_gamma",
    "is_special",
    "special_pair",
    "decompositions",
]

# Safety valve for the reflection closure.  The true orbits have at most
# 12 states; hitting the cap means the Cartan data was inadmissible.
ORBIT_STATE_CAP = 64


def _pair(c1a: int, c2a: int, c1b: int, c2b: int) -> MassPair:
    return MassPair(MassExpr(c1a, c2a, 0), MassExpr(c1b, c2b, 0))


# The unique element of each Gamma set that is decomposable at mu = (1, 1).
SPECIAL_PAIRS = {
    "A2": _pair(2, 2, 2, 2),
    "B2": _pair(4, 2, 4, 4),
    "G2": _pair(8, 4, 12, 8),
}


@dataclass(frozen=True)
class GammaSet:
    """The enumerated mass set for one algebra, in discovery order."""

    algebra: str
    pairs: tuple[MassPair, ...]
    orbit_size: int  # includes the trivial seed (0, 0)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def evaluated(
        self, mu1: RationalLike, mu2: RationalLike
    ) -> list[tuple[Fraction, Fraction]]:
        """Numeric (s1, s2) values of every element at an exact point."""
        m1, m2 = as_rational(mu1), as_rational(mu2)
        return [(p.s1.eval(m1, m2), p.s2.eval(m1, m2)) for p in self.pairs]


def enumerate_gamma(K: CartanMatrix) -> GammaSet:
    """Breadth-first closure of {(0, 0)} under both reflections, seed removed.

    Discovery order is deterministic: states are expanded first-in
    first-out and the component-1 reflection of a state is visited before
    its component-2 reflection.
    """
    seed = MassPair(MassExpr.zero(), MassExpr.zero())
    seen = {seed}
    order: list[MassPair] = []
    queue = deque([seed])
    while queue:
        if len(seen) > ORBIT_STATE_CAP:
            raise OrbitOverflow(
                f"reflection orbit for {K.label!r} exceeded {ORBIT_STATE_CAP} states"
            )
        current = queue.popleft()
        for component in (1, 2):
            image = reflect(current, K, component)
            if image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    return GammaSet(algebra=K.label, pairs=tuple(order), orbit_size=len(seen))


def special_pair(K: CartanMatrix) -> MassPair:
    """The distinguished decomposable element of Gamma for this algebra."""
    return SPECIAL_PAIRS[K.label]


def is_special(p: MassPair, K: CartanMatrix) -> bool:
    return p == SPECIAL_PAIRS[K.label]


def decompositions(
    p: MassPair, K: CartanMatrix, mu1: RationalLike, mu2: RationalLike
) -> list[tuple[MassPair, MassPair]]:
    """All unordered pairs {a, b} from Gamma with a + b = p at (mu1, mu2).

    Comparison happens after exact evaluation at the given point, so
    elements whose symbolic forms differ but whose values coincide are
    still treated as distinct set elements.  Pairs with a == b are
    admitted; the two summands are not required to be distinct.
    """
    m1, m2 = as_rational(mu1), as_rational(mu2)
    if m1 <= 0 or m2 <= 0:
        raise ValueError("decompositions requires mu1 > 0 and mu2 > 0")
    gamma = enumerate_gamma(K)
    values = gamma.evaluated(m1, m2)
    target = (p.s1.eval(m1, m2), p.s2.eval(m1, m2))
    found: list[tuple[MassPair, MassPair]] = []
    for i, (a1, a2) in enumerate(values):
        for j in range(i, len(values)):
            b1, b2 = values[j]
            if a1 + b1 == target[0] and a2 + b2 == target[1]:
                found.append((gamma.pairs[i], gamma.pairs[j]))
    return found
