"""Domain error types shared across the package.

Every error that a caller can provoke with admissible-looking but invalid
input derives from :class:`TodamassError`, so the CLI can map any of them
to a diagnostic plus a nonzero exit status.  Genuine programming errors
(wrong argument types, violated preconditions) raise the usual builtins.
"""


class TodamassError(Exception):
    """Base class for all domain errors raised by this package."""


class NotOfForm(TodamassError):
    """Expression is not of the even-integer form 2*(n1*mu1 + n2*mu2 + n3)."""


class OrbitOverflow(TodamassError):
    """Reflection orbit exceeded the state cap; the closure did not terminate."""


class SingularFound(TodamassError):
    """A coefficient matrix derived from an enumerated mass pair is singular."""


class BasisMismatch(TodamassError):
    """Rational-coordinate vectors were declared over incompatible bases."""


class NonPositiveMu(TodamassError):
    """A vortex weight mu = 1 + alpha must be strictly positive."""


class TooManyVortices(TodamassError):
    """Configuration exceeds the combinatorial bound on vortex count."""


class ConstantMap(TodamassError):
    """The rational map is constant, so no developing-map quantities exist."""


class EvaluationAtUndefinedPoint(TodamassError):
    """Both homogeneous coordinates vanished at the evaluation point."""


class QuadratureNonConvergence(TodamassError):
    """Adaptive quadrature could not reach the requested tolerance in budget."""


class RootClusterAmbiguous(TodamassError):
    """Root clustering at the given tolerance is inconsistent with multiplicities."""


class NotAVortex(TodamassError):
    """The given point is not a zero of the Wronskian, so no vortex sits there."""
