"""Quantized local blowup masses of rank-2 Toda systems.

Exact enumeration of the finite mass sets Gamma(mu1, mu2) for the three
rank-2 Cartan matrices, Pohozaev-identity certification, non-singularity
certificates, forbidden-set construction with a compactness criterion,
and an independent numerical oracle for the total-mass quantization of
Liouville developing maps.
"""

from .errors import (
    BasisMismatch,
    ConstantMap,
    EvaluationAtUndefinedPoint,
    NonPositiveMu,
    NotAVortex,
    NotOfForm,
    OrbitOverflow,
    QuadratureNonConvergence,
    RootClusterAmbiguous,
    SingularFound,
    TodamassError,
    TooManyVortices,
)
from .forbidden import (
    CompactnessVerdict,
    ForbiddenSet,
    ForbiddenValue,
    NearestForbidden,
    Provenance,
    Regime,
    Vortex,
    VortexConfig,
    VortexStrength,
    check_compactness,
    gamma_i,
    local_mass_candidates,
    provenance_value,
)
from .gamma import (
    GammaSet,
    decompositions,
    enumerate_gamma,
    is_special,
    special_pair,
)
from .liouville import (
    DichotomyVerdict,
    MassBranch,
    MassIntegral,
    RamificationProfile,
    RationalMap,
    boundary_log_slope,
    mass_dichotomy_classify,
    mass_quantization_check,
    ramification,
    schwarzian_pole_coefficient,
    total_mass,
    total_mass_report,
    u_density,
)
from .massalgebra import (
    CartanMatrix,
    MassExpr,
    Rational,
    Theorem13Certificate,
    as_rational,
    cartan,
    mass_add,
    mass_eval,
    theorem13_certificate,
)
from .pohozaev import MassPair, QuadPoly, pi_residual, reflect
from .quadrature import QuadratureResult, adaptive_polar_disk
from .rigidity import (
    MKInput,
    MKMatrix,
    QVector,
    mk_matrix,
    mk_nonsingular_certificate,
    q_condition,
    rational_rank,
)

__version__ = "0.1.0"

__all__ = [
    "TodamassError",
    "NotOfForm",
    "OrbitOverflow",
    "SingularFound",
    "BasisMismatch",
    "NonPositiveMu",
    "TooManyVortices",
    "ConstantMap",
    "EvaluationAtUndefinedPoint",
    "QuadratureNonConvergence",
    "RootClusterAmbiguous",
    "NotAVortex",
    "Rational",
    "as_rational",
    "MassExpr",
    "Theorem13Certificate",
    "CartanMatrix",
    "cartan",
    "mass_add",
    "mass_eval",
    "theorem13_certificate",
    "MassPair",
    "QuadPoly",
    "pi_residual",
    "reflect",
    "GammaSet",
    "enumerate_gamma",
    "is_special",
    "special_pair",
    "decompositions",
    "MKInput",
    "MKMatrix",
    "mk_matrix",
    "mk_nonsingular_certificate",
    "QVector",
    "q_condition",
    "rational_rank",
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
    "QuadratureResult",
    "adaptive_polar_disk",
    "__version__",
]
