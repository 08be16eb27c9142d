"""Computational checks for the spectral geometry of the quaternion spheres Sp(2n)/Sp(2n-2)."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConventionError,
    DomainError,
    InsufficientSamplesError,
    NonPolynomialError,
    SymmetryAssumptionViolated,
    UnsupportedRankError,
)
from .kernels import BACKEND  # noqa: E402
from .spectrum import level_multiplicity, spectral_dimension, zeta_partial_sum  # noqa: E402
from .supnorm import sup_norm, theta_maximizer  # noqa: E402
from .weights import GammaIndex, HighestWeight, weyl_dimension  # noqa: E402

__all__ = [
    "__version__",
    "BACKEND",
    "ConventionError",
    "DomainError",
    "GammaIndex",
    "HighestWeight",
    "InsufficientSamplesError",
    "NonPolynomialError",
    "SymmetryAssumptionViolated",
    "UnsupportedRankError",
    "level_multiplicity",
    "spectral_dimension",
    "sup_norm",
    "theta_maximizer",
    "weyl_dimension",
    "zeta_partial_sum",
]
