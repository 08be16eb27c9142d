"""Exception types raised across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedRankError(DomainError):
    pass


class InsufficientSamplesError(ValueError):
    pass


class NonPolynomialError(ArithmeticError):
    """Finite differences never vanished on the supplied samples."""


class SymmetryAssumptionViolated(RuntimeError):
    """The coarse full-sphere grid beat the reduced search."""


class ConventionError(RuntimeError):
    """No basis ordering / sign choice reproduces the anchored action table."""
