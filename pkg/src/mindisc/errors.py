"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Input outside the domain of an operation (malformed or degenerate)."""


class SingularCurveError(DomainError):
    """The model has zero discriminant."""


class NonIntegralError(DomainError):
    """A coordinate change leaves the integral models."""
