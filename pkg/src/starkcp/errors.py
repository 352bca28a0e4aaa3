"""Shared exception types."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class CapabilityError(ValueError):
    """Requested inputs outside the implemented analytic range."""


class DegeneracyError(ValueError):
    """Vanishing energy denominator between coupled levels."""


class NumericsError(RuntimeError):
    """A quadrature or extrapolation failed to reach its tolerance."""
