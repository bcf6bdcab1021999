"""Shared exception types."""


class ConfigError(ValueError):
    """Raised for malformed or out-of-range scenario configuration."""


class NumericGuardError(RuntimeError):
    """Raised when a numeric safety guard trips.

    Examples: a target boundary curve self-intersects, a tested point sits
    on the curve within tolerance, a quadrature fails to converge, or a
    grid point is too close to a branch cut.
    """
