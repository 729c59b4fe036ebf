"""Exception hierarchy shared across the solver modules."""


class GaussolveError(Exception):
    """Base class for all package errors."""


class ConfigError(GaussolveError):
    """Invalid or inconsistent run configuration (CLI exit code 2)."""


class InstabilityError(GaussolveError):
    """Numerical instability in the time-domain solve (CLI exit code 3)."""


class QuadratureError(GaussolveError):
    """Frequency quadrature failed its self-convergence check."""


class PhysicalityError(GaussolveError):
    """A computed state violates the uncertainty relation or positivity."""
