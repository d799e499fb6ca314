"""Exception taxonomy shared across the package.

Every expected failure raises a subclass of :class:`QuarticError` so that
callers (and the command-line layer) can report a stable error name without
parsing messages.
"""


class QuarticError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(QuarticError):
    """An input lies outside the mathematical domain of the operation."""


class NonPositiveLinearCoefficient(QuarticError):
    """The reduced linear coefficient is not positive (deep inverted regime)."""


class UnsupportedOrder(QuarticError):
    """No closed form at this order; use the expansion engine instead."""


class OrderCapExceeded(QuarticError):
    """Requested expansion order is outside the configured cap."""


class ResidualSecularity(QuarticError):
    """A resonant cos(T) forcing term survived where none is allowed."""


class UnboundedMotion(QuarticError):
    """The integrated trajectory escaped the bounded region."""


class InsufficientCycles(QuarticError):
    """Too few complete oscillation cycles to estimate a period."""


class ArgumentOutOfRange(QuarticError):
    """Argument outside the inverse-hyperbolic domain of the closed form."""


class NegativeTruncatedB(QuarticError):
    """The truncated nonlinearity ratio is not positive at these parameters."""


class AmplitudeBeyondTurningPoint(QuarticError):
    """Requested amplitude exceeds the turning point for this energy."""


class PerturbationRangeWarning(UserWarning):
    """The expansion parameter is outside the trustworthy perturbative range."""
