"""Exception hierarchy and warning categories.

Everything numeric that can go wrong maps to a subclass of
:class:`HurzetaError`, so callers (and the CLI) can distinguish
"you asked for something outside the domain" from "the computation
itself could not be completed".
"""

__all__ = [
    "HurzetaError",
    "DomainError",
    "UnsupportedParameterError",
    "RangeOverflowError",
    "CapacityError",
    "EvaluationError",
    "DivergenceError",
    "IllConditionedError",
    "ConditioningWarning",
    "InstabilityWarning",
]


class HurzetaError(Exception):
    """Base class for all library errors."""


class DomainError(HurzetaError, ValueError):
    """Parameter lies outside the mathematical domain (pole, divergent series)."""


class UnsupportedParameterError(HurzetaError, ValueError):
    """Parameter is mathematically fine but this code path cannot handle it.

    Typical case: the closed-form evaluator needs ``b`` away from the
    integers, while the value itself is perfectly finite there.
    """


class RangeOverflowError(HurzetaError, OverflowError):
    """An intermediate quantity would leave double-precision range."""


class CapacityError(HurzetaError):
    """A precomputed table or term budget is too small for the request."""


class EvaluationError(HurzetaError):
    """An integrand returned a non-finite value.

    Attributes
    ----------
    node : float
        The abscissa at which the bad value was produced.
    """

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node


class DivergenceError(HurzetaError):
    """An endpoint precondition for a singular-weight integral fails.

    The cotangent-weighted integrals only exist when the smooth factor
    vanishes at both endpoints; a violation means the integral diverges
    (or the integrand was transcribed wrongly).
    """


class IllConditionedError(HurzetaError):
    """Inputs sit too close to a singular locus for a trustworthy answer.

    Attributes
    ----------
    locus : str
        Human-readable description of the offending locus.
    """

    def __init__(self, message, locus=None):
        super().__init__(message)
        self.locus = locus


class ConditioningWarning(UserWarning):
    """Result is returned but nearby singularities degrade its accuracy."""


class InstabilityWarning(UserWarning):
    """A cross-check (e.g. two-radius coefficient recovery) disagrees."""
