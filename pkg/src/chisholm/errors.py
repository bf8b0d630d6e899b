"""Shared error taxonomy.

Every failure mode that callers are expected to branch on gets its own
class; anything else surfaces as ValueError from the offending module.
"""


class ApproximationError(Exception):
    """Base class for all library-specific failures."""


class SingularSystem(ApproximationError):
    """Linear elimination found no acceptable pivot.

    For a fit this means the approximant does not exist at the requested
    order.
    """


class InsufficientTerms(ApproximationError):
    """The input series does not carry all coefficients the fit needs."""

    def __init__(self, missing, message=None):
        self.missing = list(missing)
        if message is None:
            message = (
                "equations may not give solutions for all solve variables; "
                "missing coefficients: %s" % (self.missing,)
            )
        super().__init__(message)


class NotNormalized(ApproximationError):
    """The constant coefficient is not 1 (or is zero / unknown).

    Callers fix this with scale_to_unit_constant or add_polynomial before
    fitting.
    """


class PoleHit(ApproximationError):
    """Evaluation point lies on (or numerically under) a denominator zero."""


class ParameterPole(ApproximationError):
    """A hypergeometric parameter sits on a gamma-function pole."""
