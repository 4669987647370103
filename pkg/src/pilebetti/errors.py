"""Exception and warning classes.

Validation errors map to CLI exit code 1, budget errors to exit code 2.
"""


class PileBettiError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(PileBettiError, ValueError):
    pass


class BudgetError(PileBettiError):
    pass


class NonPositiveWeight(ValidationError):
    pass


class GcdNotOne(ValidationError):
    pass


class NegativeCoordinate(ValidationError):
    pass


class DuplicatePoint(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class InhomogeneousSet(ValidationError):
    pass


class NotSpanning(ValidationError):
    pass


class ConeConditionFailed(ValidationError):
    pass


class HypothesisNotMet(ValidationError):
    pass


class VoidComplex(ValidationError):
    pass


class IncompleteTable(ValidationError):
    pass


class TooManyVertices(BudgetError):
    pass


class BoxTooLarge(BudgetError):
    pass


class NotInLattice(UserWarning):
    """A Betti number was requested outside the grading group; reported as 0."""


class ConditionsUnverified(UserWarning):
    """The dual formula was applied to a generator set not known to satisfy its hypotheses."""
