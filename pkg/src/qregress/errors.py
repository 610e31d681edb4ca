"""Exception types shared across the package."""


class QRegressError(ValueError):
    """Base class for every validation failure raised by this package."""


class DimensionError(QRegressError):
    """Operands have incompatible or non-square shapes."""


class ValidationError(QRegressError):
    """An input violates a declared invariant (Hermiticity, trace, positivity)."""


class TimeOrderError(QRegressError):
    """Times are not in the required nondecreasing order."""


class GridAlignmentError(QRegressError):
    """A query time does not sit on the collision-model time grid."""


class BudgetExceededError(QRegressError):
    """The joint-mode state vector would exceed the configured entry budget."""
