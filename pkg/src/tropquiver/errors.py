"""Exception taxonomy shared by all modules."""


class TropquiverError(Exception):
    """Base class for all library errors."""


class ShapeError(TropquiverError):
    """Dimension or length mismatch between operands."""


class UsageError(TropquiverError):
    """Precondition violated by the caller (bad arguments, bad schema)."""


class DegeneratePointError(TropquiverError):
    """An all-infinite vector where a projective point was required."""


class CapacityError(TropquiverError):
    """Input exceeds the desk-scale size caps; fail loudly, never degrade."""


class NotAMatroidError(TropquiverError):
    """A basis-value table with empty finite support."""


class NotARealizationError(TropquiverError):
    """A matrix that is not full row rank where a realization was required."""
