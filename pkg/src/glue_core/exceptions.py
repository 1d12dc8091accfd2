"""
Exception types for labeling schemes, symmetry groups and classification.
"""


class GluingError(Exception):
    """Base exception for all polygon gluing errors."""
    pass


class SchemeError(GluingError):
    """Invalid labeling scheme value."""
    pass


class SchemeParseError(SchemeError):
    """Scheme text does not follow the token grammar."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class GlueIndexError(SchemeError):
    """Gluing positions out of range, equal, or already glued."""
    pass


class SymmetryError(GluingError):
    """Group element or group does not fit the polygon it acts on."""
    pass


class ClassificationError(GluingError):
    """Invariant triple inconsistent with the genus formulas."""
    pass


class EnumerationError(GluingError):
    """Unsupported enumeration request."""
    pass


class InvariantViolation(GluingError):
    """Internal consistency check failed."""
    pass
