"""Exception types raised across the package.

Every error carries a human-readable message; the position-aware ones also
keep the 0-based step index so CLI output can point at the offending letter.
"""


class GPathError(Exception):
    """Base class for all errors raised by this package."""


class UnknownSymbol(GPathError):
    """A step letter is not in the family's alphabet."""

    def __init__(self, symbol: str, position: int):
        self.symbol = symbol
        self.position = position
        super().__init__(f"unknown step symbol {symbol!r} at position {position}")


class GeometryViolation(GPathError):
    """A prefix dips below level 0, or the path does not end at level 0."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (position {position})")


class ConstraintViolation(GPathError):
    """A family constraint fails: forbidden pattern, surface or prefix rule."""


class FamilyMismatch(GPathError):
    """A path of one family was passed where another family is required."""


class DomainViolation(GPathError):
    """A map's precondition on its input path fails."""


class SizeLimitExceeded(GPathError):
    """An exhaustive enumeration was requested beyond the configured bound."""


class TruncationExceeded(GPathError):
    """A series coefficient beyond the truncation order was requested."""


class ZeroConstantTerm(GPathError):
    """Reciprocal of a series whose constant term is zero."""


class EmptyPath(GPathError):
    """An operation that needs at least one step got the empty path."""
