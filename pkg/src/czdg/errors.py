"""Exception hierarchy shared by every module of the package."""


class CzdgError(Exception):
    """Base class for all package errors."""


class InvalidOrderError(CzdgError, ValueError):
    pass


class InvalidPrimeError(CzdgError, ValueError):
    pass


class SizeLimitError(CzdgError):
    """A construction or search would exceed a configured size cap."""


class NotFiniteError(CzdgError):
    """A quotient presentation failed the finiteness witness at the chosen degree bound."""


class InvalidPresentationError(CzdgError):
    pass


class RingParseError(CzdgError, ValueError):
    """Syntax or semantic error in a ring expression.

    ``position`` is the 0-based character offset at which the problem was
    detected, or ``None`` for purely semantic errors.
    """

    def __init__(self, message: str, position: int | None = None):
        self.message = message
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class ResourceLimitError(CzdgError):
    """The subset search exceeded its work limit.

    ``last_completed_k`` is the largest subset size that was exhaustively
    checked before the limit was hit (0 if none).
    """

    def __init__(self, message: str, last_completed_k: int):
        self.last_completed_k = last_completed_k
        super().__init__(f"{message} (last completed k = {last_completed_k})")


class WellDefinednessError(CzdgError, AssertionError):
    """Internal consistency failure while compressing a zero-divisor graph."""
