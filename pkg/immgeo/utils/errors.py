"""
Exception hierarchy shared by the algebra, geometry and service layers
"""
from typing import List, Optional


class ImmGeoError(ValueError):
    """Base class for every error raised by the toolkit"""


class NonUnitError(ImmGeoError):
    """Division by (or inversion of) a non-unit; carries the gcd witness"""

    def __init__(self, message: str, witness: Optional[str] = None):
        super().__init__(message if witness is None else f"{message} (gcd witness: {witness})")
        self.witness = witness


class DegenerateFormula(ImmGeoError):
    """A closed form does not apply to the requested parameters"""


class GuardExceeded(ImmGeoError):
    """A desk-scale size guard would be exceeded"""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class VerificationFailure(ImmGeoError):
    """Two independent computations that must agree did not"""


class InputError(ImmGeoError):
    """Malformed user input; diagnostics name the offending field or line"""

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        self.diagnostics = list(diagnostics or [])
        if self.diagnostics:
            message = f"{message}: " + "; ".join(self.diagnostics)
        super().__init__(message)


def check_guard(what: str, size: int, limit: int) -> None:
    """
    Raise GuardExceeded when size is beyond limit

    Args:
        what: Human readable name of the guarded quantity
        size: Actual size
        limit: Maximum allowed size
    """
    if size > limit:
        raise GuardExceeded(what, size, limit)
