"""
Common validation utilities
"""
from typing import Sequence

from immgeo.utils.errors import InputError


def validate_positive_integer(value: int, field_name: str) -> None:
    """
    Validate that value is a positive integer

    Args:
        value: Value to validate
        field_name: Name of the field for error message

    Raises:
        InputError: If value is not a positive integer
    """
    if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
        raise InputError(f"{field_name} must be a positive integer, got {value!r}")


def validate_natural(value: int, field_name: str) -> None:
    """Validate that value is a non-negative integer"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"{field_name} must be a non-negative integer, got {value!r}")


def validate_range(value: int, low: int, high: int, field_name: str) -> None:
    """
    Validate low <= value <= high

    Raises:
        InputError: If value is out of range
    """
    if not low <= value <= high:
        raise InputError(f"{field_name} must lie in [{low}, {high}], got {value}")


def validate_dimensions(n: int, q: int, min_n: int = 1, min_q: int = 1) -> None:
    """Validate the (n, q) pair shared by every computation"""
    validate_positive_integer(n, "n")
    validate_positive_integer(q, "q")
    if n < min_n:
        raise InputError(f"n must be at least {min_n}, got {n}")
    if q < min_q:
        raise InputError(f"q must be at least {min_q}, got {q}")


def validate_multidegree(multidegree: Sequence[int], n: int) -> None:
    """
    Validate a multidegree: n naturals summing to n

    Raises:
        InputError: If the sequence has the wrong length, sign or total
    """
    if len(multidegree) != n:
        raise InputError(f"multidegree must have {n} entries, got {len(multidegree)}")
    for index, part in enumerate(multidegree):
        validate_natural(part, f"multidegree[{index}]")
    if sum(multidegree) != n:
        raise InputError(f"multidegree must sum to {n}, got {sum(multidegree)}")
