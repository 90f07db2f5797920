"""
Lossless text forms of exact scalars
"""
from fractions import Fraction
from typing import Any, Dict, Union

from immgeo.algebra.rings import QuotientScalar
from immgeo.models import format_rational


def serialize_scalar(value) -> Union[str, Dict[str, Any]]:
    """
    "p/q" for rationals; for elements of Q[t]/(t^n + q - 1) the coefficient
    array (constant term first) with the modulus parameters attached
    """
    if isinstance(value, QuotientScalar):
        return {
            "coefficients": [format_rational(c) for c in value.coefficients],
            "modulus": {"n": value.ring.n, "q": value.ring.q},
        }
    return format_rational(Fraction(value))
