"""
Scalar rings for exact computation

Two rings are supported: the rationals (plain ``fractions.Fraction`` values)
and the quotient ring Q[t]/(t^n + q - 1) that contains the root omega used by
the distinguished point of the hypersurface. The modulus is usually reducible
over Q, so the quotient ring has zero divisors; invertibility is decided with
an extended gcd against the modulus and never by factoring.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple, Union

from sympy import Poly, QQ, Symbol

from immgeo.constants import QUOTIENT_VARIABLE
from immgeo.utils.errors import NonUnitError

Rational = Fraction

_T = Symbol(QUOTIENT_VARIABLE)


def to_rational(value) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string into a Fraction

    Raises:
        TypeError: If the value has no exact rational reading
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot read {value!r} as an exact rational")


@dataclass(frozen=True)
class RationalRing:
    """The field Q; elements are Fractions"""

    name: str = "QQ"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, QuotientScalar):
            raise TypeError("quotient-ring scalar used where a rational is expected")
        return to_rational(value)

    def __str__(self) -> str:
        return self.name


RATIONALS = RationalRing()


@dataclass(frozen=True)
class QuotientRing:
    """The ring Q[t]/(t^n + (q - 1))"""

    n: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"quotient ring needs n >= 1, got {self.n}")
        if self.q < 2:
            raise ValueError(f"quotient ring needs q >= 2, got {self.q}")

    @property
    def reduction(self) -> Fraction:
        """Value of t^n in the ring"""
        return Fraction(-(self.q - 1))

    def zero(self) -> "QuotientScalar":
        return QuotientScalar((Fraction(0),) * self.n, self)

    def one(self) -> "QuotientScalar":
        return self.constant(1)

    def constant(self, value) -> "QuotientScalar":
        coefficients = [Fraction(0)] * self.n
        coefficients[0] = to_rational(value)
        return QuotientScalar(tuple(coefficients), self)

    def generator(self) -> "QuotientScalar":
        """The class omega of t, a root of t^n + q - 1"""
        if self.n == 1:
            return self.constant(self.reduction)
        coefficients = [Fraction(0)] * self.n
        coefficients[1] = Fraction(1)
        return QuotientScalar(tuple(coefficients), self)

    def coerce(self, value) -> "QuotientScalar":
        if isinstance(value, QuotientScalar):
            if value.ring != self:
                raise ValueError(f"scalar of {value.ring} used in {self}")
            return value
        return self.constant(value)

    @cached_property
    def modulus(self) -> Poly:
        return Poly(_T ** self.n + (self.q - 1), _T, domain=QQ)

    def __str__(self) -> str:
        return f"QQ[{QUOTIENT_VARIABLE}]/({QUOTIENT_VARIABLE}^{self.n}+{self.q - 1})"


@dataclass(frozen=True)
class QuotientScalar:
    """
    Element of Q[t]/(t^n + q - 1), stored as the n coefficients of its
    reduced representative (lowest degree first)
    """

    coefficients: Tuple[Fraction, ...]
    ring: QuotientRing = field(compare=True)

    def __post_init__(self):
        if len(self.coefficients) != self.ring.n:
            raise ValueError(
                f"expected {self.ring.n} coefficients, got {len(self.coefficients)}"
            )

    # -- coercion -------------------------------------------------------
    def _lift(self, other) -> Optional["QuotientScalar"]:
        if isinstance(other, QuotientScalar):
            if other.ring != self.ring:
                raise ValueError(f"cannot combine scalars of {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return QuotientScalar(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)), self.ring
        )

    __radd__ = __add__

    def __neg__(self):
        return QuotientScalar(tuple(-a for a in self.coefficients), self.ring)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return QuotientScalar(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)), self.ring
        )

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = self.ring.n
        product = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    product[i + j] += a * b
        # t^(n+k) = t^k * t^n; one pass suffices since 2n-2 - n < n
        reduction = self.ring.reduction
        for k in range(2 * n - 2, n - 1, -1):
            if product[k]:
                product[k - n] += product[k] * reduction
        return QuotientScalar(tuple(product[:n]), self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.ring.one()
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "QuotientScalar":
        """
        Multiplicative inverse

        Raises:
            NonUnitError: If the scalar shares a factor with the modulus
        """
        unit, inverse, witness = _extended_gcd_inverse(self)
        if not unit:
            raise NonUnitError(f"{self} is not a unit of {self.ring}", witness=witness)
        return inverse

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuotientScalar):
            return self.ring == other.ring and self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coefficients == self.ring.constant(other).coefficients
        return NotImplemented

    def __hash__(self):
        if all(not c for c in self.coefficients[1:]):
            return hash(self.coefficients[0])
        return hash((self.coefficients, self.ring))

    def __bool__(self):
        return any(self.coefficients)

    def is_constant(self) -> bool:
        return not any(self.coefficients[1:])

    def to_poly(self) -> Poly:
        return Poly(
            [QQ(c.numerator, c.denominator) for c in reversed(self.coefficients)], _T, domain=QQ
        )

    @classmethod
    def from_poly(cls, poly: Poly, ring: QuotientRing) -> "QuotientScalar":
        remainder = poly.rem(ring.modulus)
        coefficients = [Fraction(int(c.p), int(c.q)) for c in reversed(remainder.all_coeffs())]
        coefficients += [Fraction(0)] * (ring.n - len(coefficients))
        return cls(tuple(coefficients[:ring.n]), ring)

    def __str__(self):
        terms = []
        for power, c in enumerate(self.coefficients):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = QUOTIENT_VARIABLE if power == 1 else f"{QUOTIENT_VARIABLE}^{power}"
                terms.append(monomial if c == 1 else f"{c}*{monomial}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"QuotientScalar({self}, n={self.ring.n}, q={self.ring.q})"


def _extended_gcd_inverse(s: QuotientScalar):
    if not s:
        return False, None, str(s.ring.modulus.as_expr())
    cofactor, _, gcd = s.to_poly().gcdex(s.ring.modulus)
    if gcd.degree() > 0:
        return False, None, str(gcd.as_expr())
    # gcdex returns a monic gcd, so the cofactor is the inverse
    return True, QuotientScalar.from_poly(cofactor, s.ring), None


def is_unit(s: QuotientScalar) -> Tuple[bool, Optional[QuotientScalar]]:
    """
    Decide invertibility in Q[t]/(t^n + q - 1)

    Args:
        s: Scalar to test

    Returns:
        (True, inverse) when gcd(rep(s), modulus) = 1, otherwise (False, None)
    """
    unit, inverse, _ = _extended_gcd_inverse(s)
    return unit, inverse


def gcd_witness(s: QuotientScalar) -> str:
    """The gcd of rep(s) with the modulus, as text"""
    unit, _, witness = _extended_gcd_inverse(s)
    return "1" if unit else witness


def a_coefficient(n: int, q: int) -> Fraction:
    """
    a_n = ((q - 1)^(n - 1) + (-1)^n) / q

    Always an integer since q - 1 = -1 (mod q).
    """
    return Fraction((q - 1) ** (n - 1) + (-1) ** n, q)


Scalar = Union[Fraction, QuotientScalar]
ScalarRing = Union[RationalRing, QuotientRing]


def common_ring(values: Sequence) -> ScalarRing:
    """
    The single ring shared by all values (ints and Fractions embed anywhere)

    Raises:
        ValueError: If two different quotient rings appear
    """
    ring = RATIONALS
    for value in values:
        if isinstance(value, QuotientScalar):
            if ring is RATIONALS or ring == RATIONALS:
                ring = value.ring
            elif ring != value.ring:
                raise ValueError(f"entries from {ring} and {value.ring} mixed")
    return ring
