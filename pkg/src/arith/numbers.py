"""
Loja Base Fields
================

Exact scalars used at the bottom of every extension tower:

    - Rational: fractions.Fraction (always reduced, positive denominator)
    - GaussianRational: re + im*i with rational parts

Rational inputs are represented as GaussianRational with im == 0, so a single
coefficient type serves both base fields (Q and Q(i)).
"""

from fractions import Fraction
from typing import Union

Rational = Fraction

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """
    Element re + im*i of Q(i).

    Immutable; arithmetic returns new instances.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} to GaussianRational")

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_zero(self) -> bool:
        return not self

    def is_real(self) -> bool:
        return not self.im

    @property
    def norm(self) -> Fraction:
        """re^2 + im^2, zero iff the element is zero."""
        return self.re * self.re + self.im * self.im

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: Scalar) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            if not self.im and not other.im:
                return GaussianRational(self.re * other.re)
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        if not self.im:
            return GaussianRational(1 / self.re)
        n = self.norm
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # ------------------------------------------------------------------
    # Comparison / conversion
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        return format_gaussian(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


def format_fraction(value: Fraction) -> str:
    """'7/2', '-3', '0'."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_gaussian(value: GaussianRational) -> str:
    """Canonical string: '3/2', '2+3*i', '-i', '(1/2)*i'."""
    if not value.im:
        return format_fraction(value.re)

    if value.im == 1:
        imag = "i"
    elif value.im == -1:
        imag = "-i"
    elif value.im.denominator == 1:
        imag = f"{value.im.numerator}*i"
    else:
        sign = "-" if value.im < 0 else ""
        imag = f"{sign}({format_fraction(abs(value.im))})*i"

    if not value.re:
        return imag
    if imag.startswith("-"):
        return f"{format_fraction(value.re)}{imag}"
    return f"{format_fraction(value.re)}+{imag}"
