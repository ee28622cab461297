"""
Loja Univariate Polynomials
===========================

Dense univariate polynomials with AlgebraicNumber coefficients over one
ExtensionTower. Used for Newton-polygon characteristic polynomials, the
K[x] coefficients of bivariate polynomials and resultants.

Coefficients are stored low degree first and trimmed, so the leading
coefficient is nonzero unless the polynomial is zero.
"""

import math
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, Tuple, Union

from ..arith.numbers import GaussianRational
from ..arith.tower import AlgebraicNumber, ExtensionTower
from ..errors import PreconditionError

Coefficient = Union[int, Fraction, GaussianRational, AlgebraicNumber]


class UniPoly:
    """Immutable dense polynomial sum(coeffs[i] * x^i)."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: ExtensionTower, coeffs: Iterable[Coefficient] = ()):
        values = [tower.element(c) for c in coeffs]
        n = len(values)
        while n and values[n - 1].is_zero():
            n -= 1
        self.tower = tower
        self.coeffs: Tuple[AlgebraicNumber, ...] = tuple(values[:n])

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, tower: ExtensionTower) -> "UniPoly":
        return cls(tower)

    @classmethod
    def constant(cls, tower: ExtensionTower, value: Coefficient) -> "UniPoly":
        return cls(tower, [value])

    @classmethod
    def monomial(cls, tower: ExtensionTower, value: Coefficient, degree: int) -> "UniPoly":
        return cls(tower, [0] * degree + [value])

    @classmethod
    def x(cls, tower: ExtensionTower) -> "UniPoly":
        return cls(tower, [0, 1])

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def order(self) -> Union[int, float]:
        """Lowest exponent with nonzero coefficient; math.inf for zero."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> AlgebraicNumber:
        if not self.coeffs:
            return self.tower.zero()
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> AlgebraicNumber:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.tower.zero()

    def __len__(self) -> int:
        return len(self.coeffs)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _coerce(self, other: Any) -> Optional["UniPoly"]:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational, AlgebraicNumber)):
            return UniPoly(self._tower_for(other), [other])
        return None

    def _tower_for(self, other: Any) -> ExtensionTower:
        other_tower = other.tower if isinstance(other, (UniPoly, AlgebraicNumber)) else self.tower
        if self.tower.is_prefix_of(other_tower):
            return other_tower
        return self.tower

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        tower = self._tower_for(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(tower, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.tower, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        tower = self._tower_for(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(tower)
        if len(other.coeffs) == 1:
            c = other.coeffs[0]
            return UniPoly(tower, [a * c for a in self.coeffs])
        out: List[Any] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = a * b + out[i + j]
        return UniPoly(tower, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly(self.tower, [1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c: Coefficient) -> "UniPoly":
        return self * c

    # ------------------------------------------------------------------
    # Euclidean structure
    # ------------------------------------------------------------------

    def divmod(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """
        Division with remainder over the coefficient field.

        Raises:
            ZeroDivisionError: other is zero
            TowerSplitError: the leading coefficient of other is a zero divisor
        """
        if other.is_zero():
            raise ZeroDivisionError("UniPoly division by zero")
        tower = self._tower_for(other)
        remainder = [tower.element(c) for c in self.coeffs]
        dq = other.degree
        if len(remainder) - 1 < dq:
            return UniPoly(tower), UniPoly(tower, remainder)
        inv_lc = other.leading.inverse()
        quotient: List[Any] = [0] * (len(remainder) - dq)
        for i in range(len(remainder) - 1, dq - 1, -1):
            c = remainder[i]
            if c.is_zero():
                continue
            f = c * inv_lc
            quotient[i - dq] = f
            for t in range(dq):
                if not other.coeffs[t].is_zero():
                    remainder[i - dq + t] = remainder[i - dq + t] - f * other.coeffs[t]
            remainder[i] = tower.zero()
        return UniPoly(tower, quotient), UniPoly(tower, remainder[:dq])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divide_exact(self, other: "UniPoly") -> "UniPoly":
        quotient, remainder = self.divmod(other)
        if not remainder.is_zero():
            raise PreconditionError(f"{other} does not divide {self}")
        return quotient

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * self.leading.inverse()

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd (zero if both operands are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UniPoly":
        return UniPoly(self.tower, [c * i for i, c in enumerate(self.coeffs)][1:])

    def squarefree_part(self) -> "UniPoly":
        """Monic p / gcd(p, p')."""
        if self.degree < 1:
            raise PreconditionError("squarefree part of a constant polynomial")
        return self.divide_exact(self.gcd(self.derivative())).monic()

    # ------------------------------------------------------------------
    # Evaluation / mapping
    # ------------------------------------------------------------------

    def evaluate(self, value: Coefficient) -> AlgebraicNumber:
        acc: Any = self.tower.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc if isinstance(acc, AlgebraicNumber) else self.tower.element(acc)

    def map_coefficients(
        self, fn: Callable[[AlgebraicNumber], AlgebraicNumber], tower: ExtensionTower
    ) -> "UniPoly":
        return UniPoly(tower, [fn(c) for c in self.coeffs])

    # ------------------------------------------------------------------
    # Comparison / display
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def format(self, var: str = "x") -> str:
        return format_terms(((i, c) for i, c in enumerate(self.coeffs)), var)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniPoly({self.format()})"


def format_terms(terms: Iterable[Tuple[int, AlgebraicNumber]], var: str) -> str:
    """'t^3 - 2*t + 1' style rendering, highest exponent first."""
    parts: List[str] = []
    for n, c in sorted(terms, key=lambda item: -item[0]):
        if c.is_zero():
            continue
        cs = str(c)
        if n == 0:
            parts.append(cs)
            continue
        mono = var if n == 1 else f"{var}^{n}"
        if cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append(f"-{mono}")
        elif any(ch in cs[1:] for ch in "+-") or " " in cs:
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")
