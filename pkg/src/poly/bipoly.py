"""
Loja Bivariate Polynomials
==========================

Sparse bivariate polynomials p(x, y) = sum c_ab x^a y^b with AlgebraicNumber
coefficients over one ExtensionTower. No zero coefficient is ever stored.

The same type carries the transformed polynomials H(T, w) of the Puiseux
expansion, with x playing the role of the parameter T and y of w.

Usage:
    from src.poly.bipoly import BiPoly

    x, y = BiPoly.x(), BiPoly.y()
    cusp = y**2 - x**3
    cusp.ord            # 2
    cusp.regular_in_y() # True
"""

import math
from fractions import Fraction
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..arith.numbers import GaussianRational
from ..arith.tower import AlgebraicNumber, ExtensionTower
from ..errors import PreconditionError
from .unipoly import Coefficient, UniPoly

Monomial = Tuple[int, int]

_BASE = ExtensionTower.base()


class BiPoly:
    """Immutable sparse polynomial in x, y."""

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None,
                 tower: Optional[ExtensionTower] = None):
        tower = tower if tower is not None else _BASE
        cleaned: Dict[Monomial, AlgebraicNumber] = {}
        for (a, b), value in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial ({a}, {b})")
            c = tower.element(value)
            if not c.is_zero():
                cleaned[(a, b)] = c
        self.tower = tower
        self.terms: Dict[Monomial, AlgebraicNumber] = cleaned

    @classmethod
    def _raw(cls, terms: Dict[Monomial, AlgebraicNumber], tower: ExtensionTower) -> "BiPoly":
        """Build from already-coerced, zero-free terms."""
        poly = cls.__new__(cls)
        poly.tower = tower
        poly.terms = terms
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, tower: Optional[ExtensionTower] = None) -> "BiPoly":
        return cls({}, tower)

    @classmethod
    def constant(cls, value: Coefficient, tower: Optional[ExtensionTower] = None) -> "BiPoly":
        return cls({(0, 0): value}, tower)

    @classmethod
    def monomial(cls, a: int, b: int, value: Coefficient = 1,
                 tower: Optional[ExtensionTower] = None) -> "BiPoly":
        return cls({(a, b): value}, tower)

    @classmethod
    def x(cls, tower: Optional[ExtensionTower] = None) -> "BiPoly":
        return cls.monomial(1, 0, 1, tower)

    @classmethod
    def y(cls, tower: Optional[ExtensionTower] = None) -> "BiPoly":
        return cls.monomial(0, 1, 1, tower)

    @classmethod
    def from_y_coefficients(cls, coeffs: Iterable[UniPoly],
                            tower: Optional[ExtensionTower] = None) -> "BiPoly":
        """Inverse of y_coefficients(): coeffs[b] is the K[x] coefficient of y^b."""
        terms: Dict[Monomial, AlgebraicNumber] = {}
        for b, u in enumerate(coeffs):
            tower = tower if tower is not None else u.tower
            for a, c in enumerate(u.coeffs):
                if not c.is_zero():
                    terms[(a, b)] = c
        return cls(terms, tower)

    # ------------------------------------------------------------------
    # Cached structure
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @cached_property
    def total_degree(self) -> int:
        """Maximal a+b; -1 for zero."""
        return max((a + b for a, b in self.terms), default=-1)

    @cached_property
    def ord(self) -> Union[int, float]:
        """Minimal a+b over nonzero terms; math.inf for zero."""
        return min((a + b for a, b in self.terms), default=math.inf)

    @cached_property
    def degree_y(self) -> int:
        return max((b for _, b in self.terms), default=-1)

    @cached_property
    def degree_x(self) -> int:
        return max((a for a, _ in self.terms), default=-1)

    @cached_property
    def order_y(self) -> Union[int, float]:
        """Lowest power of y dividing the polynomial."""
        return min((b for _, b in self.terms), default=math.inf)

    def coefficient(self, a: int, b: int) -> AlgebraicNumber:
        return self.terms.get((a, b)) or self.tower.zero()

    def support(self) -> List[Monomial]:
        return sorted(self.terms)

    def items(self) -> Iterator[Tuple[Monomial, AlgebraicNumber]]:
        return iter(sorted(self.terms.items()))

    def constant_term(self) -> AlgebraicNumber:
        return self.coefficient(0, 0)

    def y_coefficients(self) -> List[UniPoly]:
        """[c_0(x), c_1(x), ...] with p = sum c_b(x) y^b."""
        rows: List[Dict[int, AlgebraicNumber]] = [dict() for _ in range(self.degree_y + 1)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for row in rows:
            width = max(row, default=-1) + 1
            out.append(UniPoly(self.tower, [row.get(a, 0) for a in range(width)]))
        return out

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def regular_in_y(self) -> bool:
        """True iff the coefficient of y^(ord p) is nonzero."""
        if self.is_zero():
            raise PreconditionError("regularity of the zero polynomial is undefined")
        return (0, self.ord) in self.terms

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _align(self, other: Any) -> Optional[Tuple[ExtensionTower, "BiPoly"]]:
        if isinstance(other, BiPoly):
            if other.tower is self.tower or other.tower == self.tower:
                return self.tower, other
            if self.tower.is_prefix_of(other.tower):
                return other.tower, other
            return self.tower, other
        if isinstance(other, (int, Fraction, GaussianRational, AlgebraicNumber)):
            tower = self.tower
            if isinstance(other, AlgebraicNumber) and self.tower.is_prefix_of(other.tower):
                tower = other.tower
            return tower, BiPoly({(0, 0): other}, tower)
        return None

    def lift(self, tower: ExtensionTower) -> "BiPoly":
        if tower is self.tower:
            return self
        return BiPoly._raw({m: tower.lift(c) for m, c in self.terms.items()}, tower)

    def __add__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, other = aligned
        terms = dict(self.lift(tower).terms)
        for m, c in other.lift(tower).terms.items():
            s = terms[m] + c if m in terms else c
            if s.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = s
        return BiPoly._raw(terms, tower)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({m: -c for m, c in self.terms.items()}, self.tower)

    def __sub__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        return self + (-aligned[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, other = aligned
        left, right = self.lift(tower), other.lift(tower)
        terms: Dict[Monomial, AlgebraicNumber] = {}
        for (a1, b1), c1 in left.terms.items():
            for (a2, b2), c2 in right.terms.items():
                m = (a1 + a2, b1 + b2)
                prod = c1 * c2
                terms[m] = terms[m] + prod if m in terms else prod
        return BiPoly._raw({m: c for m, c in terms.items() if not c.is_zero()}, tower)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = BiPoly.constant(1, self.tower)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Substitutions
    # ------------------------------------------------------------------

    def shear(self, c: Coefficient) -> "BiPoly":
        """p(x + c*y, y)."""
        c = self._coefficient_in_tower(c)
        if c.is_zero():
            return self
        return self.linear_substitute(1, c, 0, 1)

    def linear_substitute(self, a: Coefficient, b: Coefficient,
                          c: Coefficient, d: Coefficient) -> "BiPoly":
        """p(a*x + b*y, c*x + d*y)."""
        tower = self.tower
        for value in (a, b, c, d):
            if isinstance(value, AlgebraicNumber) and tower.is_prefix_of(value.tower):
                tower = value.tower
        u = BiPoly({(1, 0): a, (0, 1): b}, tower)
        v = BiPoly({(1, 0): c, (0, 1): d}, tower)
        return self.compose(u, v)

    def compose(self, u: "BiPoly", v: "BiPoly") -> "BiPoly":
        """p(u(x, y), v(x, y))."""
        tower = u.tower if self.tower.is_prefix_of(u.tower) else self.tower
        u_powers: Dict[int, BiPoly] = {0: BiPoly.constant(1, tower)}
        v_powers: Dict[int, BiPoly] = {0: BiPoly.constant(1, tower)}

        def power(cache: Dict[int, BiPoly], base: BiPoly, n: int) -> BiPoly:
            if n not in cache:
                cache[n] = power(cache, base, n - 1) * base
            return cache[n]

        result = BiPoly.zero(tower)
        for (a, b), coeff in self.items():
            result = result + power(u_powers, u, a) * power(v_powers, v, b) * coeff
        return result

    def derivative_y(self) -> "BiPoly":
        return BiPoly._raw(
            {(a, b - 1): c * b for (a, b), c in self.terms.items() if b > 0},
            self.tower,
        )

    def evaluate(self, x: Coefficient, y: Coefficient) -> AlgebraicNumber:
        acc: Any = self.tower.zero()
        for (a, b), c in self.terms.items():
            acc = acc + c * (x ** a) * (y ** b) if a or b else acc + c
        return acc if isinstance(acc, AlgebraicNumber) else self.tower.element(acc)

    def map_coefficients(self, fn: Callable[[AlgebraicNumber], AlgebraicNumber],
                         tower: ExtensionTower) -> "BiPoly":
        return BiPoly({m: fn(c) for m, c in self.terms.items()}, tower)

    def _coefficient_in_tower(self, value: Coefficient) -> AlgebraicNumber:
        if isinstance(value, AlgebraicNumber):
            return value
        return self.tower.element(value)

    # ------------------------------------------------------------------
    # Comparison / display
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        other = aligned[1]
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def format(self, xvar: str = "x", yvar: str = "y") -> str:
        parts: List[str] = []
        for (a, b), c in sorted(self.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), -item[0][1])):
            mono = "*".join(
                token
                for token in (
                    "" if a == 0 else (xvar if a == 1 else f"{xvar}^{a}"),
                    "" if b == 0 else (yvar if b == 1 else f"{yvar}^{b}"),
                )
                if token
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
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

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"BiPoly({self.format()})"


def shear(p: BiPoly, c: Coefficient) -> BiPoly:
    return p.shear(c)


def linear_substitute(p: BiPoly, a: Coefficient, b: Coefficient,
                      c: Coefficient, d: Coefficient) -> BiPoly:
    return p.linear_substitute(a, b, c, d)


def regular_in_y(p: BiPoly) -> bool:
    return p.regular_in_y()
