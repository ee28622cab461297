"""
Loja Newton Polygons
====================

Lower convex hull of the support of H(T, w) between the point (0, r), with
r the order of H(0, w), and the lowest occupied w-row.

An edge between (a0, b0) (upper) and (a1, b1) (lower) carries
    q, m  coprime with m/q = (a1 - a0) / (b0 - b1)   (w ~ T^(m/q))
    l     the weighted degree q*a + m*b shared by all on-edge points
    phi   characteristic polynomial sum c_ab z^((b - b1)/q) over on-edge points
Edges are listed in increasing slope order.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy

from ..errors import PreconditionError
from ..poly.bipoly import BiPoly, Monomial
from ..poly.unipoly import UniPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonEdge:
    """One edge of the polygon; see module docstring for the invariants."""
    upper: Monomial
    lower: Monomial
    q: int
    m: int
    l: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.m, self.q)

    @property
    def degree(self) -> int:
        """Degree of the characteristic polynomial."""
        return (self.upper[1] - self.lower[1]) // self.q

    def points(self) -> List[Monomial]:
        """Lattice points on the edge, lower endpoint first."""
        a1, b1 = self.lower
        return [(a1 - self.m * j, b1 + self.q * j) for j in range(self.degree + 1)]

    def characteristic(self, p: BiPoly) -> UniPoly:
        return UniPoly(p.tower, [p.coefficient(a, b) for a, b in self.points()])


@dataclass(frozen=True)
class NewtonPolygon:
    r: int
    lowest_row: int
    edges: Tuple[NewtonEdge, ...]

    @property
    def vertices(self) -> List[Monomial]:
        if not self.edges:
            return [(0, self.r)]
        return [self.edges[0].upper] + [edge.lower for edge in self.edges]


def lower_hull(support: Iterable[Monomial], r: int) -> NewtonPolygon:
    """
    Hull from (0, r) down to the lowest row of `support`.

    The next vertex minimizes (a - a0) / (b0 - b) over points below the
    current one; ties go to the lowest b so collinear points stay on the edge.
    """
    points = sorted(set(support))
    lowest = min(b for _, b in points)
    current = (0, r)
    edges: List[NewtonEdge] = []
    while current[1] > lowest:
        a0, b0 = current
        best: Optional[Monomial] = None
        best_ratio: Optional[Fraction] = None
        for a, b in points:
            if b >= b0:
                continue
            ratio = Fraction(a - a0, b0 - b)
            if best_ratio is None or ratio < best_ratio or (ratio == best_ratio and b < best[1]):
                best, best_ratio = (a, b), ratio
        a1, b1 = best
        g = math.gcd(a1 - a0, b0 - b1)
        q, m = (b0 - b1) // g, (a1 - a0) // g
        edges.append(NewtonEdge(upper=current, lower=best, q=q, m=m, l=q * a0 + m * b0))
        current = best
    return NewtonPolygon(r=r, lowest_row=lowest, edges=tuple(edges))


def newton_polygon(p: BiPoly) -> NewtonPolygon:
    """
    Newton polygon of a nonzero y-regular p with p(0, 0) = 0.

    Raises:
        PreconditionError: p is zero, p(0, 0) != 0, or p is not y-regular
    """
    if p.is_zero():
        raise PreconditionError("Newton polygon of the zero polynomial")
    if (0, 0) in p.terms:
        raise PreconditionError("Newton polygon requires p(0, 0) = 0")
    if not p.regular_in_y():
        raise PreconditionError(f"{p} is not y-regular")
    return lower_hull(p.terms, p.ord)


def bezout_pair(q: int, m: int) -> Tuple[int, int]:
    """
    (u, v) with u*q - v*m = 1, 1 <= u <= m and v >= 0.

    v >= 0 keeps the x-coefficient xi^v free of inversions; q = 1 gives (1, 0).
    """
    if m == 1:
        return 1, q - 1
    u = pow(q, -1, m)
    return u, (u * q - 1) // m


def rational_roots(phi: UniPoly) -> List[Fraction]:
    """
    Distinct rational roots of phi, increasing, when all coefficients are
    rational; otherwise [].
    """
    coeffs: List[Fraction] = []
    for c in phi.coeffs:
        if not c.in_base_field():
            return []
        g = c.to_base()
        if not g.is_real():
            return []
        coeffs.append(g.re)
    if len(coeffs) < 2:
        return []
    z = sympy.Symbol("z")
    poly = sympy.Poly.from_list(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], z, domain=sympy.QQ
    )
    roots = poly.ground_roots()
    return sorted(Fraction(int(root.p), int(root.q)) for root in roots)


def remove_roots(phi: UniPoly, roots: Sequence[Fraction]) -> UniPoly:
    """phi with every linear factor (z - root) removed, multiplicities included."""
    for root in roots:
        linear = UniPoly(phi.tower, [-root, 1])
        while phi.degree >= 1 and phi.evaluate(root).is_zero():
            phi = phi.divide_exact(linear)
    return phi


def characteristic_roots(edge: NewtonEdge, p: BiPoly) -> Tuple[List[Fraction], UniPoly]:
    """Rational roots of the edge polynomial and the cofactor left after removing them."""
    phi = edge.characteristic(p)
    roots = rational_roots(phi)
    return roots, remove_roots(phi, roots)