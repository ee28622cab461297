"""
Loja Polynomial Algorithms in K[x][y]
=====================================

Bivariate polynomials are viewed as polynomials in y whose coefficients are
UniPoly in x. K[x] is a Euclidean domain, so contents are monic gcds and all
divisions by contents are exact.

    gcd          subresultant PRS with content removal
    resultant_y  subresultant resultant (signs tracked exactly)
    divide_exact long division in y with exact K[x] quotients

Usage:
    from src.poly.algorithms import gcd, resultant_y, squarefree_part

    resultant_y(y**2 - x**3, y)   # UniPoly(-x^3)
"""

import logging
from typing import List, Tuple

from ..arith.tower import ExtensionTower
from ..errors import PreconditionError
from .bipoly import BiPoly
from .unipoly import UniPoly

logger = logging.getLogger(__name__)

YPoly = List[UniPoly]


# =============================================================================
# Helpers on coefficient lists
# =============================================================================

def _common_tower(p: BiPoly, q: BiPoly) -> ExtensionTower:
    if p.tower.is_prefix_of(q.tower):
        return q.tower
    return p.tower


def _trim(p: YPoly) -> YPoly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _content(p: YPoly, tower: ExtensionTower) -> UniPoly:
    g = UniPoly.zero(tower)
    for c in p:
        g = g.gcd(c)
        if g.degree == 0:
            break
    return g


def _divide_coefficients(p: YPoly, d: UniPoly) -> YPoly:
    if d.degree == 0 and d.leading == 1:
        return list(p)
    return [c.divide_exact(d) for c in p]


def _prem(a: YPoly, b: YPoly) -> YPoly:
    """lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    lcb = b[-1]
    e = len(a) - 1 - db + 1
    r = list(a)
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        shifted = [c * lcb for c in r]
        for i, bc in enumerate(b):
            shifted[dr - db + i] = shifted[dr - db + i] - lr * bc
        r = _trim(shifted)
        e -= 1
    if e > 0:
        factor = lcb ** e
        r = [c * factor for c in r]
    return r


def _next_h(h: UniPoly, g: UniPoly, delta: int) -> UniPoly:
    """h^(1 - delta) * g^delta, an exact quotient in K[x]."""
    if delta == 0:
        return h
    if delta == 1:
        return g
    return (g ** delta).divide_exact(h ** (delta - 1))


def _normalize(p: BiPoly) -> BiPoly:
    """Scale so that the leading x-coefficient of the leading y-coefficient is 1."""
    if p.is_zero():
        return p
    top = p.degree_y
    lead_a = max(a for a, b in p.terms if b == top)
    unit = p.terms[(lead_a, top)]
    if unit == 1:
        return p
    return p * unit.inverse()


# =============================================================================
# Public algorithms
# =============================================================================

def pseudo_remainder(p: BiPoly, q: BiPoly) -> BiPoly:
    """Pseudo-remainder of p by q as polynomials in y."""
    tower = _common_tower(p, q)
    p, q = p.lift(tower), q.lift(tower)
    if q.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    return BiPoly.from_y_coefficients(_prem(p.y_coefficients(), q.y_coefficients()), tower)


def gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """
    Greatest common divisor in K[x][y], normalized.

    The K[x]-content of the result is the gcd of the contents, so the result
    is primitive in y whenever one operand is.
    """
    tower = _common_tower(p, q)
    p, q = p.lift(tower), q.lift(tower)
    if q.is_zero():
        return _normalize(p)
    if p.is_zero():
        return _normalize(q)

    a_coeffs, b_coeffs = p.y_coefficients(), q.y_coefficients()
    if len(a_coeffs) < len(b_coeffs):
        a_coeffs, b_coeffs = b_coeffs, a_coeffs

    a_cont, b_cont = _content(a_coeffs, tower), _content(b_coeffs, tower)
    d = a_cont.gcd(b_cont)
    a_coeffs = _divide_coefficients(a_coeffs, a_cont)
    b_coeffs = _divide_coefficients(b_coeffs, b_cont)

    one = UniPoly.constant(tower, 1)
    g = h = one
    while True:
        delta = len(a_coeffs) - len(b_coeffs)
        r = _prem(a_coeffs, b_coeffs)
        if not r:
            break
        if len(r) == 1:
            b_coeffs = [one]
            break
        a_coeffs = b_coeffs
        divisor = g * h ** delta
        b_coeffs = _divide_coefficients(r, divisor)
        g = a_coeffs[-1]
        h = _next_h(h, g, delta)

    b_coeffs = _divide_coefficients(b_coeffs, _content(b_coeffs, tower))
    return _normalize(BiPoly.from_y_coefficients([d * c for c in b_coeffs], tower))


def resultant_y(p: BiPoly, q: BiPoly) -> UniPoly:
    """
    Resultant of p and q with respect to y, as a polynomial in x.

    The sign matches the Sylvester determinant: res(y^2 - x^3, y) = -x^3
    and res(q, p) = (-1)^(deg p * deg q) * res(p, q).
    """
    tower = _common_tower(p, q)
    p, q = p.lift(tower), q.lift(tower)
    a_coeffs, b_coeffs = p.y_coefficients(), q.y_coefficients()
    if not a_coeffs or not b_coeffs:
        return UniPoly.zero(tower)

    deg_a, deg_b = len(a_coeffs) - 1, len(b_coeffs) - 1
    if deg_b == 0:
        return b_coeffs[0] ** deg_a
    if deg_a == 0:
        return a_coeffs[0] ** deg_b

    a_cont, b_cont = _content(a_coeffs, tower), _content(b_coeffs, tower)
    a_coeffs = _divide_coefficients(a_coeffs, a_cont)
    b_coeffs = _divide_coefficients(b_coeffs, b_cont)
    t = a_cont ** deg_b * b_cont ** deg_a

    sign = 1
    if deg_a < deg_b:
        a_coeffs, b_coeffs = b_coeffs, a_coeffs
        if deg_a % 2 and deg_b % 2:
            sign = -1

    one = UniPoly.constant(tower, 1)
    g = h = one
    while True:
        da, db = len(a_coeffs) - 1, len(b_coeffs) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _prem(a_coeffs, b_coeffs)
        if not r:
            return UniPoly.zero(tower)
        a_coeffs = b_coeffs
        b_coeffs = _divide_coefficients(r, g * h ** delta)
        g = a_coeffs[-1]
        h = _next_h(h, g, delta)
        if len(b_coeffs) == 1:
            break

    da = len(a_coeffs) - 1
    lead = b_coeffs[-1] ** da
    if da > 1:
        lead = lead.divide_exact(h ** (da - 1))
    return lead * t * sign


def divide_exact(p: BiPoly, q: BiPoly) -> BiPoly:
    """
    Exact quotient p / q in K[x][y].

    Raises:
        ZeroDivisionError: q is zero
        PreconditionError: q does not divide p
    """
    tower = _common_tower(p, q)
    p, q = p.lift(tower), q.lift(tower)
    q_coeffs = q.y_coefficients()
    if not q_coeffs:
        raise ZeroDivisionError("exact division by the zero polynomial")

    r = p.y_coefficients()
    quotient: YPoly = [UniPoly.zero(tower)] * max(len(r) - len(q_coeffs) + 1, 0)
    while r and len(r) >= len(q_coeffs):
        k = len(r) - len(q_coeffs)
        c = r[-1].divide_exact(q_coeffs[-1])
        quotient[k] = c
        for i, qc in enumerate(q_coeffs):
            r[k + i] = r[k + i] - c * qc
        _trim(r)
    if r:
        raise PreconditionError("divisor does not divide the polynomial exactly")
    return BiPoly.from_y_coefficients(quotient, tower)


def squarefree_part(p: BiPoly) -> BiPoly:
    """
    p / gcd(p, dp/dy), normalized. Requires a y-regular p.

    Factors that are constant in y survive only through the content of p,
    which for y-regular p is a unit at the origin.
    """
    if p.is_zero() or not p.regular_in_y():
        raise PreconditionError("squarefree_part requires a nonzero y-regular polynomial")
    g = gcd(p, p.derivative_y())
    return _normalize(divide_exact(p, g))


def reduced_product(components: List[BiPoly]) -> Tuple[BiPoly, BiPoly]:
    """
    (product, squarefree part of the product) of y-regular components.

    The squarefree part is accumulated component by component:
    r <- r * (s / gcd(r, s)) with s the squarefree part of the next component.
    """
    if not components:
        raise PreconditionError("reduced_product needs at least one component")
    product = components[0]
    reduced = squarefree_part(components[0])
    for component in components[1:]:
        product = product * component
        s = squarefree_part(component)
        common = gcd(reduced, s)
        reduced = _normalize(reduced * divide_exact(s, common))
    logger.debug(
        "Reduced curve: degree %d, ord %s (product degree %d)",
        reduced.total_degree, reduced.ord, product.total_degree,
    )
    return product, reduced
