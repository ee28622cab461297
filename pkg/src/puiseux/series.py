"""
Loja Truncated Power Series
===========================

Dense truncated series in one parameter t, stored as lists of
AlgebraicNumber where index n holds the coefficient of t^n. A series "of
precision n" has exactly n known coefficients (degrees 0 .. n-1).

The two workhorses are:
    substitute(p, x_coeff, x_exp, ys, n)  p(x_coeff * t^x_exp, y(t)) mod t^n
    newton_lift(...)                       solve H(T, w(T)) = 0 by Newton steps
"""

import math
from typing import Dict, List, Sequence, Union

from ..arith.tower import AlgebraicNumber, ExtensionTower
from ..poly.bipoly import BiPoly

Series = List[AlgebraicNumber]


def zeros(tower: ExtensionTower, n: int) -> Series:
    z = tower.zero()
    return [z] * n


def series_mul(a: Sequence[AlgebraicNumber], b: Sequence[AlgebraicNumber], n: int,
               tower: ExtensionTower) -> Series:
    """First n coefficients of a*b; zero coefficients of either factor are skipped."""
    out = zeros(tower, n)
    support_b = [(j, bj) for j, bj in enumerate(b[:n]) if not bj.is_zero()]
    if not support_b:
        return out
    for i, ai in enumerate(a[:n]):
        if ai.is_zero():
            continue
        for j, bj in support_b:
            if i + j >= n:
                break
            out[i + j] = out[i + j] + ai * bj
    return out


def series_inverse(a: Sequence[AlgebraicNumber], n: int, inv0: AlgebraicNumber,
                   tower: ExtensionTower) -> Series:
    """First n coefficients of 1/a, given inv0 = 1/a[0]."""
    out = zeros(tower, n)
    if n == 0:
        return out
    out[0] = inv0
    for k in range(1, n):
        acc = tower.zero()
        for i in range(1, min(k, len(a) - 1) + 1):
            if not a[i].is_zero():
                acc = acc + a[i] * out[k - i]
        out[k] = -(inv0 * acc)
    return out


def substitute(p: BiPoly, x_coeff: Union[int, AlgebraicNumber], x_exp: int,
               ys: Sequence[AlgebraicNumber], n: int, tower: ExtensionTower) -> Series:
    """
    p(x_coeff * t^x_exp, y(t)) modulo t^n.

    ys must carry at least n coefficients (missing ones are taken as zero).
    Horner in y over the rows of p.
    """
    rows: Dict[int, List] = {}
    for (a, b), c in p.terms.items():
        rows.setdefault(b, []).append((a, c))

    base = x_coeff if isinstance(x_coeff, AlgebraicNumber) else tower.element(x_coeff)
    x_powers: Dict[int, AlgebraicNumber] = {}

    def x_power(a: int) -> AlgebraicNumber:
        if a not in x_powers:
            x_powers[a] = base ** a
        return x_powers[a]

    ys = list(ys[:n])
    acc = zeros(tower, n)
    for b in range(p.degree_y, -1, -1):
        if b != p.degree_y:
            acc = series_mul(acc, ys, n, tower)
        for a, c in rows.get(b, ()):
            k = a * x_exp
            if k < n:
                acc[k] = acc[k] + c * x_power(a)
    return acc


def leading_index(s: Sequence[AlgebraicNumber]) -> Union[int, float]:
    """Index of the first structurally nonzero coefficient, math.inf if none."""
    for i, c in enumerate(s):
        if not c.is_zero():
            return i
    return math.inf


def newton_lift(equation: BiPoly, derivative: BiPoly, inv0: AlgebraicNumber,
                w: Series, target: int, tower: ExtensionTower) -> Series:
    """
    Extend a root w(T) of equation(T, w) = 0 to degree `target`.

    w must be correct through degree len(w) - 1, and inv0 must be the inverse
    of derivative(0, w(0)). Each step doubles the number of correct terms:
    known through p gives known through 2p + 1.
    """
    w = list(w)
    while len(w) - 1 < target:
        n = min(2 * len(w), target + 1)
        padded = w + zeros(tower, n - len(w))
        value = substitute(equation, 1, 1, padded, n, tower)
        slope = substitute(derivative, 1, 1, padded, n, tower)
        correction = series_mul(value, series_inverse(slope, n, inv0, tower), n, tower)
        w = [padded[i] - correction[i] for i in range(n)]
    return w
