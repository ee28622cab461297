"""
Loja Branch Classes
===================

Rational Newton-Puiseux expansion of a squarefree, y-regular curve germ at
the origin. Each BranchClass is one conjugacy orbit of local branches over
the coefficient field, parametrized primitively as

    x = gamma * t^e
    y = sum_n p_n t^n  +  scale * t^shift * w(t)

where the finite sum is the singular part and w(t) is the regular part: the
unique root with w(0) = 0 of a polynomial equation H(t, w) = 0 whose
w-derivative at the origin is invertible. The regular part is produced on
demand by Newton lifting and memoized on the class.

Expansion follows rational (Duval) steps: for an edge with w ~ T^(m/q) and a
root xi of its characteristic polynomial, substitute

    T -> xi^v * T^q,   w -> T^m * (xi^u + w)        (u*q - v*m = 1)

and divide by T^l. Roots that are rational are split off as their own
classes; the remaining factor is adjoined to the tower as one generic root.
Zero divisors met on the way fork the computation (dynamic evaluation).

Usage:
    from src.puiseux.branches import expand_branches

    for branch in expand_branches(y**2 - x**3):
        print(branch.e, branch.extend_to(10).format())   # 2  t^3
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..arith.tower import (
    AlgebraicNumber,
    ExtensionTower,
    SplitEvent,
    TowerProjection,
    TowerSplitError,
    certify_nonzero,
)
from ..errors import PreconditionError, ResourceGuardError
from ..poly.bipoly import BiPoly
from ..poly.unipoly import format_terms
from .newton_polygon import NewtonEdge, bezout_pair, characteristic_roots, lower_hull, remove_roots
from .series import leading_index, newton_lift, substitute, zeros

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXPANSION_DEPTH = 64


class NonSquarefreeInputError(ResourceGuardError):
    """Separation never reached: the curve has a repeated factor."""

    def __init__(self, message: str = "Puiseux expansion did not separate; input is not squarefree"):
        super().__init__(message)


# =============================================================================
# Value types
# =============================================================================

@dataclass(frozen=True)
class PuiseuxSeries:
    """y(t) through t^truncation for a parametrization x = gamma * t^e."""
    tower: ExtensionTower
    e: int
    gamma: AlgebraicNumber
    truncation: int
    coefficients: Tuple[AlgebraicNumber, ...]

    def terms(self) -> List[Tuple[int, AlgebraicNumber]]:
        return [(n, c) for n, c in enumerate(self.coefficients) if not c.is_zero()]

    @property
    def lowest_exponent(self) -> Union[int, float]:
        return leading_index(self.coefficients)

    def coefficient(self, n: int) -> AlgebraicNumber:
        if n > self.truncation:
            raise IndexError(f"t^{n} is beyond the truncation t^{self.truncation}")
        return self.coefficients[n]

    def format(self, var: str = "t") -> str:
        return format_terms(self.terms(), var)


@dataclass(frozen=True)
class _Chart:
    """x = gamma * t^e, y = singular(t) + scale * t^shift * w."""
    e: int
    gamma: AlgebraicNumber
    singular: Tuple[Tuple[int, AlgebraicNumber], ...]
    scale: AlgebraicNumber
    shift: int

    @classmethod
    def identity(cls, tower: ExtensionTower) -> "_Chart":
        return cls(e=1, gamma=tower.one(), singular=(), scale=tower.one(), shift=0)

    def refine(self, q: int, m: int, gamma_step: AlgebraicNumber, beta: AlgebraicNumber) -> "_Chart":
        """Chart after T -> gamma_step * T^q, w -> T^m * (beta + w)."""
        singular = tuple((q * n, c * gamma_step ** n) for n, c in self.singular)
        scale = self.scale * gamma_step ** self.shift
        singular += ((q * self.shift + m, scale * beta),)
        return _Chart(
            e=self.e * q,
            gamma=self.gamma * gamma_step ** self.e,
            singular=singular,
            scale=scale,
            shift=q * self.shift + m,
        )

    def project(self, projection: TowerProjection) -> "_Chart":
        return _Chart(
            e=self.e,
            gamma=projection.project(self.gamma),
            singular=tuple((n, projection.project(c)) for n, c in self.singular),
            scale=projection.project(self.scale),
            shift=self.shift,
        )


# =============================================================================
# Branch classes
# =============================================================================

class BranchClass:
    """
    One conjugacy class of local branches.

    residue_degree is the number of complex branches the class stands for
    (the total degree of its tower). The regular part is extended lazily;
    a class must be confined to one thread while it is being extended.
    """

    def __init__(
        self,
        tower: ExtensionTower,
        chart: _Chart,
        equation: Optional[BiPoly] = None,
        lead_inverse: Optional[AlgebraicNumber] = None,
        regular: Optional[List[AlgebraicNumber]] = None,
    ):
        self.tower = tower
        self._chart = chart
        self._equation = equation
        self._derivative = equation.derivative_y() if equation is not None else None
        self._lead_inverse = lead_inverse
        self._regular: List[AlgebraicNumber] = list(regular) if regular else [tower.zero()]
        self._cache: Optional[PuiseuxSeries] = None

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def e(self) -> int:
        return self._chart.e

    @property
    def gamma(self) -> AlgebraicNumber:
        return self._chart.gamma

    @property
    def singular_part(self) -> Tuple[Tuple[int, AlgebraicNumber], ...]:
        return self._chart.singular

    @property
    def residue_degree(self) -> int:
        return self.tower.total_degree

    @property
    def is_finite(self) -> bool:
        """True when y(t) is a polynomial (w is identically zero)."""
        return self._equation is None

    @property
    def multiplicity(self) -> int:
        """min(e, lowest exponent of y): the order of the branch germ."""
        lowest = self.extend_to(self.e).lowest_exponent
        return min(self.e, lowest) if lowest != math.inf else self.e

    # ------------------------------------------------------------------
    # Series
    # ------------------------------------------------------------------

    def _ensure_regular(self, degree: int) -> None:
        if self._equation is None or degree < len(self._regular):
            return
        self._regular = newton_lift(
            self._equation, self._derivative, self._lead_inverse,
            self._regular, degree, self.tower,
        )

    def coefficients(self, n: int) -> List[AlgebraicNumber]:
        """Exact coefficients of y(t) for t^0 .. t^n."""
        out = zeros(self.tower, n + 1)
        for k, c in self._chart.singular:
            if k <= n:
                out[k] = out[k] + c
        if self._equation is not None and n >= self._chart.shift:
            top = n - self._chart.shift
            self._ensure_regular(top)
            scale = self._chart.scale
            for i in range(1, top + 1):
                w = self._regular[i]
                if not w.is_zero():
                    out[self._chart.shift + i] = out[self._chart.shift + i] + scale * w
        return out

    def extend_to(self, n: int) -> PuiseuxSeries:
        """PuiseuxSeries exact through t^n; repeated calls reuse earlier work."""
        if n < 0:
            raise PreconditionError("truncation must be non-negative")
        cached = self._cache
        if cached is not None and cached.truncation >= n:
            if cached.truncation == n:
                return cached
            return PuiseuxSeries(self.tower, self.e, self.gamma, n, cached.coefficients[: n + 1])
        series = PuiseuxSeries(self.tower, self.e, self.gamma, n, tuple(self.coefficients(n)))
        self._cache = series
        return series

    def valuation(self, p: BiPoly, precision: int) -> Tuple[Union[int, float], List[AlgebraicNumber]]:
        """
        Structural order of p(gamma t^e, y(t)) through t^precision, and the
        computed coefficients. math.inf when all of them vanish.
        """
        ys = self.coefficients(precision)
        values = substitute(p, self.gamma, self.e, ys, precision + 1, self.tower)
        return leading_index(values), values

    def back_substitution_order(self, p: BiPoly, n: int) -> Union[int, float]:
        """ord_t p(gamma t^e, y_n(t)) with y truncated at t^n, looked for through t^(2n+1)."""
        ys = self.coefficients(n)
        values = substitute(p, self.gamma, self.e, ys, 2 * n + 2, self.tower)
        return leading_index(values)

    # ------------------------------------------------------------------
    # Dynamic evaluation
    # ------------------------------------------------------------------

    def split(self, event: SplitEvent) -> List["BranchClass"]:
        """Fork this class along a SplitEvent of its tower."""
        if event.tower != self.tower:
            raise PreconditionError("split event does not belong to this branch tower")
        forks = []
        for projection in self.tower.fork(event):
            project = projection.project
            forks.append(
                BranchClass(
                    tower=projection.tower,
                    chart=self._chart.project(projection),
                    equation=(
                        self._equation.map_coefficients(project, projection.tower)
                        if self._equation is not None else None
                    ),
                    lead_inverse=project(self._lead_inverse) if self._lead_inverse is not None else None,
                    regular=[project(c) for c in self._regular],
                )
            )
        logger.debug(
            "Branch class (e=%d, residue degree %d) split into residue degrees %s",
            self.e, self.residue_degree, [f.residue_degree for f in forks],
        )
        return forks

    def __repr__(self) -> str:
        kind = "finite" if self.is_finite else "regular"
        return (
            f"BranchClass(e={self.e}, residue_degree={self.residue_degree}, "
            f"gamma={self.gamma}, singular={self.extend_to(self._chart.shift).format()!r}, {kind})"
        )


# =============================================================================
# Expansion
# =============================================================================

@dataclass(frozen=True)
class _Step:
    """A pending Duval step: an edge plus either a rational root or 'the rest'."""
    edge: NewtonEdge
    root: Optional[Fraction] = None
    excluded: Tuple[Fraction, ...] = ()


@dataclass
class _Node:
    tower: ExtensionTower
    equation: BiPoly
    chart: _Chart
    depth: int
    step: Optional[_Step] = None

    def project(self, projection: TowerProjection) -> "_Node":
        return _Node(
            tower=projection.tower,
            equation=self.equation.map_coefficients(projection.project, projection.tower),
            chart=self.chart.project(projection),
            depth=self.depth,
            step=self.step,
        )


def _anchor(event: SplitEvent, tower: ExtensionTower) -> Optional[SplitEvent]:
    """Re-express an event of a prefix tower as an event of `tower`."""
    if event.tower == tower:
        return event
    if event.tower.is_prefix_of(tower):
        return SplitEvent(tower, event.level, event.factor, event.cofactor)
    return None


def transform(H: BiPoly, q: int, m: int, l: int,
              gamma_step: AlgebraicNumber, beta: AlgebraicNumber) -> BiPoly:
    """H(gamma_step * T^q, T^m * (beta + w)) / T^l, expanded binomially."""
    tower = beta.tower if H.tower.is_prefix_of(beta.tower) else H.tower
    gamma_powers: Dict[int, AlgebraicNumber] = {}
    beta_powers: List[AlgebraicNumber] = [tower.one()]
    terms: Dict[Tuple[int, int], AlgebraicNumber] = {}
    for (a, b), c in H.terms.items():
        if a not in gamma_powers:
            gamma_powers[a] = gamma_step ** a
        while len(beta_powers) <= b:
            beta_powers.append(beta_powers[-1] * beta)
        exponent = q * a + m * b - l
        if exponent < 0:
            raise PreconditionError("edge weight exceeds the weighted order of a support point")
        base = c * gamma_powers[a]
        for k in range(b + 1):
            coeff = base * beta_powers[b - k] * math.comb(b, k)
            key = (exponent, k)
            terms[key] = terms[key] + coeff if key in terms else coeff
    return BiPoly(terms, tower)


class PuiseuxExpander:
    """
    Enumerates branch classes of one curve.

    max_depth bounds the number of nested Duval steps; squarefree input
    always separates well within it.
    """

    def __init__(self, max_depth: int = DEFAULT_MAX_EXPANSION_DEPTH):
        if max_depth < 1:
            raise ValueError("max_depth must be positive")
        self.max_depth = max_depth
        self.splits = 0

    def expand(self, p: BiPoly) -> List[BranchClass]:
        if p.is_zero():
            raise PreconditionError("cannot expand the zero polynomial")
        if (0, 0) in p.terms:
            raise PreconditionError("curve does not pass through the origin")
        if not p.regular_in_y():
            raise PreconditionError(f"{p} is not y-regular")
        root = _Node(tower=p.tower, equation=p, chart=_Chart.identity(p.tower), depth=0)
        classes = self._expand(root)
        logger.debug(
            "Expanded curve of order %s into %d classes (%d splits)",
            p.ord, len(classes), self.splits,
        )
        return classes

    def _expand(self, node: _Node) -> List[BranchClass]:
        if node.depth > self.max_depth:
            raise NonSquarefreeInputError(
                f"Puiseux expansion exceeded depth {self.max_depth}; input is not squarefree"
            )
        try:
            return self._expand_node(node)
        except TowerSplitError as exc:
            event = _anchor(exc.event, node.tower)
            if event is None:
                raise
            self.splits += 1
            logger.debug("Zero divisor at level %d during expansion, forking", event.level)
            out: List[BranchClass] = []
            for projection in node.tower.fork(event):
                out.extend(self._expand(node.project(projection)))
            return out

    def _expand_node(self, node: _Node) -> List[BranchClass]:
        if node.step is not None:
            return self._expand(self._apply_step(node))

        H = node.equation
        if H.is_zero():
            raise NonSquarefreeInputError("transformed equation vanished identically")
        lowest_row = H.order_y
        if lowest_row >= 2:
            raise NonSquarefreeInputError(f"w^{lowest_row} divides the transformed equation")

        r = self._axis_order(H)
        polygon = lower_hull(H.terms, r)
        for vertex in polygon.vertices[1:]:
            certify_nonzero(H.coefficient(*vertex))

        classes: List[BranchClass] = []
        if lowest_row == 1:
            classes.append(BranchClass(node.tower, node.chart))
        if r == 1:
            if lowest_row == 0:
                lead = H.coefficient(0, 1)
                classes.append(BranchClass(node.tower, node.chart, H, lead.inverse()))
            return classes

        for edge in polygon.edges:
            roots, rest = characteristic_roots(edge, H)
            for root in roots:
                classes.extend(self._expand(
                    _Node(node.tower, H, node.chart, node.depth, _Step(edge, root=root))
                ))
            if rest.degree >= 1:
                classes.extend(self._expand(
                    _Node(node.tower, H, node.chart, node.depth, _Step(edge, excluded=tuple(roots)))
                ))
        return classes

    @staticmethod
    def _axis_order(H: BiPoly) -> int:
        """Lowest b whose coefficient at (0, b) is certified nonzero."""
        for b in sorted(b for a, b in H.terms if a == 0):
            if certify_nonzero(H.coefficient(0, b)):
                return b
        raise PreconditionError("transformed equation vanishes on the w-axis")

    def _apply_step(self, node: _Node) -> _Node:
        step = node.step
        edge = step.edge
        H = node.equation
        if step.root is not None:
            tower, xi = node.tower, node.tower.element(step.root)
        else:
            rest = remove_roots(edge.characteristic(H), step.excluded)
            tower, xi = node.tower.adjoin_root(rest.coeffs)
        u, v = bezout_pair(edge.q, edge.m)
        gamma_step, beta = xi ** v, xi ** u
        return _Node(
            tower=tower,
            equation=transform(H, edge.q, edge.m, edge.l, gamma_step, beta),
            chart=node.chart.refine(edge.q, edge.m, gamma_step, beta),
            depth=node.depth + 1,
        )


def expand_branches(p: BiPoly, max_depth: int = DEFAULT_MAX_EXPANSION_DEPTH) -> List[BranchClass]:
    """Branch classes of a squarefree, y-regular p with p(0, 0) = 0."""
    return PuiseuxExpander(max_depth).expand(p)


def multiplicity(branch: BranchClass) -> int:
    return branch.multiplicity


def extend_to(branch: BranchClass, n: int) -> PuiseuxSeries:
    return branch.extend_to(n)


def split(branch: BranchClass, event: SplitEvent) -> List[BranchClass]:
    return branch.split(event)


def back_substitution_order(p: BiPoly, branch: BranchClass, n: int) -> Union[int, float]:
    return branch.back_substitution_order(p, n)


def residue_degree_sum(classes: Sequence[BranchClass]) -> int:
    """sum residue_degree * e, which equals ord p for a complete expansion."""
    return sum(b.residue_degree * b.e for b in classes)
