"""
Loja Extension Towers
=====================

Exact arithmetic in towers K_0 ⊂ K_1 ⊂ ... ⊂ K_h where K_0 is Q or Q(i)
(GaussianRational coefficients) and K_k = K_{k-1}[a_k] / (m_k).

The minimal polynomials m_k are only guaranteed monic and squarefree over the
level below, not irreducible. A K_k is therefore a product of fields, and the
tower works by dynamic evaluation: inversion of a zero divisor exposes a
factorization of some m_k (a SplitEvent), and the caller forks its
computation onto each factor with ExtensionTower.fork().

Representation:
    height 0: GaussianRational
    height k: tuple of height-(k-1) representations, coefficients of
              a_k^0, a_k^1, ... with length < deg(m_k); zero is ().

Usage:
    from src.arith.tower import ExtensionTower

    base = ExtensionTower.base()
    tower, a = base.adjoin_root([base.element(-2), base.zero(), base.one()])
    assert a * a == 2
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..errors import LojaError, PreconditionError, ResourceGuardError
from .numbers import ONE, ZERO, GaussianRational, format_gaussian

logger = logging.getLogger(__name__)

DEFAULT_MAX_TOWER_DEGREE = 256

Rep = Any  # GaussianRational | tuple of Rep


# =============================================================================
# Exceptions
# =============================================================================

class TowerMismatchError(LojaError, ValueError):
    """Operands live in unrelated towers."""
    pass


class TowerDegreeExceededError(ResourceGuardError):
    """Adjoining a root would push the total tower degree over the guard."""

    def __init__(self, requested: int, limit: int):
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"Total tower degree {requested} exceeds the configured guard {limit}"
        )


@dataclass(frozen=True)
class SplitEvent:
    """
    A zero divisor was met at level `level` (1-based).

    factor * cofactor == minimal polynomial of that level; both monic, with
    coefficients in the level below (height level-1 representations).
    """
    tower: "ExtensionTower"
    level: int
    factor: Tuple[Rep, ...]
    cofactor: Tuple[Rep, ...]

    @property
    def degrees(self) -> Tuple[int, int]:
        return len(self.factor) - 1, len(self.cofactor) - 1


class TowerSplitError(LojaError):
    """Raised when an inversion hits a zero divisor; carries the SplitEvent."""

    def __init__(self, event: SplitEvent):
        self.event = event
        f_deg, c_deg = event.degrees
        super().__init__(
            f"Zero divisor at tower level {event.level}: "
            f"minimal polynomial splits as degree {f_deg} x degree {c_deg}"
        )


class _LevelSplit(Exception):
    """Internal signal raised by representation-level code; converted to TowerSplitError."""

    def __init__(self, level: int, factor: tuple, cofactor: tuple):
        self.level = level
        self.factor = factor
        self.cofactor = cofactor
        super().__init__(level)


# =============================================================================
# Representation-level arithmetic
# =============================================================================

def _zero(k: int) -> Rep:
    return ZERO if k == 0 else ()


def _one(k: int) -> Rep:
    rep = ONE
    for _ in range(k):
        rep = (rep,)
    return rep


def _lift(rep: Rep, steps: int) -> Rep:
    for _ in range(steps):
        rep = (rep,) if rep else ()
    return rep


def _trim(coeffs: Sequence[Rep]) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def _add(a: Rep, b: Rep, k: int) -> Rep:
    if k == 0:
        return a + b
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = _add(a[i], bi, k - 1)
    return _trim(out)


def _neg(a: Rep, k: int) -> Rep:
    if k == 0:
        return -a
    return tuple(_neg(c, k - 1) for c in a)


def _sub(a: Rep, b: Rep, k: int) -> Rep:
    if not b:
        return a
    return _add(a, _neg(b, k), k)


def _scale_int(a: Rep, n: int, k: int) -> Rep:
    if k == 0:
        return a * n
    if n == 0:
        return ()
    return tuple(_scale_int(c, n, k - 1) for c in a)


def _mul(a: Rep, b: Rep, levels: Sequence["TowerLevel"], k: int) -> Rep:
    if k == 0:
        return a * b
    if not a or not b:
        return ()
    j = k - 1
    return _poly_rem_monic(_poly_mul(a, b, levels, j), levels[j].modulus, levels, j)


def _poly_add(a: Sequence[Rep], b: Sequence[Rep], j: int) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = _add(a[i], bi, j)
    return _trim(out)


def _poly_sub(a: Sequence[Rep], b: Sequence[Rep], j: int) -> tuple:
    return _poly_add(a, [_neg(c, j) for c in b], j)


def _poly_mul(a: Sequence[Rep], b: Sequence[Rep], levels, j: int) -> tuple:
    if not a or not b:
        return ()
    out = [_zero(j)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for t, bt in enumerate(b):
            if bt:
                out[i + t] = _add(out[i + t], _mul(ai, bt, levels, j), j)
    return _trim(out)


def _poly_scale(a: Sequence[Rep], c: Rep, levels, j: int) -> tuple:
    return _trim([_mul(ai, c, levels, j) for ai in a])


def _poly_rem_monic(p: Sequence[Rep], m: Sequence[Rep], levels, j: int) -> tuple:
    """Remainder of p modulo the monic polynomial m (height-j coefficients)."""
    d = len(m) - 1
    if len(p) <= d:
        return _trim(p)
    r = list(p)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if not c:
            continue
        for t in range(d):
            if m[t]:
                r[i - d + t] = _sub(r[i - d + t], _mul(c, m[t], levels, j), j)
        r[i] = _zero(j)
    return _trim(r[:d])


def _poly_divmod(p: Sequence[Rep], q: Sequence[Rep], levels, j: int) -> Tuple[tuple, tuple]:
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    inv_lc = _inverse(q[-1], levels, j)
    r = list(_trim(p))
    if len(r) <= dq:
        return (), tuple(r)
    quot = [_zero(j)] * (len(r) - dq)
    for i in range(len(r) - 1, dq - 1, -1):
        c = r[i]
        if not c:
            continue
        f = _mul(c, inv_lc, levels, j)
        quot[i - dq] = f
        for t in range(dq):
            if q[t]:
                r[i - dq + t] = _sub(r[i - dq + t], _mul(f, q[t], levels, j), j)
        r[i] = _zero(j)
    return _trim(quot), _trim(r[:dq])


def _poly_monic(p: Sequence[Rep], levels, j: int) -> tuple:
    p = _trim(p)
    if not p:
        return p
    return _poly_scale(p, _inverse(p[-1], levels, j), levels, j)


def _poly_gcd(a: Sequence[Rep], b: Sequence[Rep], levels, j: int) -> tuple:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _poly_divmod(a, b, levels, j)
        a, b = b, r
    return _poly_monic(a, levels, j)


def _poly_derivative(p: Sequence[Rep], j: int) -> tuple:
    return _trim([_scale_int(p[i], i, j) for i in range(1, len(p))])


def _poly_eval(p: Sequence[Rep], value: Rep, levels, j: int) -> Rep:
    acc = _zero(j)
    for c in reversed(p):
        acc = _add(_mul(acc, value, levels, j), c, j)
    return acc


def _inverse(a: Rep, levels: Sequence["TowerLevel"], k: int) -> Rep:
    """Inverse of a height-k representation, or _LevelSplit on a zero divisor."""
    if not a:
        raise ZeroDivisionError("inverse of zero in extension tower")
    if k == 0:
        return a.inverse()
    j = k - 1
    if len(a) == 1:
        return (_inverse(a[0], levels, j),)

    m = levels[j].modulus
    r0, r1 = tuple(m), tuple(a)
    s0, s1 = (), (_one(j),)
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1, levels, j)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, levels, j), j)

    if not r1:
        factor = _poly_monic(r0, levels, j)
        cofactor, _ = _poly_divmod(m, factor, levels, j)
        raise _LevelSplit(k, factor, cofactor)

    c = _inverse(r1[0], levels, j)
    return _poly_rem_monic(_poly_scale(s1, c, levels, j), m, levels, j)


def _canonical(rep: Rep, k: int) -> Tuple[int, Rep]:
    """Strip levels in which the element does not actually involve the generator."""
    while k > 0 and len(rep) <= 1:
        rep = rep[0] if rep else ZERO
        k -= 1
    return k, rep


def _format_rep(rep: Rep, names: Sequence[str], k: int) -> str:
    k, rep = _canonical(rep, k)
    if k == 0:
        return format_gaussian(rep)
    name = names[k - 1]
    terms: List[str] = []
    for i in range(len(rep) - 1, -1, -1):
        c = rep[i]
        if not c:
            continue
        cs = _format_rep(c, names, k - 1)
        if i == 0:
            terms.append(cs)
            continue
        mono = name if i == 1 else f"{name}^{i}"
        if cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append(f"-{mono}")
        elif any(ch in cs[1:] for ch in "+-") or "a" in cs:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    text = " + ".join(terms)
    return text.replace("+ -", "- ")


# =============================================================================
# Public types
# =============================================================================

@dataclass(frozen=True)
class TowerLevel:
    """One adjoined generator and its (monic, squarefree) minimal polynomial."""
    name: str
    modulus: Tuple[Rep, ...]

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1


@dataclass(frozen=True)
class ExtensionTower:
    """
    Immutable tower of algebraic extensions over Q / Q(i).

    Extending a tower returns a new tower; the guard max_degree caps the
    product of level degrees and is not part of tower equality.
    """
    levels: Tuple[TowerLevel, ...] = ()
    max_degree: int = field(default=DEFAULT_MAX_TOWER_DEGREE, compare=False)

    @classmethod
    def base(cls, max_degree: int = DEFAULT_MAX_TOWER_DEGREE) -> "ExtensionTower":
        return cls((), max_degree)

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be positive")

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(level.degree for level in self.levels)

    @property
    def total_degree(self) -> int:
        total = 1
        for level in self.levels:
            total *= level.degree
        return total

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(level.name for level in self.levels)

    def is_prefix_of(self, other: "ExtensionTower") -> bool:
        n = len(self.levels)
        return n <= len(other.levels) and other.levels[:n] == self.levels

    def describe(self) -> List[str]:
        """Minimal polynomials as strings, e.g. ['a1^2 - 2']."""
        out = []
        for idx, level in enumerate(self.levels):
            below = self.names[:idx]
            terms = []
            for i in range(level.degree, -1, -1):
                c = level.modulus[i]
                if not c:
                    continue
                cs = _format_rep(c, below, idx)
                mono = "" if i == 0 else (level.name if i == 1 else f"{level.name}^{i}")
                if not mono:
                    terms.append(cs)
                elif cs == "1":
                    terms.append(mono)
                elif cs == "-1":
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"({cs})*{mono}")
            out.append(" + ".join(terms).replace("+ -", "- "))
        return out

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    def zero(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, _zero(self.height))

    def one(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self, _one(self.height))

    def element(self, value: Union[int, Fraction, GaussianRational, "AlgebraicNumber"]) -> "AlgebraicNumber":
        """Coerce a scalar (or an element of a prefix tower) into this tower."""
        if isinstance(value, AlgebraicNumber):
            return self.lift(value)
        g = GaussianRational.coerce(value)
        return AlgebraicNumber(self, _lift(g, self.height))

    def generator(self, index: int) -> "AlgebraicNumber":
        """Generator a_index (1-based) as an element of this tower."""
        if not 1 <= index <= self.height:
            raise IndexError(f"tower has no generator a{index}")
        rep = (_zero(index - 1), _one(index - 1))
        return AlgebraicNumber(self, _lift(rep, self.height - index))

    def lift(self, a: "AlgebraicNumber") -> "AlgebraicNumber":
        if a.tower is self:
            return a
        if not a.tower.is_prefix_of(self):
            raise TowerMismatchError("element tower is not a prefix of the target tower")
        return AlgebraicNumber(self, _lift(a.rep, self.height - a.tower.height))

    # ------------------------------------------------------------------
    # Extension and forking
    # ------------------------------------------------------------------

    def adjoin_root(self, coefficients: Sequence[Any]) -> Tuple["ExtensionTower", "AlgebraicNumber"]:
        """
        Adjoin a root of p = sum(coefficients[i] * z^i).

        The new level's minimal polynomial is the monic squarefree part of p;
        if it has degree 1 no level is added and the root is returned in this
        tower.

        Raises:
            PreconditionError: p is constant
            TowerDegreeExceededError: guard exceeded
            TowerSplitError: a zero divisor was met while computing the squarefree part
        """
        k = self.height
        p = _trim([self.element(c).rep for c in coefficients])
        if len(p) < 2:
            raise PreconditionError("cannot adjoin a root of a constant polynomial")

        try:
            g = _poly_gcd(p, _poly_derivative(p, k), self.levels, k)
            s, _ = _poly_divmod(p, g, self.levels, k)
            s = _poly_monic(s, self.levels, k)
        except _LevelSplit as exc:
            raise TowerSplitError(self._event(exc)) from None

        if len(s) == 2:
            return self, AlgebraicNumber(self, _neg(s[0], k))

        requested = self.total_degree * (len(s) - 1)
        if requested > self.max_degree:
            raise TowerDegreeExceededError(requested, self.max_degree)

        level = TowerLevel(name=f"a{k + 1}", modulus=s)
        tower = ExtensionTower(self.levels + (level,), self.max_degree)
        logger.debug("Adjoined level a%d of degree %d (total %d)", k + 1, len(s) - 1, requested)
        return tower, AlgebraicNumber(tower, (_zero(k), _one(k)))

    def fork(self, event: SplitEvent) -> List["TowerProjection"]:
        """Projections of this tower onto the factor and cofactor of a SplitEvent."""
        if event.tower != self:
            raise TowerMismatchError("split event belongs to another tower")
        return [
            self._project_onto(event.level, event.factor),
            self._project_onto(event.level, event.cofactor),
        ]

    def _event(self, exc: _LevelSplit) -> SplitEvent:
        return SplitEvent(self, exc.level, exc.factor, exc.cofactor)

    def _project_onto(self, k: int, g: Tuple[Rep, ...]) -> "TowerProjection":
        levels = self.levels
        j = k - 1
        new_levels: List[TowerLevel] = list(levels[:j])

        if len(g) == 2:
            root = _neg(g[0], j)

            def project_k(rep: Rep) -> Rep:
                return _poly_eval(rep, root, levels, j)
        else:
            new_levels.append(TowerLevel(name=f"a{k}", modulus=tuple(g)))

            def project_k(rep: Rep) -> Rep:
                return _poly_rem_monic(rep, g, levels, j)

        projections: Dict[int, Callable[[Rep], Rep]] = {k: project_k}
        for h in range(k + 1, self.height + 1):
            below = projections[h - 1]
            old = levels[h - 1]
            new_levels.append(
                TowerLevel(
                    name=f"a{len(new_levels) + 1}",
                    modulus=tuple(below(c) for c in old.modulus),
                )
            )
            projections[h] = lambda rep, below=below: _trim([below(c) for c in rep])

        tower = ExtensionTower(tuple(new_levels), self.max_degree)
        return TowerProjection(source=self, tower=tower, mapping=projections[self.height])


@dataclass(frozen=True)
class TowerProjection:
    """Ring map from a tower onto one branch of a SplitEvent."""
    source: ExtensionTower
    tower: ExtensionTower
    mapping: Callable[[Rep], Rep] = field(compare=False, repr=False)

    def project(self, a: "AlgebraicNumber") -> "AlgebraicNumber":
        a = self.source.lift(a)
        return AlgebraicNumber(self.tower, self.mapping(a.rep))


class AlgebraicNumber:
    """
    Element of an ExtensionTower.

    Values are immutable. Operands from a tower and one of its prefixes are
    lifted automatically; unrelated towers raise TowerMismatchError.
    """

    __slots__ = ("tower", "rep")

    def __init__(self, tower: ExtensionTower, rep: Rep):
        self.tower = tower
        self.rep = rep

    # ------------------------------------------------------------------
    # Coercion
    # ------------------------------------------------------------------

    def _align(self, other: Any) -> Optional[Tuple[ExtensionTower, Rep, Rep]]:
        if isinstance(other, AlgebraicNumber):
            if other.tower is self.tower or other.tower == self.tower:
                return self.tower, self.rep, other.rep
            if self.tower.is_prefix_of(other.tower):
                return other.tower, other.tower.lift(self).rep, other.rep
            if other.tower.is_prefix_of(self.tower):
                return self.tower, self.rep, self.tower.lift(other).rep
            raise TowerMismatchError("operands belong to unrelated extension towers")
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.tower, self.rep, self.tower.element(other).rep
        return None

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, a, b = aligned
        return AlgebraicNumber(tower, _add(a, b, tower.height))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.tower, _neg(self.rep, self.tower.height))

    def __sub__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, a, b = aligned
        return AlgebraicNumber(tower, _sub(a, b, tower.height))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, a, b = aligned
        return AlgebraicNumber(tower, _mul(a, b, tower.levels, tower.height))

    __rmul__ = __mul__

    def inverse(self) -> "AlgebraicNumber":
        """Multiplicative inverse; raises TowerSplitError on a zero divisor."""
        try:
            rep = _inverse(self.rep, self.tower.levels, self.tower.height)
        except _LevelSplit as exc:
            raise TowerSplitError(self.tower._event(exc)) from None
        return AlgebraicNumber(self.tower, rep)

    def __truediv__(self, other):
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        tower, a, b = aligned
        return AlgebraicNumber(tower, a) * AlgebraicNumber(tower, b).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "AlgebraicNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self) -> bool:
        return bool(self.rep)

    def __eq__(self, other) -> bool:
        try:
            aligned = self._align(other)
        except TowerMismatchError:
            return False
        if aligned is None:
            return NotImplemented
        _, a, b = aligned
        return a == b

    def __hash__(self) -> int:
        return hash(_canonical(self.rep, self.tower.height))

    def in_base_field(self) -> bool:
        return _canonical(self.rep, self.tower.height)[0] == 0

    def to_base(self) -> GaussianRational:
        """The element as a GaussianRational, if it lies in the base field."""
        k, rep = _canonical(self.rep, self.tower.height)
        if k:
            raise ValueError(f"{self} does not lie in the base field")
        return rep

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self})"

    def __str__(self) -> str:
        return _format_rep(self.rep, self.tower.names, self.tower.height)


# =============================================================================
# Module-level operations
# =============================================================================

def add(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    return a + b


def sub(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    return a - b


def mul(a: AlgebraicNumber, b: AlgebraicNumber) -> AlgebraicNumber:
    return a * b


def neg(a: AlgebraicNumber) -> AlgebraicNumber:
    return -a


def try_invert(a: AlgebraicNumber) -> Union[AlgebraicNumber, SplitEvent]:
    """Inverse of a, or the SplitEvent exposing a zero divisor. Raises ZeroDivisionError for 0."""
    try:
        return a.inverse()
    except TowerSplitError as exc:
        return exc.event


def certify_nonzero(a: AlgebraicNumber) -> bool:
    """
    Decisive zero test under dynamic evaluation.

    False for zero, True for units; zero divisors raise TowerSplitError.
    """
    if a.is_zero():
        return False
    if a.tower.height:
        a.inverse()
    return True


def adjoin_root(tower: ExtensionTower, p: Any) -> Tuple[ExtensionTower, AlgebraicNumber]:
    """Adjoin a root of p (a UniPoly or a coefficient sequence, low degree first)."""
    coefficients = getattr(p, "coeffs", p)
    return tower.adjoin_root(coefficients)
