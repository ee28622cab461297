"""
Loja Engine Models
==================

Dataclasses passed between the stages of the exact exponent pipeline.

Models:
    - MappingInput: the components (f_1, ..., f_m) and their base field
    - NormalizedProblem: sheared components, product f and reduced curve f_red
    - TableRow / IntersectionTable: mu(h_i, f_j) per branch class and component
    - BranchExponent: lambda_i = min_j mu_ij / ord h_i
    - WitnessCurve: a maximizing branch in original coordinates
    - LojasiewiczResult: the exponent and everything that justifies it

Infinite values (mu, lambda, exponent) are represented by math.inf and
printed as the lowercase token "inf".
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..arith.numbers import format_fraction
from ..arith.tower import AlgebraicNumber, ExtensionTower
from ..errors import InputValidationError
from ..poly.bipoly import BiPoly
from ..poly.unipoly import format_terms
from ..puiseux.branches import BranchClass

Valuation = Union[int, float]
Exponent = Union[Fraction, float]

INF_TOKEN = "inf"


def format_value(value: Union[int, Fraction, float]) -> str:
    """Exact value as a reduced fraction string, or "inf"."""
    if value == math.inf:
        return INF_TOKEN
    return format_fraction(Fraction(value))


class BaseField(Enum):
    """Coefficient field of the input mapping."""
    RATIONAL = "rational"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class MappingInput:
    """A polynomial mapping F = (f_1, ..., f_m) with F(0) = 0."""
    components: Tuple[BiPoly, ...]
    field: BaseField = BaseField.RATIONAL

    def __post_init__(self):
        if not self.components:
            raise InputValidationError("a mapping needs at least one component")
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def m(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class NormalizedProblem:
    """
    The mapping after zero components are dropped and a shear x -> x + c*y
    has made f = f_1 * ... * f_m y-regular.

    `kept` lists the input indices of the retained components, in order;
    `components` are their sheared versions. An empty `kept` means F == 0.
    """
    original: Tuple[BiPoly, ...]
    components: Tuple[BiPoly, ...]
    kept: Tuple[int, ...]
    dropped: Tuple[int, ...]
    shear: Fraction
    product: Optional[BiPoly] = None
    reduced: Optional[BiPoly] = None

    @property
    def is_trivial(self) -> bool:
        return not self.kept

    @property
    def ord_f(self) -> Valuation:
        return self.product.ord if self.product is not None else math.inf


@dataclass
class TableRow:
    """Valuations of every retained component along one branch class."""
    index: int
    branch: BranchClass = field(repr=False, compare=False)
    mu: Tuple[Valuation, ...]

    @property
    def e(self) -> int:
        return self.branch.e

    @property
    def multiplicity(self) -> int:
        return self.branch.multiplicity

    @property
    def residue_degree(self) -> int:
        return self.branch.residue_degree

    @property
    def is_infinite(self) -> bool:
        """The branch lies in the common zero set of all components."""
        return all(v == math.inf for v in self.mu)


@dataclass
class IntersectionTable:
    """Rows per branch class, columns per retained component."""
    rows: List[TableRow] = field(default_factory=list)
    columns: int = 0

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class BranchExponent:
    """lambda_i for branch class i; math.inf iff its row is all infinite."""
    index: int
    value: Exponent

    @property
    def is_finite(self) -> bool:
        return self.value != math.inf

    def __str__(self) -> str:
        return format_value(self.value)


@dataclass(frozen=True)
class WitnessCurve:
    """
    Truncated parametrization t -> (x(t), y(t)) of a maximizing branch in
    the coordinates of the input, so x(t) = gamma*t^e + shear*y(t).
    """
    branch_index: int
    tower: ExtensionTower
    e: int
    truncation: int
    x_terms: Tuple[Tuple[int, AlgebraicNumber], ...]
    y_terms: Tuple[Tuple[int, AlgebraicNumber], ...]

    @classmethod
    def from_branch(cls, index: int, branch: BranchClass, shear: Fraction, degree: int) -> "WitnessCurve":
        series = branch.extend_to(degree)
        x: Dict[int, AlgebraicNumber] = {branch.e: branch.gamma}
        if shear != 0:
            for n, c in series.terms():
                scaled = c * shear
                x[n] = x[n] + scaled if n in x else scaled
        return cls(
            branch_index=index,
            tower=branch.tower,
            e=branch.e,
            truncation=degree,
            x_terms=tuple(sorted((n, c) for n, c in x.items() if not c.is_zero())),
            y_terms=tuple(series.terms()),
        )

    def format_x(self, var: str = "t") -> str:
        return format_terms(self.x_terms, var)

    def format_y(self, var: str = "t") -> str:
        return format_terms(self.y_terms, var)

    def describe_tower(self) -> List[str]:
        return self.tower.describe()


@dataclass
class LojasiewiczResult:
    """
    Local Lojasiewicz exponent of F at the origin.

    exponent = max_i lambda_i; witness_index is the lowest maximizing branch
    and maximizing_branches lists all of them.
    """
    exponent: Exponent
    problem: NormalizedProblem
    table: IntersectionTable
    lambdas: List[BranchExponent]
    witness_index: Optional[int] = None
    witness: Optional[WitnessCurve] = None
    maximizing_branches: Tuple[int, ...] = ()
    duration_seconds: float = 0.0

    @property
    def shear(self) -> Fraction:
        return self.problem.shear

    @property
    def is_finite(self) -> bool:
        return self.exponent != math.inf

    @property
    def isolated_zero(self) -> bool:
        """The origin is an isolated zero of F exactly when the exponent is finite."""
        return self.is_finite

    @property
    def branches(self) -> List[BranchClass]:
        return [row.branch for row in self.table.rows]

    def exponent_str(self) -> str:
        return format_value(self.exponent)

    def summary(self) -> str:
        lines = [f"exponent: {self.exponent_str()}", f"shear: {format_fraction(self.shear)}"]
        for row, lam in zip(self.table.rows, self.lambdas):
            mu = ", ".join(format_value(v) for v in row.mu)
            lines.append(
                f"  branch {row.index}: e={row.e} ord={row.multiplicity} "
                f"residue={row.residue_degree} mu=({mu}) lambda={lam}"
            )
        return "\n".join(lines)


def max_exponent(values: Sequence[Exponent]) -> Tuple[Exponent, List[int]]:
    """Maximum of lambda values and the indices attaining it (empty input gives inf)."""
    if not values:
        return math.inf, []
    best = max(values)
    return best, [i for i, v in enumerate(values) if v == best]
