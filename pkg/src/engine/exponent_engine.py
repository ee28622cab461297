"""
Loja Exponent Engine
====================

Exact local Lojasiewicz exponent of a polynomial mapping F: C^2 -> C^m at a
zero in the origin, through the branch formula

    L0(F) = max_i  min_j mu(h_i, f_j) / ord h_i

over the local branches h_i of f = f_1 * ... * f_m.

Pipeline:
    1. normalize   drop zero components, shear x -> x + c*y until f is y-regular
    2. branches    rational Newton-Puiseux expansion of f_red = squarefree part of f
    3. table       mu_ij = ord_t f_j(gamma t^e, y(t)) with a Bezout cutoff for inf
    4. result      lambda_i per row, maximum, witness branch

Usage:
    from src.engine.exponent_engine import ExponentEngine

    engine = ExponentEngine()
    result = engine.exponent(MappingInput((y**2 - x**3, x**2 * y)))
    print(result.exponent_str())   # 7/2
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..arith.tower import ExtensionTower, TowerSplitError, certify_nonzero
from ..errors import InputValidationError
from ..poly.algorithms import divide_exact, gcd, reduced_product
from ..poly.bipoly import BiPoly
from ..puiseux.branches import BranchClass, PuiseuxExpander
from .engine_config import EngineConfig, get_engine_config
from .engine_models import (
    BranchExponent,
    IntersectionTable,
    LojasiewiczResult,
    MappingInput,
    NormalizedProblem,
    TableRow,
    Valuation,
    WitnessCurve,
    format_value,
    max_exponent,
)

logger = logging.getLogger(__name__)


def shear_sequence() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


class ExponentEngine:
    """
    Exact engine; one instance can serve many mappings.

    A shared configuration comes from the environment unless one is passed.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or get_engine_config()
        self._base = ExtensionTower.base(self.config.max_tower_degree)

    # =========================================================================
    # NORMALIZATION
    # =========================================================================

    def shear_candidates(self) -> Iterator[Fraction]:
        """Shears to try, in order, under the configured mode."""
        if self.config.shear is not None:
            yield Fraction(self.config.shear)
            return
        if self.config.random_shear:
            rng = np.random.default_rng(self.config.seed)
            while True:
                yield Fraction(int(rng.integers(-1000, 1001)), int(rng.integers(1, 101)))
        yield from shear_sequence()

    def normalize(self, mapping: MappingInput) -> NormalizedProblem:
        """
        Drop identically zero components and pick a shear making f y-regular.

        Raises:
            InputValidationError: a component has a nonzero constant term, or
                an explicit shear does not make f y-regular
        """
        original = tuple(mapping.components)
        for index, f in enumerate(original):
            if not f.constant_term().is_zero():
                raise InputValidationError(
                    f"component {index + 1} ({f}) does not vanish at the origin"
                )

        kept = tuple(i for i, f in enumerate(original) if not f.is_zero())
        dropped = tuple(i for i, f in enumerate(original) if f.is_zero())
        if dropped:
            logger.info(
                f"Dropped {len(dropped)} identically zero component(s)",
                extra={"stage": "normalize", "component": [i + 1 for i in dropped]},
            )
        if not kept:
            return NormalizedProblem(original, (), (), dropped, Fraction(0))

        product = original[kept[0]]
        for i in kept[1:]:
            product = product * original[i]

        tried = 0
        for c in self.shear_candidates():
            tried += 1
            if product.shear(c).regular_in_y():
                break
            if self.config.shear is not None:
                raise InputValidationError(f"shear {c} does not make the product y-regular")
        else:
            raise InputValidationError("no shear makes the product y-regular")

        components = tuple(original[i].shear(c).lift(self._base) for i in kept)
        sheared_product, reduced = reduced_product(list(components))
        logger.info(
            f"Normalized {len(kept)} component(s) after {tried} shear candidate(s); "
            f"ord f = {sheared_product.ord}, deg f_red = {reduced.total_degree}",
            extra={"stage": "normalize", "shear": str(c)},
        )
        return NormalizedProblem(
            original=original,
            components=components,
            kept=kept,
            dropped=dropped,
            shear=c,
            product=sheared_product,
            reduced=reduced.lift(self._base),
        )

    # =========================================================================
    # INTERSECTION MULTIPLICITIES
    # =========================================================================

    def column_cofactor(self, f_j: BiPoly, f_red: BiPoly) -> BiPoly:
        """
        f_red / gcd(f_red, f_j). f_red is squarefree, so every branch of
        f_red lies either on f_j or on this cofactor, never on both.
        """
        if f_j.is_zero():
            return BiPoly.constant(1, f_red.tower)
        return divide_exact(f_red, gcd(f_red, f_j))

    def mu(self, branch: BranchClass, f_j: BiPoly, f_red: BiPoly,
           cofactor: Optional[BiPoly] = None) -> Valuation:
        """
        ord_t f_j(gamma t^e, y(t)) for a branch class of f_red.

        Precision doubles from the configured start. At each precision the
        valuation of f_j and of the cofactor f_red / gcd(f_red, f_j) are
        computed; exactly one of them is finite along the branch, and the
        first one seen to be finite decides the entry. The Bezout bound
        B = deg(f_red) * deg(f_j) caps the schedule.

        Raises:
            TowerSplitError: a leading coefficient is a zero divisor of the
                branch tower; the caller splits the class and retries
        """
        if f_j.is_zero():
            return math.inf
        if cofactor is None:
            cofactor = self.column_cofactor(f_j, f_red)
        if cofactor.degree_y <= 0:
            # every branch of f_red lies on f_j
            return math.inf
        shares_branches = cofactor.degree_y < f_red.degree_y
        bound = f_red.total_degree * f_j.total_degree
        precision = min(max(self.config.mu_start_precision, branch.e * f_j.ord), bound)
        while True:
            order, values = branch.valuation(f_j, precision)
            if order != math.inf:
                certify_nonzero(values[order])
                return order
            if shares_branches:
                off_order, off_values = branch.valuation(cofactor, precision)
                if off_order != math.inf:
                    certify_nonzero(off_values[off_order])
                    return math.inf
            if precision >= bound:
                return math.inf
            precision = min(2 * precision, bound)

    def branch_rows(self, branch: BranchClass, problem: NormalizedProblem,
                    cofactors: Optional[Sequence[BiPoly]] = None) -> List[Tuple[BranchClass, Tuple[Valuation, ...]]]:
        """
        Table rows for one branch class, forking it whenever a valuation
        lands on a zero divisor. Forks keep the order of the fork list.
        """
        if cofactors is None:
            cofactors = [self.column_cofactor(f, problem.reduced) for f in problem.components]
        pending = [branch]
        done: List[Tuple[BranchClass, Tuple[Valuation, ...]]] = []
        while pending:
            current = pending.pop(0)
            try:
                row = tuple(
                    self.mu(current, f, problem.reduced, cofactor)
                    for f, cofactor in zip(problem.components, cofactors)
                )
            except TowerSplitError as exc:
                if exc.event.tower != current.tower:
                    raise
                forks = current.split(exc.event)
                logger.warning(
                    f"Zero divisor while certifying a valuation; class split into "
                    f"residue degrees {[b.residue_degree for b in forks]}",
                    extra={"stage": "table"},
                )
                pending[0:0] = forks
                continue
            done.append((current, row))
        return done

    def branch_lambda(self, index: int, branch: BranchClass, row: Sequence[Valuation]) -> BranchExponent:
        """min_j mu_ij / ord h_i, inf when the whole row is inf."""
        smallest = min(row) if row else math.inf
        if smallest == math.inf:
            return BranchExponent(index, math.inf)
        return BranchExponent(index, Fraction(int(smallest), branch.multiplicity))

    def build_table(self, classes: Sequence[BranchClass], problem: NormalizedProblem) -> IntersectionTable:
        cofactors = [self.column_cofactor(f, problem.reduced) for f in problem.components]
        if self.config.workers > 1 and len(classes) > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                per_class = list(pool.map(lambda b: self.branch_rows(b, problem, cofactors), classes))
        else:
            per_class = [self.branch_rows(b, problem, cofactors) for b in classes]

        table = IntersectionTable(columns=len(problem.components))
        for rows in per_class:
            for branch, mu in rows:
                table.rows.append(TableRow(index=len(table.rows), branch=branch, mu=mu))
        for row in table.rows:
            logger.debug(
                f"Branch {row.index}: e={row.e} residue degree {row.residue_degree} "
                f"mu=({', '.join(format_value(v) for v in row.mu)})",
                extra={"stage": "table", "branch": row.index},
            )
        return table

    # =========================================================================
    # EXPONENT
    # =========================================================================

    def exponent(self, mapping: MappingInput) -> LojasiewiczResult:
        """Full pipeline: normalize, expand, tabulate, maximize."""
        start = time.perf_counter()
        problem = self.normalize(mapping)

        if problem.is_trivial:
            logger.info("Mapping is identically zero", extra={"stage": "result", "exponent": "inf"})
            return LojasiewiczResult(
                exponent=math.inf,
                problem=problem,
                table=IntersectionTable(),
                lambdas=[],
                duration_seconds=time.perf_counter() - start,
            )

        expander = PuiseuxExpander(self.config.max_expansion_depth)
        classes = expander.expand(problem.reduced)
        logger.info(
            f"Found {len(classes)} branch class(es) of f_red ({expander.splits} split(s))",
            extra={"stage": "branches"},
        )

        table = self.build_table(classes, problem)
        lambdas = [self.branch_lambda(row.index, row.branch, row.mu) for row in table.rows]
        value, maximizing = max_exponent([lam.value for lam in lambdas])

        witness_index = maximizing[0] if maximizing else None
        witness = None
        if witness_index is not None:
            witness = WitnessCurve.from_branch(
                witness_index,
                table.rows[witness_index].branch,
                problem.shear,
                self.config.witness_degree,
            )

        duration = time.perf_counter() - start
        logger.info(
            f"Exponent {format_value(value)} attained on branch(es) {maximizing}",
            extra={"stage": "result", "exponent": format_value(value), "duration": round(duration, 4)},
        )
        return LojasiewiczResult(
            exponent=value,
            problem=problem,
            table=table,
            lambdas=lambdas,
            witness_index=witness_index,
            witness=witness,
            maximizing_branches=tuple(maximizing),
            duration_seconds=duration,
        )


def in_exponent_set(result: LojasiewiczResult, nu: Union[int, Fraction, float]) -> bool:
    """
    Whether |F(z)| >= A|z|^nu holds near 0 for some A > 0.

    The bound holds at the exponent itself, so the admissible set is [L0(F), inf).
    """
    if not result.is_finite:
        return False
    return nu >= result.exponent


def lojasiewicz_exponent(components: Sequence[BiPoly], config: Optional[EngineConfig] = None) -> LojasiewiczResult:
    """Convenience wrapper around ExponentEngine.exponent."""
    return ExponentEngine(config).exponent(MappingInput(tuple(components)))
