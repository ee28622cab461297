"""
Loja Report Documents
=====================

Pydantic models for the CLI output. Exact quantities are strings (reduced
fractions or "inf"); only the numeric section carries floats. A document
survives model_dump_json / model_validate_json unchanged, and the output is
byte-identical for a fixed seed (timings are not part of it).
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..arith.numbers import format_fraction
from ..engine.engine_models import LojasiewiczResult, format_value
from ..validation.numeric_validator import EstimateReport


class BranchRowModel(BaseModel):
    """One row of the intersection table."""
    model_config = ConfigDict(populate_by_name=True)

    index: int
    e: int
    ord: int
    residue_degree: int
    tower: List[str] = Field(default_factory=list)
    mu: List[str]
    lambda_: str = Field(alias="lambda")
    maximizing: bool = False


class WitnessModel(BaseModel):
    """Witness parametrization in the input coordinates."""
    branch: int
    degree: int
    x: str
    y: str
    tower: List[str] = Field(default_factory=list)


class ReportDocument(BaseModel):
    exponent: str
    field: str = "rational"
    components: List[str]
    columns: List[int] = Field(default_factory=list)
    dropped_components: List[int] = Field(default_factory=list)
    shear: str
    isolated_zero: bool
    branches: List[BranchRowModel] = Field(default_factory=list)
    maximizing_branches: List[int] = Field(default_factory=list)
    witness: Optional[WitnessModel] = None
    numeric: Optional[Dict[str, Any]] = None

    @classmethod
    def from_result(
        cls,
        result: LojasiewiczResult,
        field: str = "rational",
        numeric: Optional[EstimateReport] = None,
    ) -> "ReportDocument":
        problem = result.problem
        maximizing = set(result.maximizing_branches)
        rows = [
            BranchRowModel(
                index=row.index,
                e=row.e,
                ord=row.multiplicity,
                residue_degree=row.residue_degree,
                tower=row.branch.tower.describe(),
                mu=[format_value(v) for v in row.mu],
                lambda_=str(lam),
                maximizing=row.index in maximizing,
            )
            for row, lam in zip(result.table.rows, result.lambdas)
        ]
        witness = None
        if result.witness is not None:
            w = result.witness
            witness = WitnessModel(
                branch=w.branch_index,
                degree=w.truncation,
                x=w.format_x(),
                y=w.format_y(),
                tower=w.describe_tower(),
            )
        return cls(
            exponent=result.exponent_str(),
            field=field,
            components=[str(f) for f in problem.original],
            columns=[i + 1 for i in problem.kept],
            dropped_components=[i + 1 for i in problem.dropped],
            shear=format_fraction(problem.shear),
            isolated_zero=result.isolated_zero,
            branches=rows,
            maximizing_branches=list(result.maximizing_branches),
            witness=witness,
            numeric=numeric.to_dict() if numeric is not None else None,
        )

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    def render_table(self) -> str:
        """Human-readable branch table and witness."""
        columns = ", ".join(f"f{j}" for j in self.columns)
        lines = [
            "=" * 60,
            f"BRANCH TABLE (shear x -> x + ({self.shear})*y)",
            "=" * 60,
            f"{'#':>3}  {'e':>3}  {'ord':>3}  {'res':>3}  mu({columns})  lambda",
        ]
        for row in self.branches:
            mark = " *" if row.maximizing else ""
            lines.append(
                f"{row.index:>3}  {row.e:>3}  {row.ord:>3}  {row.residue_degree:>3}  "
                f"({', '.join(row.mu)})  {row.lambda_}{mark}"
            )
            for poly in row.tower:
                lines.append(f"       over {poly} = 0")
        if self.dropped_components:
            lines.append(f"dropped zero components: {self.dropped_components}")
        if self.witness is not None:
            lines.append("")
            lines.append(f"Witness (branch {self.witness.branch}, through t^{self.witness.degree}):")
            lines.append(f"  x = {self.witness.x}")
            lines.append(f"  y = {self.witness.y}")
            for poly in self.witness.tower:
                lines.append(f"  where {poly} = 0")
        lines.append("=" * 60)
        return "\n".join(lines)
