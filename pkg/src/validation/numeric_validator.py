"""
Loja Numeric Validator
======================

Floating-point cross-check of an exact result. Every branch class is turned
into numeric curves (one per complex embedding of its tower), and |F| is
sampled along them and around them on a geometric sequence of radii.

Checks:
    branch_slope      log|F(phi(t))| ~ slope * log|phi(t)| on each finite branch
    estimate_S        max of the branch slopes: the exponent of F restricted to {f = 0}
    ambient_check     |F(z)| >= slack * A * |z|^(nu (1 + tol)) on ambient and branch samples
    estimate_ambient  slope of the per-radius minimum of |F|

Norms are polycylindric: |z| = max(|x|, |y|), |F| = max_j |f_j|.
All sampling is derived from one seed, split per radius.

Usage:
    from src.validation.numeric_validator import validate

    report = validate(result)
    print(report.summary())
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ..arith.tower import AlgebraicNumber, ExtensionTower
from ..engine.engine_models import LojasiewiczResult, format_value
from ..errors import LojaError, PreconditionError
from ..poly.bipoly import BiPoly
from ..puiseux.branches import BranchClass
from .validation_config import DEFAULT_SAMPLE_CONFIG, SampleConfig

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


class DegenerateFitError(LojaError, ValueError):
    """A log-log fit had no spread in log|z| or met a vanishing |F|."""
    pass


# =============================================================================
# Embeddings
# =============================================================================

def embed_rep(rep: Any, values: Sequence[complex], k: int) -> complex:
    """Value of a height-k representation with generator a_i sent to values[i-1]."""
    if k == 0:
        return rep.to_complex() if rep else 0j
    acc = 0j
    for c in reversed(rep):
        acc = acc * values[k - 1] + embed_rep(c, values, k - 1)
    return acc


def embed(a: AlgebraicNumber, values: Sequence[complex]) -> complex:
    return embed_rep(a.rep, values, a.tower.height)


def tower_embeddings(tower: ExtensionTower) -> List[Tuple[complex, ...]]:
    """All total_degree complex embeddings, found level by level with numpy.roots."""
    embeddings: List[Tuple[complex, ...]] = [()]
    for j, level in enumerate(tower.levels):
        extended = []
        for values in embeddings:
            coeffs = [embed_rep(c, values, j) for c in level.modulus]
            for root in np.roots(coeffs[::-1]):
                extended.append(values + (complex(root),))
        embeddings = extended
    return embeddings


# =============================================================================
# Numeric objects
# =============================================================================

class NumericMapping:
    """Vectorized evaluation of base-field polynomial components."""

    def __init__(self, components: Sequence[BiPoly]):
        self._terms = []
        for f in components:
            items = list(f.items())
            a = np.array([k[0] for k, _ in items], dtype=int)
            b = np.array([k[1] for k, _ in items], dtype=int)
            c = np.array([embed(v, ()) for _, v in items], dtype=complex)
            self._terms.append((a, b, c))

    @property
    def m(self) -> int:
        return len(self._terms)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Array of shape (m, len(x))."""
        x = np.asarray(x, dtype=complex)
        y = np.asarray(y, dtype=complex)
        out = np.zeros((self.m, x.size), dtype=complex)
        for j, (a, b, c) in enumerate(self._terms):
            if c.size:
                out[j] = (c[:, None] * x[None, :] ** a[:, None] * y[None, :] ** b[:, None]).sum(axis=0)
        return out

    def norm(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.m == 0:
            return np.zeros(np.asarray(x).size)
        return np.abs(self.evaluate(x, y)).max(axis=0)


def polycylindric_norm(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.maximum(np.abs(x), np.abs(y))


@dataclass(frozen=True)
class NumericCurve:
    """
    One embedding of a branch class, in the coordinates of the input:
    x(t) = gamma t^e + shear * y(t).
    """
    branch_index: int
    embedding_index: int
    e: int
    gamma: complex
    shear: float
    y_coeffs: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def from_branch(cls, index: int, branch: BranchClass, shear: float, truncation: int) -> List["NumericCurve"]:
        coefficients = branch.extend_to(truncation).coefficients
        curves = []
        for k, values in enumerate(tower_embeddings(branch.tower)):
            curves.append(cls(
                branch_index=index,
                embedding_index=k,
                e=branch.e,
                gamma=embed(branch.gamma, values),
                shear=shear,
                y_coeffs=np.array([embed(c, values) for c in coefficients], dtype=complex),
            ))
        return curves

    def parameters(self, radius: float, phases: np.ndarray) -> np.ndarray:
        """t with |gamma t^e| = radius at the given phases."""
        rho = (radius / abs(self.gamma)) ** (1.0 / self.e)
        return rho * np.exp(1j * phases)

    def sheared_point(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return self.gamma * t ** self.e, P.polyval(t, self.y_coeffs)

    def point(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        xs, y = self.sheared_point(t)
        return xs + self.shear * y, y


# =============================================================================
# Sampling
# =============================================================================

@dataclass
class RadiusSample:
    radius: float
    x: np.ndarray
    y: np.ndarray
    phases: np.ndarray


def draw_samples(cfg: SampleConfig) -> List[RadiusSample]:
    """
    Ambient points with |z| = r and branch phases for every radius.

    One generator per radius, spawned from the configured seed.
    """
    n = cfg.samples_per_radius
    samples = []
    for radius, child in zip(cfg.radii, np.random.SeedSequence(cfg.seed).spawn(len(cfg.radii))):
        rng = np.random.default_rng(child)
        theta_x = rng.uniform(0.0, 2 * math.pi, n)
        theta_y = rng.uniform(0.0, 2 * math.pi, n)
        inner = radius * np.sqrt(rng.random(n))
        on_x = rng.random(n) < 0.5
        x = np.where(on_x, radius, inner) * np.exp(1j * theta_x)
        y = np.where(on_x, inner, radius) * np.exp(1j * theta_y)
        phases = rng.uniform(0.0, 2 * math.pi, n)
        samples.append(RadiusSample(radius, x, y, phases))
    return samples


def fit_samples(cfg: SampleConfig, samples: Optional[List[RadiusSample]] = None) -> List[RadiusSample]:
    """The samples on cfg.fit_radii, where the fits are taken."""
    if samples is None:
        samples = draw_samples(cfg)
    window = set(cfg.fit_radii)
    return [sample for sample in samples if sample.radius in window]


def _branch_logs(curve: NumericCurve, F: NumericMapping, sample: RadiusSample) -> Tuple[np.ndarray, np.ndarray]:
    x, y = curve.point(curve.parameters(sample.radius, sample.phases))
    with np.errstate(divide="ignore"):
        return np.log(polycylindric_norm(x, y)), np.log(F.norm(x, y))


def fit_loglog(log_z: np.ndarray, log_f: np.ndarray) -> Tuple[float, float, float]:
    """(slope, intercept, rmse) of log_f against log_z."""
    if not np.all(np.isfinite(log_f)):
        raise DegenerateFitError("|F| vanishes on a sampled point")
    if log_z.size < 2 or np.ptp(log_z) < 1e-12:
        raise DegenerateFitError("all sampled points have the same norm")
    A = np.column_stack([log_z, np.ones_like(log_z)])
    params, *_ = np.linalg.lstsq(A, log_f, rcond=None)
    slope, intercept = float(params[0]), float(params[1])
    errors = log_f - (slope * log_z + intercept)
    return slope, intercept, float(np.sqrt(np.mean(errors ** 2)))


# =============================================================================
# Checks
# =============================================================================

@dataclass
class BranchSlope:
    branch_index: int
    embedding_index: int
    slope: float
    intercept: float
    residual: float
    poor_fit: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "branch": self.branch_index,
            "embedding": self.embedding_index,
            "slope": round(self.slope, 6),
            "residual": round(self.residual, 6),
            "poor_fit": self.poor_fit,
        }


@dataclass
class AmbientVerdict:
    nu: float
    log_constant: float
    passed: bool
    worst_margin: float
    worst_radius: float
    worst_point: Tuple[complex, complex]
    samples: int

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    def to_dict(self) -> Dict[str, Any]:
        x, y = self.worst_point
        return {
            "nu": round(self.nu, 6),
            "constant": float(np.exp(self.log_constant)),
            "verdict": self.verdict,
            "worst_margin": round(self.worst_margin, 6),
            "worst_radius": self.worst_radius,
            "worst_point": [[x.real, x.imag], [y.real, y.imag]],
            "samples": self.samples,
        }


@dataclass
class AmbientEstimate:
    with_branches: float
    ambient_only: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "with_branches": round(self.with_branches, 6),
            "ambient_only": round(self.ambient_only, 6),
        }


def branch_slope(curve: NumericCurve, F: NumericMapping, cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> BranchSlope:
    """
    Least-squares slope of log|F| against log|z| along the curve, over
    cfg.fit_radii.

    Raises:
        DegenerateFitError: no spread in |z|, or F vanishes along the curve
    """
    logs_z, logs_f = [], []
    for sample in fit_samples(cfg):
        lz, lf = _branch_logs(curve, F, sample)
        logs_z.append(lz)
        logs_f.append(lf)
    slope, intercept, rmse = fit_loglog(np.concatenate(logs_z), np.concatenate(logs_f))
    poor = rmse > cfg.residual_threshold
    if poor:
        logger.warning(
            f"Poor log-log fit on branch {curve.branch_index} (embedding {curve.embedding_index}): "
            f"rmse {rmse:.4f}",
            extra={"stage": "verify", "branch": curve.branch_index},
        )
    return BranchSlope(curve.branch_index, curve.embedding_index, slope, intercept, rmse, poor)


def estimate_S(F: NumericMapping, curves: Sequence[NumericCurve],
               cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG,
               slopes: Optional[Sequence[BranchSlope]] = None) -> float:
    """
    Empirical exponent of F restricted to the zero set: the largest branch slope.
    Slopes already fitted on the same curves can be passed in.
    """
    if not curves:
        raise PreconditionError("estimate_S needs at least one branch with finite exponent")
    if slopes is None:
        slopes = [branch_slope(c, F, cfg) for c in curves]
    return max(s.slope for s in slopes)


def ambient_check(F: NumericMapping, nu: float, curves: Sequence[NumericCurve],
                  cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> AmbientVerdict:
    """
    Test |F(z)| >= slack * A * |z|^(nu (1 + tol)) on every sample.

    log A is the smallest intercept of log|F| - nu log|z| over the branches,
    averaged on the fit window.
    """
    if not curves:
        raise PreconditionError("ambient_check needs at least one branch with finite exponent")
    samples = draw_samples(cfg)

    intercepts = []
    for curve in curves:
        diffs = []
        for sample in fit_samples(cfg, samples):
            lz, lf = _branch_logs(curve, F, sample)
            diffs.append(lf - nu * lz)
        intercepts.append(float(np.mean(np.concatenate(diffs))))
    log_a = min(intercepts)

    power = nu * (1 + cfg.tolerance)
    offset = math.log(cfg.constant_slack) + log_a
    worst_margin, worst_radius, worst_point = math.inf, 0.0, (0j, 0j)
    count = 0
    for sample in samples:
        xs, ys = [sample.x], [sample.y]
        for curve in curves:
            x, y = curve.point(curve.parameters(sample.radius, sample.phases))
            xs.append(x)
            ys.append(y)
        x, y = np.concatenate(xs), np.concatenate(ys)
        with np.errstate(divide="ignore"):
            margin = np.log(F.norm(x, y)) - (offset + power * np.log(polycylindric_norm(x, y)))
        count += margin.size
        k = int(np.argmin(margin))
        if margin[k] < worst_margin:
            worst_margin, worst_radius = float(margin[k]), sample.radius
            worst_point = (complex(x[k]), complex(y[k]))

    return AmbientVerdict(
        nu=nu,
        log_constant=log_a,
        passed=worst_margin >= 0,
        worst_margin=worst_margin,
        worst_radius=worst_radius,
        worst_point=worst_point,
        samples=count,
    )


def estimate_ambient(F: NumericMapping, curves: Sequence[NumericCurve],
                     cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> AmbientEstimate:
    """
    Slopes of log(min |F|) against log r over the fit window, once with the
    on-branch samples included and once over ambient samples alone.
    """
    log_r, with_branches, ambient_only = [], [], []
    for sample in fit_samples(cfg):
        ambient_min = float(F.norm(sample.x, sample.y).min())
        branch_min = ambient_min
        for curve in curves:
            x, y = curve.point(curve.parameters(sample.radius, sample.phases))
            branch_min = min(branch_min, float(F.norm(x, y).min()))
        log_r.append(math.log(sample.radius))
        with np.errstate(divide="ignore"):
            with_branches.append(np.log(branch_min))
            ambient_only.append(np.log(ambient_min))
    log_r_arr = np.array(log_r)
    slope_s, _, _ = fit_loglog(log_r_arr, np.array(with_branches))
    slope_a, _, _ = fit_loglog(log_r_arr, np.array(ambient_only))
    return AmbientEstimate(with_branches=slope_s, ambient_only=slope_a)


def conjugate_residuals(branch: BranchClass, f_red: BiPoly, truncation: int,
                        cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> List[float]:
    """Largest |f_red| along every embedding of a class (sheared coordinates), over all radii."""
    reduced = NumericMapping([f_red])
    samples = draw_samples(cfg)
    out = []
    for curve in NumericCurve.from_branch(0, branch, 0.0, truncation):
        worst = 0.0
        for sample in samples:
            x, y = curve.sheared_point(curve.parameters(sample.radius, sample.phases))
            worst = max(worst, float(reduced.norm(x, y).max()))
        out.append(worst)
    return out


# =============================================================================
# Report
# =============================================================================

@dataclass
class EstimateReport:
    """Outcome of the numeric cross-check of one exact result."""
    seed: int
    exact_exponent: str
    verdict: str
    slopes: List[BranchSlope] = field(default_factory=list)
    excluded_branches: List[int] = field(default_factory=list)
    estimate: Optional[float] = None
    relative_error: Optional[float] = None
    within_tolerance: bool = False
    at_exponent: Optional[AmbientVerdict] = None
    at_sharpness: Optional[AmbientVerdict] = None
    ambient: Optional[AmbientEstimate] = None
    curve_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict != FAIL

    def summary(self) -> str:
        lines = [
            "=" * 60,
            "NUMERIC CROSS-CHECK",
            "=" * 60,
            f"Exact exponent:     {self.exact_exponent}",
            f"Seed:               {self.seed}",
            f"Verdict:            {self.verdict}",
        ]
        if self.verdict == SKIP:
            lines.append("  (infinite exponent: nothing to fit)")
            return "\n".join(lines)
        lines.append(f"Estimate on S:      {self.estimate:.4f} (relative error {self.relative_error:.4f})")
        lines.append(f"Bound at exponent:  {self.at_exponent.verdict}")
        lines.append(f"Bound at sharpness: {self.at_sharpness.verdict} (expected FAIL)")
        lines.append(
            f"Min |F| slopes:     {self.ambient.with_branches:.4f} with branches, "
            f"{self.ambient.ambient_only:.4f} ambient only"
        )
        lines.append(f"Curve residual:     {self.curve_residual:.2e}")
        lines.append("")
        lines.append("Branch slopes:")
        for s in self.slopes:
            flag = " (poor fit)" if s.poor_fit else ""
            lines.append(f"  branch {s.branch_index}.{s.embedding_index}: {s.slope:.4f}{flag}")
        if self.excluded_branches:
            lines.append(f"  excluded (infinite): {self.excluded_branches}")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "seed": self.seed,
            "exact_exponent": self.exact_exponent,
            "verdict": self.verdict,
            "excluded_branches": self.excluded_branches,
            "slopes": [s.to_dict() for s in self.slopes],
        }
        if self.verdict != SKIP:
            out.update({
                "estimate": round(self.estimate, 6),
                "relative_error": round(self.relative_error, 6),
                "within_tolerance": self.within_tolerance,
                "at_exponent": self.at_exponent.to_dict(),
                "at_sharpness": self.at_sharpness.to_dict(),
                "ambient": self.ambient.to_dict(),
                "curve_residual": self.curve_residual,
            })
        return out


def curves_for(result: LojasiewiczResult, cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> List[NumericCurve]:
    """Numeric curves of every branch class with a finite exponent."""
    shear = float(result.shear)
    curves: List[NumericCurve] = []
    for row, lam in zip(result.table.rows, result.lambdas):
        if not lam.is_finite:
            continue
        largest = max(int(v) for v in row.mu if v != math.inf)
        truncation = max(2 * largest, cfg.min_truncation)
        curves.extend(NumericCurve.from_branch(row.index, row.branch, shear, truncation))
    return curves


def validate(result: LojasiewiczResult, cfg: SampleConfig = DEFAULT_SAMPLE_CONFIG) -> EstimateReport:
    """
    Cross-check an exact result: the estimate on S must be within tolerance,
    the lower bound must hold at the exponent and fail at sharpness_factor
    times it.
    """
    exact = format_value(result.exponent)
    excluded = [lam.index for lam in result.lambdas if not lam.is_finite]
    if not result.is_finite:
        return EstimateReport(seed=cfg.seed, exact_exponent=exact, verdict=SKIP, excluded_branches=excluded)

    F = NumericMapping(result.problem.original)
    curves = curves_for(result, cfg)
    slopes = [branch_slope(c, F, cfg) for c in curves]
    estimate = estimate_S(F, curves, cfg, slopes)
    target = float(result.exponent)
    relative = abs(estimate - target) / target
    within = relative <= cfg.tolerance

    at_exponent = ambient_check(F, target, curves, cfg)
    at_sharpness = ambient_check(F, target * cfg.sharpness_factor, curves, cfg)
    ambient = estimate_ambient(F, curves, cfg)

    residual = 0.0
    for row, lam in zip(result.table.rows, result.lambdas):
        if lam.is_finite:
            truncation = max(2 * max(int(v) for v in row.mu if v != math.inf), cfg.min_truncation)
            residual = max([residual] + conjugate_residuals(row.branch, result.problem.reduced, truncation, cfg))
    if residual > cfg.curve_residual:
        logger.warning(
            f"Numeric curves leave f_red residual {residual:.2e}",
            extra={"stage": "verify"},
        )

    passed = within and at_exponent.passed and not at_sharpness.passed
    report = EstimateReport(
        seed=cfg.seed,
        exact_exponent=exact,
        verdict=PASS if passed else FAIL,
        slopes=slopes,
        excluded_branches=excluded,
        estimate=estimate,
        relative_error=relative,
        within_tolerance=within,
        at_exponent=at_exponent,
        at_sharpness=at_sharpness,
        ambient=ambient,
        curve_residual=residual,
    )
    logger.info(
        f"Numeric cross-check {report.verdict}: estimate {estimate:.4f} vs exact {exact}",
        extra={"stage": "verify", "exponent": exact},
    )
    return report
