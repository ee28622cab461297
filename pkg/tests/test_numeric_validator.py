"""
Tests for the numeric cross-check.

These tests check:
1. Sampling is reproducible and lies on the polycylinder boundary
2. Tower embeddings and numeric curves follow the exact branches
3. Branch slopes recover the exact lambdas
4. The lower bound holds at the exponent and fails above it
5. Infinite exponents are skipped

Usage:
    pytest tests/test_numeric_validator.py -v
"""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.arith.tower import ExtensionTower
from src.engine import EngineConfig, ExponentEngine, MappingInput
from src.poly import BiPoly
from src.puiseux import expand_branches
from src.validation import (
    DEFAULT_SAMPLE_CONFIG,
    DegenerateFitError,
    NumericMapping,
    SampleConfig,
    ambient_check,
    branch_slope,
    conjugate_residuals,
    estimate_ambient,
    estimate_S,
    tower_embeddings,
    validate,
)
from src.validation.numeric_validator import (
    FAIL,
    PASS,
    SKIP,
    curves_for,
    draw_samples,
    fit_samples,
    fit_loglog,
    polycylindric_norm,
)

X, Y = BiPoly.x(), BiPoly.y()
CUSP = Y**2 - X**3
NODE = Y**2 - X**2 - X**3


def exact(*components):
    return ExponentEngine(EngineConfig()).exponent(MappingInput(components))


# =============================================================================
# CONFIGURATION AND SAMPLING
# =============================================================================

class TestSampleConfig:
    """Validation of sampling parameters."""

    def test_defaults(self):
        cfg = DEFAULT_SAMPLE_CONFIG
        assert len(cfg.radii) == 9
        assert cfg.radii[0] == pytest.approx(1e-1)
        assert cfg.radii[-1] == pytest.approx(1e-5)
        assert len(cfg.fit_radii) == cfg.fit_window

    def test_with_seed(self):
        cfg = DEFAULT_SAMPLE_CONFIG.with_seed(42)
        assert cfg.seed == 42
        assert cfg.radii == DEFAULT_SAMPLE_CONFIG.radii

    @pytest.mark.parametrize("changes", [
        {"radii": (0.1,)},
        {"radii": (0.01, 0.1)},
        {"radii": (1.5, 0.1)},
        {"fit_window": 1},
        {"fit_window": 10},
        {"tolerance": 0.0},
        {"sharpness_factor": 1.0},
        {"seed": -1},
    ])
    def test_invalid_values(self, changes):
        with pytest.raises(ValueError):
            SampleConfig(**changes)


class TestSampling:
    """Seeded ambient samples."""

    def test_points_on_polycylinder_boundary(self):
        for sample in draw_samples(DEFAULT_SAMPLE_CONFIG):
            norms = polycylindric_norm(sample.x, sample.y)
            assert np.allclose(norms, sample.radius)

    def test_fit_samples_follow_fit_radii(self):
        cfg = SampleConfig(seed=2)
        window = fit_samples(cfg)
        assert tuple(s.radius for s in window) == cfg.fit_radii
        assert np.array_equal(window[0].x, draw_samples(cfg)[-cfg.fit_window].x)

    def test_reproducible(self):
        first = draw_samples(SampleConfig(seed=5))
        second = draw_samples(SampleConfig(seed=5))
        for a, b in zip(first, second):
            assert np.array_equal(a.x, b.x)
            assert np.array_equal(a.phases, b.phases)

    def test_seed_changes_samples(self):
        a = draw_samples(SampleConfig(seed=1))[0]
        b = draw_samples(SampleConfig(seed=2))[0]
        assert not np.array_equal(a.x, b.x)

    def test_fit_loglog_exact_line(self):
        log_z = np.log(np.array([1e-1, 1e-2, 1e-3]))
        slope, intercept, rmse = fit_loglog(log_z, 2.0 * log_z + 0.5)
        assert slope == pytest.approx(2.0)
        assert intercept == pytest.approx(0.5)
        assert rmse < 1e-9

    def test_fit_loglog_degenerate(self):
        with pytest.raises(DegenerateFitError):
            fit_loglog(np.zeros(4), np.ones(4))
        with pytest.raises(DegenerateFitError):
            fit_loglog(np.array([-1.0, -2.0]), np.array([-np.inf, -1.0]))


# =============================================================================
# NUMERIC OBJECTS
# =============================================================================

class TestNumericObjects:
    """Embeddings, mappings and curves."""

    def test_embeddings_of_sqrt2(self):
        tower, _ = ExtensionTower.base().adjoin_root([-2, 0, 1])
        values = sorted(v[0].real for v in tower_embeddings(tower))
        assert values == pytest.approx([-math.sqrt(2), math.sqrt(2)])

    def test_embeddings_of_two_levels(self):
        t1, _ = ExtensionTower.base().adjoin_root([-2, 0, 1])
        t2, _ = t1.adjoin_root([-3, 0, 1])
        embeddings = tower_embeddings(t2)
        assert len(embeddings) == 4
        products = sorted((a * b).real for a, b in embeddings)
        assert products == pytest.approx([-math.sqrt(6)] * 2 + [math.sqrt(6)] * 2)

    def test_base_tower_has_one_embedding(self):
        assert tower_embeddings(ExtensionTower.base()) == [()]

    def test_mapping_norm(self):
        F = NumericMapping([X, Y])
        x = np.array([0.1 + 0.2j, -0.3])
        y = np.array([0.05, 0.4j])
        assert np.allclose(F.norm(x, y), polycylindric_norm(x, y))
        assert F.m == 2

    def test_curves_per_embedding(self):
        result = exact(X**2 + Y**2, X * Y)
        curves = curves_for(result)
        residues = sum(row.residue_degree for row in result.table.rows)
        assert len(curves) == residues

    def test_curves_lie_on_the_reduced_curve(self):
        (branch,) = [b for b in expand_branches(NODE) if b.extend_to(1).coefficient(1) == 1]
        residuals = conjugate_residuals(branch, NODE, 20)
        assert len(residuals) == 1
        assert residuals[0] < 1e-8


# =============================================================================
# SLOPES AND BOUNDS
# =============================================================================

class TestBranchSlopes:
    """Slopes along branches match the exact lambdas."""

    def test_identity_slopes(self):
        result = exact(X, Y)
        F = NumericMapping(result.problem.original)
        for curve in curves_for(result):
            assert branch_slope(curve, F).slope == pytest.approx(1.0, abs=0.01)

    def test_cusp_slopes(self):
        """Branch slopes 7/2 (cusp), 2 (x = 0) and 3 (y = 0)."""
        result = exact(CUSP, X**2 * Y)
        F = NumericMapping(result.problem.original)
        curves = curves_for(result)
        slopes = sorted(branch_slope(c, F).slope for c in curves)
        assert slopes == pytest.approx([2.0, 3.0, 3.5], abs=0.05)
        assert estimate_S(F, curves) == pytest.approx(3.5, rel=DEFAULT_SAMPLE_CONFIG.tolerance)
        fitted = [branch_slope(c, F) for c in curves]
        assert estimate_S(F, curves, slopes=fitted) == max(s.slope for s in fitted)

    def test_slopes_match_lambdas(self):
        result = exact(NODE, X)
        F = NumericMapping(result.problem.original)
        lambdas = {lam.index: float(lam.value) for lam in result.lambdas}
        for curve in curves_for(result):
            fit = branch_slope(curve, F)
            assert fit.slope == pytest.approx(lambdas[curve.branch_index], rel=0.05)
            assert not fit.poor_fit


class TestAmbientCheck:
    """The lower bound at, and above, the exponent."""

    @pytest.mark.parametrize("components", [
        (X, Y),
        (CUSP, X**2 * Y),
        (X**2 + Y**2, X * Y),
    ])
    def test_holds_at_exponent(self, components):
        result = exact(*components)
        F = NumericMapping(result.problem.original)
        verdict = ambient_check(F, float(result.exponent), curves_for(result))
        assert verdict.passed
        assert verdict.verdict == PASS
        assert verdict.samples > 0

    @pytest.mark.parametrize("components", [
        (X, Y),
        (CUSP, X**2 * Y),
        (X**2 + Y**2, X * Y),
    ])
    def test_fails_above_exponent(self, components):
        result = exact(*components)
        F = NumericMapping(result.problem.original)
        curves = curves_for(result)
        assert not ambient_check(F, float(result.exponent) + 0.5, curves).passed
        assert not ambient_check(F, 1.15 * float(result.exponent), curves).passed

    def test_estimate_ambient_for_identity(self):
        result = exact(X, Y)
        F = NumericMapping(result.problem.original)
        estimate = estimate_ambient(F, curves_for(result))
        assert estimate.ambient_only == pytest.approx(1.0, abs=1e-6)
        assert estimate.with_branches == pytest.approx(1.0, abs=0.05)

    def test_needs_curves(self):
        with pytest.raises(ValueError):
            ambient_check(NumericMapping([X, Y]), 1.0, [])


# =============================================================================
# FULL VALIDATION
# =============================================================================

class TestValidate:
    """End-to-end cross-check of exact results."""

    @pytest.mark.parametrize("components", [
        (X, Y),
        (X**2, Y**3),
        (CUSP, X**2 * Y),
        (NODE, X),
        (X**2 + Y**2, X * Y),
    ])
    def test_pass(self, components):
        report = validate(exact(*components))
        assert report.verdict == PASS
        assert report.passed
        assert report.within_tolerance
        assert report.at_exponent.verdict == PASS
        assert report.at_sharpness.verdict == FAIL
        assert report.curve_residual < DEFAULT_SAMPLE_CONFIG.curve_residual

    def test_infinite_exponent_is_skipped(self):
        report = validate(exact(X * Y, X**2))
        assert report.verdict == SKIP
        assert report.passed
        assert report.excluded_branches
        assert "SKIP" in report.summary()
        assert "estimate" not in report.to_dict()

    def test_report_serialization(self):
        report = validate(exact(CUSP, X**2 * Y), SampleConfig(seed=3))
        data = report.to_dict()
        assert data["seed"] == 3
        assert data["exact_exponent"] == "7/2"
        assert data["verdict"] == PASS
        assert data["at_sharpness"]["verdict"] == FAIL
        assert len(data["slopes"]) == len(report.slopes)
        assert "Branch slopes:" in report.summary()

    def test_seed_does_not_change_verdict(self):
        result = exact(CUSP, X**2 * Y)
        verdicts = {validate(result, SampleConfig(seed=s)).verdict for s in (0, 1, 2)}
        assert verdicts == {PASS}
