"""
Unit tests for the exact arithmetic layer.

These tests check:
1. GaussianRational field laws and canonical formatting
2. Tower construction with adjoin_root
3. Dynamic evaluation: zero divisors raise TowerSplitError
4. Forked towers stay consistent with the original computation

Usage:
    pytest tests/test_exact_arith.py -v
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.arith.numbers import GaussianRational, format_fraction, format_gaussian
from src.arith.tower import (
    ExtensionTower,
    TowerDegreeExceededError,
    TowerMismatchError,
    TowerSplitError,
    certify_nonzero,
    try_invert,
)
from src.errors import PreconditionError


I = GaussianRational(0, 1)


# =============================================================================
# BASE FIELD
# =============================================================================

class TestGaussianRational:
    """Arithmetic in Q(i)."""

    def test_i_squared_is_minus_one(self):
        """i * i == -1."""
        assert I * I == -1

    def test_fractions_stay_reduced(self):
        """Parts are reduced fractions."""
        z = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
        assert z.re == Fraction(1, 2)
        assert z.im == Fraction(-3, 4)

    def test_inverse(self):
        """(3 + 4i) * (3 + 4i)^-1 == 1."""
        z = GaussianRational(3, 4)
        inv = z.inverse()
        assert inv == GaussianRational(Fraction(3, 25), Fraction(-4, 25))
        assert z * inv == 1

    def test_norm_and_conjugate(self):
        """z * conj(z) == |z|^2."""
        z = GaussianRational(2, -5)
        assert z * z.conjugate() == z.norm
        assert z.norm == 29

    def test_mixed_operands(self):
        """ints and Fractions coerce into Q(i)."""
        z = GaussianRational(1, 1)
        assert z + 1 == GaussianRational(2, 1)
        assert 1 - z == GaussianRational(0, -1)
        assert z * Fraction(1, 2) == GaussianRational(Fraction(1, 2), Fraction(1, 2))

    def test_zero_has_no_inverse(self):
        """0^-1 raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            GaussianRational(0).inverse()

    def test_to_complex(self):
        """Conversion to a Python complex."""
        assert GaussianRational(Fraction(1, 2), -2).to_complex() == complex(0.5, -2.0)


class TestFormatting:
    """Canonical textual forms."""

    def test_format_fraction(self):
        assert format_fraction(Fraction(7, 2)) == "7/2"
        assert format_fraction(Fraction(-3)) == "-3"
        assert format_fraction(Fraction(0)) == "0"

    def test_format_gaussian(self):
        assert format_gaussian(GaussianRational(2, 3)) == "2+3*i"
        assert format_gaussian(GaussianRational(0, -1)) == "-i"
        assert format_gaussian(GaussianRational(0, Fraction(1, 2))) == "(1/2)*i"
        assert format_gaussian(GaussianRational(Fraction(3, 2))) == "3/2"
        assert format_gaussian(GaussianRational(1, -2)) == "1-2*i"


# =============================================================================
# TOWERS
# =============================================================================

class TestAdjoinRoot:
    """Building towers one level at a time."""

    def setup_method(self):
        self.base = ExtensionTower.base()

    def test_sqrt2(self):
        """a1 = sqrt(2): a1^2 == 2 and a1 != 0."""
        tower, a1 = self.base.adjoin_root([-2, 0, 1])
        assert tower.height == 1
        assert tower.degrees == (2,)
        assert a1 * a1 == 2
        assert certify_nonzero(a1)
        assert tower.describe() == ["a1^2 - 2"]

    def test_linear_factor_adds_no_level(self):
        """A degree-1 squarefree part returns the root in the same tower."""
        tower, root = self.base.adjoin_root([-3, 2])
        assert tower is self.base
        assert root == Fraction(3, 2)

    def test_squarefree_part_is_used(self):
        """(z^2 - 2)^2 adjoins a level of degree 2."""
        tower, a1 = self.base.adjoin_root([4, 0, -4, 0, 1])
        assert tower.degrees == (2,)
        assert a1 ** 2 == 2

    def test_constant_polynomial_rejected(self):
        with pytest.raises(PreconditionError):
            self.base.adjoin_root([5])

    def test_two_levels(self):
        """Q(sqrt 2)(sqrt 3): (a1*a2)^2 == 6."""
        t1, a1 = self.base.adjoin_root([-2, 0, 1])
        t2, a2 = t1.adjoin_root([-3, 0, 1])
        assert t2.degrees == (2, 2)
        assert t2.total_degree == 4
        assert (a1 * a2) ** 2 == 6
        # a1 from the prefix tower lifts automatically
        assert (a2 + a1) * (a2 - a1) == 1

    def test_inverse_in_extension(self):
        """(1 + a1)^-1 == a1 - 1 when a1^2 = 2."""
        tower, a1 = self.base.adjoin_root([-2, 0, 1])
        assert (1 + a1).inverse() == a1 - 1

    def test_degree_guard(self):
        """Exceeding max_degree raises TowerDegreeExceededError."""
        small = ExtensionTower.base(max_degree=2)
        t1, _ = small.adjoin_root([-2, 0, 1])
        with pytest.raises(TowerDegreeExceededError):
            t1.adjoin_root([-3, 0, 1])

    def test_unrelated_towers_do_not_mix(self):
        t1, a = self.base.adjoin_root([-2, 0, 1])
        t2, b = self.base.adjoin_root([-3, 0, 1])
        with pytest.raises(TowerMismatchError):
            a + b

    def test_formatting(self):
        tower, a1 = self.base.adjoin_root([-2, 0, 1])
        assert str(2 * a1 - 1) == "2*a1 - 1"
        assert str(tower.element(Fraction(1, 3))) == "1/3"


# =============================================================================
# DYNAMIC EVALUATION
# =============================================================================

class TestZeroDivisors:
    """Reducible minimal polynomials surface as TowerSplitError."""

    def setup_method(self):
        base = ExtensionTower.base()
        self.t1, self.a1 = base.adjoin_root([-2, 0, 1])
        # z^2 - 2 factors over Q(a1), so a2 - a1 is a zero divisor
        self.t2, self.a2 = self.t1.adjoin_root([-2, 0, 1])

    def test_inverse_raises_split(self):
        """Inverting a2 - a1 exposes the factorization."""
        with pytest.raises(TowerSplitError) as info:
            (self.a2 - self.a1).inverse()
        event = info.value.event
        assert event.level == 2
        assert event.degrees == (1, 1)

    def test_certify_nonzero_raises_on_zero_divisor(self):
        with pytest.raises(TowerSplitError):
            certify_nonzero(self.a2 - self.a1)

    def test_certify_nonzero_on_zero_and_units(self):
        assert certify_nonzero(self.t2.zero()) is False
        assert certify_nonzero(self.a2) is True

    def test_try_invert_returns_event(self):
        outcome = try_invert(self.a2 + self.a1)
        assert outcome.level == 2

    def test_fork_consistency(self):
        """On each fork the zero divisor becomes zero or a unit."""
        with pytest.raises(TowerSplitError) as info:
            (self.a2 - self.a1).inverse()
        projections = self.t2.fork(info.value.event)
        assert len(projections) == 2

        images = [proj.project(self.a2 - self.a1) for proj in projections]
        assert images[0].is_zero()
        assert certify_nonzero(images[1])
        assert images[1] == -2 * projections[1].project(self.a1)

        # relations that held before the split still hold after it
        for proj in projections:
            a1, a2 = proj.project(self.a1), proj.project(self.a2)
            assert a2 * a2 == 2
            assert a1 * a2 * a1 * a2 == 4

    def test_fork_rejects_foreign_event(self):
        with pytest.raises(TowerSplitError) as info:
            (self.a2 - self.a1).inverse()
        with pytest.raises(TowerMismatchError):
            self.t1.fork(info.value.event)
