"""
Sampling parameters for the numeric cross-check.

All thresholds live here so the validator itself carries no magic numbers.

RADII:
- Geometric from 1e-1 down to 1e-5. Smaller radii lose digits to
  cancellation inside f_j in double precision.
- Slopes are fitted on the last `fit_window` radii only, where the
  asymptotic regime |F| ~ A|z|^L has taken over.

VERDICTS:
- The lower bound |F(z)| >= slack * A * |z|^(nu * (1 + tolerance)) must hold
  at the exact exponent and fail at sharpness_factor times it.
"""

from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np


def _default_radii() -> Tuple[float, ...]:
    return tuple(float(r) for r in np.geomspace(1e-1, 1e-5, 9))


@dataclass(frozen=True)
class SampleConfig:
    radii: Tuple[float, ...] = _default_radii()
    samples_per_radius: int = 64
    seed: int = 0

    # Slope fit
    fit_window: int = 5
    tolerance: float = 0.05
    residual_threshold: float = 0.02

    # Ambient lower bound
    constant_slack: float = 0.5
    sharpness_factor: float = 1.15

    # Numeric curves: truncation max(2 * largest finite mu, min_truncation)
    min_truncation: int = 20
    curve_residual: float = 1e-8

    def __post_init__(self):
        radii = self.radii
        if len(radii) < 2:
            raise ValueError("at least two radii are needed for a slope")
        if any(not 0 < r < 1 for r in radii):
            raise ValueError("radii must lie in (0, 1)")
        if any(b >= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly decreasing")
        if not 2 <= self.fit_window <= len(radii):
            raise ValueError("fit_window must be between 2 and the number of radii")
        if not 0 < self.tolerance < 1:
            raise ValueError("tolerance must lie in (0, 1)")
        if self.samples_per_radius < 1:
            raise ValueError("samples_per_radius must be positive")
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.sharpness_factor <= 1:
            raise ValueError("sharpness_factor must exceed 1")

    @property
    def fit_radii(self) -> Tuple[float, ...]:
        return self.radii[-self.fit_window:]

    def with_seed(self, seed: int) -> "SampleConfig":
        return replace(self, seed=seed)


DEFAULT_SAMPLE_CONFIG = SampleConfig()
