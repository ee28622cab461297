"""
Loja Engine Configuration
=========================

Engine settings read from environment variables, with an optional .env file
at the project root.

Environment Variables:
    LOJA_MAX_TOWER_DEGREE: Guard on the total degree of extension towers (default: 256)
    LOJA_WITNESS_DEGREE: t-degree of the reported witness parametrization (default: 12)
    LOJA_MU_START_PRECISION: First truncation of the valuation doubling schedule (default: 8)
    LOJA_MAX_EXPANSION_DEPTH: Nested Puiseux steps before input is declared non-squarefree (default: 64)
    LOJA_WORKERS: Thread workers for intersection table rows (default: 1)
    LOJA_RANDOM_SHEAR: Use a seeded random shear instead of 0, 1, -1, 2, ... (default: false)
    LOJA_SEED: Seed for the random shear mode (default: 0)
"""

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

env_path = Path(__file__).parent.parent.parent / ".env"
if env_path.exists():
    load_dotenv(env_path)


def get_env(key: str, default: Optional[str] = None) -> Optional[str]:
    return os.getenv(key, default)


def get_env_int(key: str, default: int) -> int:
    """Get environment variable as integer."""
    value = os.getenv(key)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable '{key}' must be an integer, got: {value}")


def get_env_bool(key: str, default: bool) -> bool:
    """Get environment variable as boolean."""
    value = os.getenv(key)
    if value is None:
        return default
    return value.lower() in ("true", "1", "yes", "on")


@dataclass(frozen=True)
class EngineConfig:
    """Exact engine configuration."""

    max_tower_degree: int = field(default_factory=lambda: get_env_int("LOJA_MAX_TOWER_DEGREE", 256))
    witness_degree: int = field(default_factory=lambda: get_env_int("LOJA_WITNESS_DEGREE", 12))
    mu_start_precision: int = field(default_factory=lambda: get_env_int("LOJA_MU_START_PRECISION", 8))
    max_expansion_depth: int = field(default_factory=lambda: get_env_int("LOJA_MAX_EXPANSION_DEPTH", 64))
    workers: int = field(default_factory=lambda: get_env_int("LOJA_WORKERS", 1))

    # Shear selection: an explicit override wins over the random mode
    shear: Optional[Fraction] = None
    random_shear: bool = field(default_factory=lambda: get_env_bool("LOJA_RANDOM_SHEAR", False))
    seed: int = field(default_factory=lambda: get_env_int("LOJA_SEED", 0))

    def __post_init__(self):
        if self.max_tower_degree < 1:
            raise ValueError("max_tower_degree must be positive")
        if self.witness_degree < 0:
            raise ValueError("witness_degree cannot be negative")
        if self.mu_start_precision < 1:
            raise ValueError("mu_start_precision must be positive")
        if self.max_expansion_depth < 1:
            raise ValueError("max_expansion_depth must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def with_overrides(self, **changes) -> "EngineConfig":
        """Copy with the given fields replaced; None values are ignored."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


_config: Optional[EngineConfig] = None


def get_engine_config() -> EngineConfig:
    """Process-wide configuration built from the environment on first use."""
    global _config
    if _config is None:
        _config = EngineConfig()
    return _config
