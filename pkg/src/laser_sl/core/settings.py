"""Process-wide settings for laser-sl."""

from __future__ import annotations

import logging
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from ``LASER_SL_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="LASER_SL_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Worker threads for embarrassingly parallel batches (Γ sets, λ sweeps)
    threads: int = 1

    # Hard cap on the Hilbert-space dimension d
    dimension_cap: int = 4096

    # Largest d² for dense eigen/SVD work on superoperators
    dense_cap: int = 4096

    # Quadrature subdivision budget
    quad_limit: int = 500

    # Γ extrapolation residual above which a warning flag is set
    gamma_tolerance: float = 1e-6

    log_level: str = "WARNING"

    @field_validator("threads", "dimension_cap", "dense_cap", "quad_limit")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Validate that counts and caps are positive."""
        if v < 1:
            raise ValueError("must be >= 1")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate that the log level names a logging level."""
        name = v.upper()
        if not isinstance(logging.getLevelName(name), int):
            raise ValueError(f"unknown log level {v!r}")
        return name


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Settings are loaded from environment variables by pydantic-settings.
    """
    return Settings()
