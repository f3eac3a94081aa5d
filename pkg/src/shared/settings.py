"""Runtime configuration."""

import os
from fractions import Fraction
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings, overridable through MISKIT_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="MISKIT_",
        env_file=".env",
        extra="ignore",
    )

    log_level: str = "INFO"
    log_json: bool = False

    max_vertices: int = Field(256, ge=128)
    oracle_max_vertices: int = Field(25, ge=1)
    labeled_sweep_max_vertices: int = Field(7, ge=1)

    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    chunk_size: int = Field(4096, ge=1)

    h_precision: str = "1e-8"
    precision_tightenings: int = Field(2, ge=0)

    construction_enumeration_limit: int = Field(10000, ge=0)

    @property
    def h_precision_value(self) -> Fraction:
        """Starting precision for h-bound enclosures as an exact rational."""
        return Fraction(self.h_precision)


@lru_cache
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
