"""Pydantic configuration models for dtBesselUmbral.

Configuration is assembled from command-line flags at startup:
    --tol      - convergence / residual tolerance (NumericsConfig.tol)
    --trunc    - default truncation order R (NumericsConfig.trunc)
    --format   - output format, json or csv (OutputConfig.format)
    --workers  - thread count for verification suites (AppConfig.workers)
    --digits   - significant digits for real values (OutputConfig.significant_digits)
    --log-level - logging level (AppConfig.log_level)
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

MAX_TRUNCATION_ORDER = 64
MAX_SERIES_TERMS = 500


class NumericsConfig(BaseModel):
    """Tolerances and budgets for series evaluation."""

    tol: float = Field(default=1e-6, description="Convergence and residual tolerance")
    series_tol: float = Field(default=1e-15, description="Relative tolerance for adaptive series")
    max_terms: int = Field(default=400, description="Term budget for adaptive series")
    trunc: int = Field(default=30, description="Default truncation order R")

    @field_validator("tol", "series_tol")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Tolerances must lie strictly between 0 and 1."""
        if not 0.0 < v < 1.0:
            raise ValueError("tolerance must satisfy 0 < tol < 1")
        return v

    @field_validator("max_terms")
    @classmethod
    def validate_max_terms(cls, v: int) -> int:
        """Term budget is bounded by the float range of the binomial weights."""
        if not 1 <= v <= MAX_SERIES_TERMS:
            raise ValueError(f"max_terms must be between 1 and {MAX_SERIES_TERMS}")
        return v

    @field_validator("trunc")
    @classmethod
    def validate_trunc(cls, v: int) -> int:
        """Truncation order stays within desk scale."""
        if not 0 <= v <= MAX_TRUNCATION_ORDER:
            raise ValueError(f"trunc must be between 0 and {MAX_TRUNCATION_ORDER}")
        return v


class QuadratureConfig(BaseModel):
    """Settings for the oscillatory quadrature oracle."""

    interval_budget: int = Field(default=200, description="Maximum number of sub-intervals")
    interval_epsrel: float = Field(default=1e-12, description="Relative tolerance per sub-interval")
    tol_ratio: float = Field(
        default=0.1, description="Quadrature tolerance as a fraction of the residual tolerance"
    )

    @field_validator("interval_budget")
    @classmethod
    def validate_budget(cls, v: int) -> int:
        """At least a handful of intervals is needed for extrapolation."""
        if v < 8:
            raise ValueError("interval_budget must be at least 8")
        return v

    @field_validator("interval_epsrel", "tol_ratio")
    @classmethod
    def validate_fraction(cls, v: float) -> float:
        """Ratios must lie in (0, 1]."""
        if not 0.0 < v <= 1.0:
            raise ValueError("value must satisfy 0 < value <= 1")
        return v


class OutputConfig(BaseModel):
    """Serialisation settings for command output."""

    format: str = Field(default="json", description="Output format")
    significant_digits: int = Field(default=17, description="Digits for real values")

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Format is normalised to lowercase and must be json or csv."""
        v = v.strip().lower()
        if v not in {"json", "csv"}:
            raise ValueError("format must be one of {'json', 'csv'}")
        return v

    @field_validator("significant_digits")
    @classmethod
    def validate_digits(cls, v: int) -> int:
        """Between 1 and 17 digits; 17 round-trips every double."""
        if not 1 <= v <= 17:
            raise ValueError("significant_digits must be between 1 and 17")
        return v


class AppConfig(BaseModel):
    """Root application configuration."""

    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    log_level: str = Field(default="INFO", description="Logging level")
    workers: int = Field(default=1, description="Threads used by verification suites")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is a recognised value."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v = v.strip().upper()
        if v not in valid_levels:
            raise ValueError(f"log_level must be one of {valid_levels}")
        return v

    @field_validator("workers")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        """At least one worker thread."""
        if v < 1:
            raise ValueError("workers must be at least 1")
        return v
