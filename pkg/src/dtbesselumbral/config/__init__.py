"""Configuration models for dtBesselUmbral."""

from .models import AppConfig, NumericsConfig, OutputConfig, QuadratureConfig

__all__ = ["AppConfig", "NumericsConfig", "OutputConfig", "QuadratureConfig"]
