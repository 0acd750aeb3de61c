"""Shared pytest fixtures for dtBesselUmbral tests."""

from __future__ import annotations

from fractions import Fraction

import pytest

from dtbesselumbral.cli.registry import CommandRegistry
from dtbesselumbral.config.models import AppConfig
from dtbesselumbral.products import OrderSpec, ScaleSpec
from dtbesselumbral.suites.registry import SuiteRegistry

# Central constants: update here when commands or suites are added/removed.
EXPECTED_COMMAND_COUNT = 5
EXPECTED_SUITES = ["lpoly", "besselfam", "products", "integrals"]


@pytest.fixture
def sample_config() -> AppConfig:
    """Default AppConfig with debug logging."""
    return AppConfig(log_level="DEBUG")


@pytest.fixture
def command_registry(sample_config: AppConfig) -> CommandRegistry:
    """CommandRegistry with every command registered."""
    registry = CommandRegistry(sample_config)
    registry.discover_and_register()
    return registry


@pytest.fixture
def suite_registry() -> SuiteRegistry:
    """SuiteRegistry with every suite registered."""
    registry = SuiteRegistry()
    registry.discover_and_register()
    return registry


@pytest.fixture
def j0_squared() -> tuple[OrderSpec, ScaleSpec]:
    """Orders and scales of J_0(x)^2."""
    return OrderSpec.zeros(2), ScaleSpec.from_scales([1, 1])


@pytest.fixture
def skew_pair() -> ScaleSpec:
    """Scales of J_0(x) J_0(x/2)."""
    return ScaleSpec.from_scales([Fraction(1), Fraction(1, 2)])
