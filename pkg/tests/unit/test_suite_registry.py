"""Tests for SuiteRegistry, SuiteBuilder and the report models."""

from __future__ import annotations

import threading
import time
from fractions import Fraction

import pytest

from dtbesselumbral.exceptions import DivergenceError, SuiteNotFoundError
from dtbesselumbral.suites.base import BaseSuite, SuiteBuilder, relative_residual
from dtbesselumbral.suites.registry import ALL_SUITES, SuiteRegistry
from tests.conftest import EXPECTED_SUITES


class _StubSuite(BaseSuite):
    """Suite with a configurable number of passing and failing cases."""

    def __init__(self, name: str, passing: int = 1, failing: int = 0, delay: float = 0.0) -> None:
        self.name = name
        self.description = f"stub {name}"
        self._passing = passing
        self._failing = failing
        self._delay = delay
        self.thread_names: list[str] = []

    def build(self, builder: SuiteBuilder) -> None:
        self.thread_names.append(threading.current_thread().name)
        time.sleep(self._delay)
        for i in range(self._passing):
            builder.exact(f"{self.name} pass {i}", i, i)
        for i in range(self._failing):
            builder.close(f"{self.name} fail {i}", 1.0, 2.0, 1e-12)


def _stub_registry(*suites: BaseSuite) -> SuiteRegistry:
    registry = SuiteRegistry()
    for suite in suites:
        registry.register(suite)
    return registry


class TestSuiteBuilder:
    """Tests for SuiteBuilder case recording."""

    def test_exact_fraction_formatting(self) -> None:
        """Exact cases store fraction strings and residual 0."""
        builder = SuiteBuilder("demo")
        assert builder.exact("l_2(4,1)", Fraction(33, 2), Fraction(33, 2))
        case = builder.report().details[0]
        assert case.expected == "33/2"
        assert case.residual == 0.0

    def test_exact_mismatch_residual(self) -> None:
        """A failed exact case carries its relative residual."""
        builder = SuiteBuilder("demo")
        assert not builder.exact("off by one", Fraction(4), Fraction(3))
        assert builder.report().details[0].residual == pytest.approx(0.25)

    def test_exact_mismatch_non_numeric(self) -> None:
        """Non-numeric mismatches fall back to residual 1."""
        builder = SuiteBuilder("demo")
        builder.exact("lists", [1, 2], [1, 3])
        assert builder.report().details[0].residual == 1.0

    def test_close_tracks_tolerance(self) -> None:
        """The report tolerance is the largest tolerance used."""
        builder = SuiteBuilder("demo")
        builder.close("a", 1.0, 1.0 + 1e-14, 1e-12)
        builder.close("b", 2.0, 2.0, 1e-5)
        report = builder.report()
        assert report.tolerance == 1e-5
        assert report.failures == 0
        assert report.passed

    def test_raises_passes_on_expected_exception(self) -> None:
        """raises() records the exception type name."""

        def diverge() -> None:
            raise DivergenceError("diverges", rho=1.0)

        builder = SuiteBuilder("demo")
        assert builder.raises("divergent", DivergenceError, diverge)
        assert builder.report().details[0].got == "DivergenceError"

    def test_raises_fails_when_nothing_raised(self) -> None:
        """A returned value is a failed case."""
        builder = SuiteBuilder("demo")
        assert not builder.raises("silent", DivergenceError, abs, -2)
        report = builder.report()
        assert report.failures == 1
        assert report.details[0].got == "2"

    def test_guard_records_failure(self) -> None:
        """An exception inside guard() becomes a failed case."""
        builder = SuiteBuilder("demo")
        with builder.guard("quadrature"):
            raise ValueError("boom")
        report = builder.report()
        assert report.failures == 1
        assert "ValueError: boom" in report.details[0].got

    def test_empty_report(self) -> None:
        """No cases: zero residual, passed."""
        report = SuiteBuilder("demo").report()
        assert report.cases == 0
        assert report.worst_residual == 0.0
        assert report.passed

    def test_relative_residual_exact(self) -> None:
        """Exact residuals are computed before conversion."""
        assert relative_residual(Fraction(1, 3), Fraction(1, 3)) == 0.0
        assert relative_residual(10.0, 11.0) == pytest.approx(0.1)


class TestSuiteRegistry:
    """Tests for SuiteRegistry discovery and execution."""

    def test_discovers_all_suites_in_order(self, suite_registry: SuiteRegistry) -> None:
        """Discovery registers every suite in reporting order."""
        assert suite_registry.names == EXPECTED_SUITES
        assert suite_registry.suite_count == len(EXPECTED_SUITES)

    def test_get_suite(self, suite_registry: SuiteRegistry) -> None:
        """Lookup by name; unknown gives None."""
        assert suite_registry.get_suite("lpoly") is not None
        assert suite_registry.get_suite("nonexistent") is None

    def test_run_single(self) -> None:
        """Running one suite gives one report."""
        registry = _stub_registry(_StubSuite("a", passing=3), _StubSuite("b"))
        reports = registry.run("a")
        assert [r.suite for r in reports] == ["a"]
        assert reports[0].cases == 3

    def test_run_all_in_registration_order(self) -> None:
        """'all' runs every suite in registration order."""
        registry = _stub_registry(_StubSuite("a"), _StubSuite("b", failing=2))
        reports = registry.run(ALL_SUITES)
        assert [r.suite for r in reports] == ["a", "b"]
        assert reports[1].failures == 2

    def test_unknown_suite_raises(self) -> None:
        """Unknown names list the available suites."""
        registry = _stub_registry(_StubSuite("a"))
        with pytest.raises(SuiteNotFoundError, match="available: a"):
            registry.run("nonexistent")

    def test_threaded_run_keeps_order(self) -> None:
        """With workers the slowest suite first still reports first."""
        slow = _StubSuite("slow", delay=0.05)
        fast = _StubSuite("fast")
        reports = _stub_registry(slow, fast).run(ALL_SUITES, workers=2)
        assert [r.suite for r in reports] == ["slow", "fast"]
        assert slow.thread_names[0] != threading.current_thread().name

    def test_duplicate_name_overwrites(self) -> None:
        """Re-registering a name replaces the suite."""
        registry = _stub_registry(_StubSuite("a", passing=1), _StubSuite("a", passing=2))
        assert registry.suite_count == 1
        assert registry.run("a")[0].cases == 2
