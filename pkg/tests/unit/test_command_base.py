"""Tests for BaseCommand, CommandResult and exception mapping."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

import pytest

from dtbesselumbral.cli.base import (
    EXIT_BAD_ARGUMENTS,
    EXIT_DIVERGENT,
    EXIT_FAILURE,
    EXIT_OK,
    BaseCommand,
    CommandResult,
)
from dtbesselumbral.config.models import AppConfig, OutputConfig
from dtbesselumbral.exceptions import (
    BesselUmbralError,
    DeskScaleError,
    DivergenceError,
    DomainError,
    InputValidationError,
    NonConvergenceError,
    SuiteNotFoundError,
)


class _StubCommand(BaseCommand):
    """Command that returns a fixed payload or raises a fixed error."""

    name = "stub"
    description = "Stub command for tests"

    def __init__(self, error: Exception | None = None, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        self._error = error

    def execute(self, params: dict[str, Any]) -> CommandResult:
        if self._error is not None:
            raise self._error
        return CommandResult.ok({"echo": params})


class TestCommandResult:
    """Tests for the CommandResult factories."""

    def test_ok_defaults(self) -> None:
        """ok() is a success with exit code 0."""
        result = CommandResult.ok({"a": 1})
        assert result.success
        assert result.exit_code == EXIT_OK
        assert result.error is None

    def test_ok_with_failure_code(self) -> None:
        """A payload with a failing exit code is not a success."""
        result = CommandResult.ok({"a": 1}, exit_code=EXIT_FAILURE, summary="1 failure")
        assert not result.success
        assert result.data == {"a": 1}
        assert result.summary == "1 failure"

    def test_fail_structure(self) -> None:
        """fail() carries type, message and details; message doubles as summary."""
        result = CommandResult.fail("DIVERGENT", "diverges", EXIT_DIVERGENT, {"rho": "1"})
        assert result.error == {"type": "DIVERGENT", "message": "diverges", "details": {"rho": "1"}}
        assert result.summary == "diverges"
        assert result.data is None


class TestSafeExecute:
    """Tests for the exception to exit-code mapping."""

    @pytest.mark.parametrize(
        ("error", "exit_code", "error_type"),
        [
            (InputValidationError("bad", field="x"), EXIT_BAD_ARGUMENTS, "VALIDATION_ERROR"),
            (SuiteNotFoundError("no suite"), EXIT_BAD_ARGUMENTS, "NOT_FOUND"),
            (DomainError("outside"), EXIT_BAD_ARGUMENTS, "DOMAIN_ERROR"),
            (DeskScaleError("too far"), EXIT_BAD_ARGUMENTS, "DESK_SCALE"),
            (DivergenceError("diverges", rho=1.0), EXIT_DIVERGENT, "DIVERGENT"),
            (NonConvergenceError("stuck", best_estimate=0.5), EXIT_FAILURE, "NON_CONVERGENCE"),
            (BesselUmbralError("generic"), EXIT_FAILURE, "ERROR"),
            (RuntimeError("boom"), EXIT_FAILURE, "INTERNAL_ERROR"),
        ],
    )
    def test_mapping(self, error: Exception, exit_code: int, error_type: str) -> None:
        """Each exception family maps to its exit code and error type."""
        result = _StubCommand(error=error).safe_execute({})
        assert result.exit_code == exit_code
        assert result.error is not None
        assert result.error["type"] == error_type

    def test_validation_details(self) -> None:
        """Field and reason are reported."""
        error = InputValidationError("bad", field="x", reason="required")
        result = _StubCommand(error=error).safe_execute({})
        assert result.error is not None
        assert result.error["details"] == {"field": "x", "reason": "required"}

    def test_non_finite_details_serialisable(self) -> None:
        """Infinite rho is rendered as a string."""
        result = _StubCommand(error=DivergenceError("diverges", rho=float("inf"))).safe_execute({})
        assert result.error is not None
        assert result.error["details"]["rho"] == "inf"

    def test_success_passthrough(self) -> None:
        """A normal result is returned unchanged."""
        result = _StubCommand().safe_execute({"x": "1"})
        assert result.data == {"echo": {"x": "1"}}


class TestParameterHelpers:
    """Tests for the shared parameter parsers."""

    def test_parse_scales(self) -> None:
        """Scales are exact rationals."""
        assert BaseCommand.parse_scales({"scales": "1,-3/2"}) == (Fraction(1), Fraction(-3, 2))

    def test_parse_scales_rejects_zero(self) -> None:
        """Zero scales fail unless allowed."""
        with pytest.raises(InputValidationError):
            BaseCommand.parse_scales({"scales": "1,0"})
        assert BaseCommand.parse_scales({"scales": "1,0"}, allow_zero=True)[1] == 0

    def test_parse_scales_missing(self) -> None:
        """scales is required."""
        with pytest.raises(InputValidationError, match="Missing required parameter: scales"):
            BaseCommand.parse_scales({})

    def test_parse_orders_default_zero(self) -> None:
        """Omitted orders are all zero."""
        assert BaseCommand.parse_orders({}, 3) == (Fraction(0),) * 3

    def test_parse_orders_length_mismatch(self) -> None:
        """Orders must match the number of scales."""
        with pytest.raises(InputValidationError) as exc_info:
            BaseCommand.parse_orders({"orders": "0,1"}, 3)
        assert exc_info.value.reason == "length_mismatch"

    def test_parse_orders_range(self) -> None:
        """Orders at -1 are rejected."""
        with pytest.raises(InputValidationError):
            BaseCommand.parse_orders({"orders": "-1"}, 1)

    def test_parse_point(self) -> None:
        """A single rational point."""
        assert BaseCommand.parse_point({"x": "7/10"}) == Fraction(7, 10)
        with pytest.raises(InputValidationError):
            BaseCommand.parse_point({"x": "1,2"})

    def test_check_desk_scale(self) -> None:
        """Points beyond the desk-scale reach raise; others return the reach."""
        command = _StubCommand()
        assert command.check_desk_scale(Fraction(2), (Fraction(1), Fraction(-3))) == 6.0
        with pytest.raises(DeskScaleError):
            command.check_desk_scale(Fraction(31), (Fraction(1),))


class TestOutputHelpers:
    """Tests for the configured real and scalar formatting."""

    def test_default_digits(self) -> None:
        """17 significant digits unless configured otherwise."""
        assert _StubCommand().real(1.0 / 3.0) == "0.33333333333333331"

    def test_configured_digits(self) -> None:
        """OutputConfig.significant_digits drives real formatting."""
        command = _StubCommand(config=AppConfig(output=OutputConfig(significant_digits=6)))
        assert command.real(1.0 / 3.0) == "0.333333"
        assert command.scalar(0.25 + 1e-9) == "0.25"

    def test_exact_values_ignore_digits(self) -> None:
        """Fractions stay exact whatever the digit setting."""
        command = _StubCommand(config=AppConfig(output=OutputConfig(significant_digits=3)))
        assert command.scalar(Fraction(1, 3)) == "1/3"
