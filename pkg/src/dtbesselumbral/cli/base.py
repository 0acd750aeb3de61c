"""Base command class and result model for the CLI.

Defines the contract that all commands must implement:
    - name, description class attributes
    - execute() for the command logic
    - safe_execute() wraps execute() with exception-to-CommandResult mapping
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from dtbesselumbral.besselfam import DESK_SCALE_BOUND
from dtbesselumbral.cli.formatting import format_real, format_scalar
from dtbesselumbral.config.models import AppConfig
from dtbesselumbral.exceptions import (
    BesselUmbralError,
    DivergenceError,
    DomainError,
    InputValidationError,
    NonConvergenceError,
    NumericalError,
    SuiteNotFoundError,
)
from dtbesselumbral.validation import (
    validate_desk_scale,
    validate_orders,
    validate_rational_list,
    validate_required,
    validate_scales,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BAD_ARGUMENTS = 2
EXIT_DIVERGENT = 3


def _json_safe(details: dict[str, Any] | None) -> dict[str, Any] | None:
    """Floats become 17-digit strings so non-finite values survive JSON."""
    if details is None:
        return None
    return {key: format_real(value) if isinstance(value, float) else value for key, value in details.items()}


class CommandResult(BaseModel):
    """Standardised command outcome.

    ``data`` is the payload to serialise; ``rows`` optionally carries the
    CSV rendering (header first). ``summary`` is a one-line note for stderr.
    """

    success: bool
    exit_code: int = EXIT_OK
    data: dict[str, Any] | None = None
    rows: list[list[str]] | None = None
    error: dict[str, Any] | None = None
    summary: str | None = None

    @classmethod
    def ok(
        cls,
        data: dict[str, Any],
        rows: list[list[str]] | None = None,
        exit_code: int = EXIT_OK,
        summary: str | None = None,
    ) -> CommandResult:
        """Create a response carrying a payload.

        A non-zero ``exit_code`` marks a completed run whose result failed a
        check (verification failure, unsettled series).
        """
        return cls(
            success=exit_code == EXIT_OK,
            exit_code=exit_code,
            data=data,
            rows=rows,
            summary=summary,
        )

    @classmethod
    def fail(
        cls,
        error_type: str,
        message: str,
        exit_code: int,
        details: dict[str, Any] | None = None,
    ) -> CommandResult:
        """Create an error response."""
        error: dict[str, Any] = {"type": error_type, "message": message}
        if details:
            error["details"] = details
        return cls(success=False, exit_code=exit_code, error=error, summary=message)


class BaseCommand(ABC):
    """Abstract base class for all CLI commands.

    Every command must:
        1. Set name and description class attributes
        2. Implement execute() for the actual logic

    The safe_execute() method wraps execute() with top-level exception
    handling, mapping known exceptions to CommandResult.fail() responses
    and exit codes. Commands should raise rather than catch internally.
    """

    name: str
    description: str

    def __init__(self, config: AppConfig | None = None, **kwargs: Any) -> None:
        self._config = config or AppConfig()

    @property
    def config(self) -> AppConfig:
        return self._config

    @abstractmethod
    def execute(self, params: dict[str, Any]) -> CommandResult:
        """Run the command with parsed command-line parameters.

        Implementations should:
            1. Validate parameters using validation utilities
            2. Call the numerical modules
            3. Return CommandResult.ok() or raise an exception
        """
        ...

    # ------------------------------------------------------------------ #
    # Parameter helpers
    # ------------------------------------------------------------------ #

    @staticmethod
    def parse_scales(
        params: dict[str, Any],
        min_length: int = 1,
        max_length: int | None = None,
        allow_zero: bool = False,
    ) -> tuple[Fraction, ...]:
        """Read ``--scales`` as exact rationals."""
        validate_required(params, "scales")
        scales = validate_rational_list(params["scales"], "scales", min_length, max_length)
        if not allow_zero:
            validate_scales(scales)
        return scales

    @staticmethod
    def parse_orders(params: dict[str, Any], count: int) -> tuple[Fraction, ...]:
        """Read ``--orders``; all zero when omitted. Length must match the scales."""
        raw = params.get("orders")
        if raw is None:
            return (Fraction(0),) * count
        orders = validate_rational_list(raw, "orders")
        validate_orders(orders)
        if len(orders) != count:
            raise InputValidationError(
                message=f"Parameter 'orders' needs {count} entries to match 'scales' (got {len(orders)})",
                field="orders",
                reason="length_mismatch",
            )
        return orders

    def check_desk_scale(self, x: Fraction, scales: tuple[Fraction, ...]) -> float:
        """Refuse points whose reach |x| * max|a| is beyond the direct series range."""
        return validate_desk_scale(x, scales, DESK_SCALE_BOUND)

    def real(self, value: float) -> str:
        """Float rendered with the configured significant digits."""
        return format_real(value, self.config.output.significant_digits)

    def scalar(self, value: Any) -> str:
        """Exact values as fractions, reals with the configured digits."""
        return format_scalar(value, self.config.output.significant_digits)

    @staticmethod
    def parse_point(params: dict[str, Any], field_name: str = "x") -> Fraction:
        """Read a single rational evaluation point."""
        validate_required(params, field_name)
        return validate_rational_list(params[field_name], field_name, 1, 1)[0]

    def safe_execute(self, params: dict[str, Any]) -> CommandResult:
        """Execute with top-level exception handling.

        Exit codes: bad arguments and domain errors 2, divergence 3,
        non-convergence 1, anything unexpected 1.
        """
        try:
            return self.execute(params)
        except InputValidationError as exc:
            return CommandResult.fail(
                error_type="VALIDATION_ERROR",
                message=str(exc),
                exit_code=EXIT_BAD_ARGUMENTS,
                details={"field": exc.field, "reason": exc.reason} if exc.field else None,
            )
        except SuiteNotFoundError as exc:
            return CommandResult.fail(
                error_type="NOT_FOUND",
                message=str(exc),
                exit_code=EXIT_BAD_ARGUMENTS,
            )
        except DivergenceError as exc:
            return CommandResult.fail(
                error_type=exc.category,
                message=exc.message,
                exit_code=EXIT_DIVERGENT,
                details=_json_safe(exc.details),
            )
        except DomainError as exc:
            return CommandResult.fail(
                error_type=exc.category,
                message=exc.message,
                exit_code=EXIT_BAD_ARGUMENTS,
                details=_json_safe(exc.details),
            )
        except (NonConvergenceError, NumericalError) as exc:
            return CommandResult.fail(
                error_type=exc.category,
                message=exc.message,
                exit_code=EXIT_FAILURE,
                details=_json_safe(exc.details),
            )
        except BesselUmbralError as exc:
            return CommandResult.fail(
                error_type="ERROR",
                message=str(exc),
                exit_code=EXIT_FAILURE,
            )
        except Exception as exc:
            logger.exception("Unexpected error in command %s", self.name)
            return CommandResult.fail(
                error_type="INTERNAL_ERROR",
                message=f"Unexpected error: {exc}",
                exit_code=EXIT_FAILURE,
            )
