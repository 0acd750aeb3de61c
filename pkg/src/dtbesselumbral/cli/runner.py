"""Executes one CLI invocation and renders its output.

Kept free of the application framework so that a full invocation,
from parsed arguments to exit code, can be exercised directly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from pydantic import ValidationError

from dtbesselumbral.cli.base import EXIT_BAD_ARGUMENTS, CommandResult
from dtbesselumbral.cli.formatting import render_csv, render_json
from dtbesselumbral.cli.registry import CommandRegistry
from dtbesselumbral.config.models import AppConfig
from dtbesselumbral.exceptions import CommandNotFoundError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommandOutcome:
    """What the process prints and how it exits."""

    stdout: str
    stderr: str
    exit_code: int


def build_config(params: dict[str, Any]) -> AppConfig:
    """Assemble AppConfig from parsed flags; unset flags keep their defaults.

    Raises:
        pydantic.ValidationError: A flag is out of range.
    """
    numerics: dict[str, Any] = {}
    if params.get("tol") is not None:
        numerics["tol"] = params["tol"]
    if params.get("trunc") is not None:
        numerics["trunc"] = params["trunc"]

    data: dict[str, Any] = {"numerics": numerics}
    output: dict[str, Any] = {}
    if params.get("format") is not None:
        output["format"] = params["format"]
    if params.get("digits") is not None:
        output["significant_digits"] = params["digits"]
    if output:
        data["output"] = output
    if params.get("workers") is not None:
        data["workers"] = params["workers"]
    if params.get("log_level") is not None:
        data["log_level"] = params["log_level"]
    return AppConfig.model_validate(data)


def _config_error(exc: ValidationError) -> CommandResult:
    first = exc.errors()[0]
    field = ".".join(str(part) for part in first.get("loc", ()))
    return CommandResult.fail(
        error_type="VALIDATION_ERROR",
        message=f"Invalid value for '{field}': {first.get('msg', 'invalid')}",
        exit_code=EXIT_BAD_ARGUMENTS,
        details={"field": field},
    )


def render(result: CommandResult, output_format: str) -> CommandOutcome:
    """Payload to stdout, summary line to stderr."""
    stderr = f"{result.summary}\n" if result.summary else ""
    if result.data is None:
        stdout = render_json({"error": result.error}) if output_format == "json" else ""
    elif output_format == "csv" and result.rows:
        stdout = render_csv(result.rows[0], result.rows[1:])
    else:
        stdout = render_json(result.data)
    return CommandOutcome(stdout=stdout, stderr=stderr, exit_code=result.exit_code)


def execute_command(params: dict[str, Any], registry: CommandRegistry | None = None) -> CommandOutcome:
    """Run the command named in ``params['command']``."""
    output_format = str(params.get("format") or "json").lower()
    try:
        config = build_config(params)
    except ValidationError as exc:
        return render(_config_error(exc), output_format)
    output_format = config.output.format
    if params.get("log_level") is not None:
        logging.getLogger().setLevel(config.log_level)

    if registry is None:
        registry = CommandRegistry(config)
        registry.discover_and_register()

    name = str(params.get("command") or "")
    try:
        result = registry.call_command(name, params)
    except CommandNotFoundError as exc:
        result = CommandResult.fail(
            error_type="NOT_FOUND",
            message=str(exc),
            exit_code=EXIT_BAD_ARGUMENTS,
        )
    logger.debug("Command %s finished with exit code %d", name, result.exit_code)
    return render(result, output_format)
