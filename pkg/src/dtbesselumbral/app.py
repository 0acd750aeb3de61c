"""Main application class for dtBesselUmbral.

Inherits from dtPyAppFramework's AbstractApp to integrate with the
framework's argument parsing, logging, and lifecycle management.
"""

from __future__ import annotations

import logging
import os
import sys

from dtPyAppFramework.application import AbstractApp

from dtbesselumbral import __description__, __full_name__, __short_name__, __version__
from dtbesselumbral.cli.base import EXIT_OK
from dtbesselumbral.cli.parser import add_arguments
from dtbesselumbral.cli.runner import execute_command

logger = logging.getLogger(__name__)


class BesselUmbralApp(AbstractApp):
    """Main application class for dtBesselUmbral."""

    def __init__(self) -> None:
        super().__init__(
            description=__description__,
            version=__version__,
            short_name=__short_name__,
            full_name=__full_name__,
            console_app=True,
        )
        self.exit_code = EXIT_OK

    def define_args(self, arg_parser) -> None:  # type: ignore[override]
        """Define the subcommand and its flags."""
        add_arguments(arg_parser)

    def main(self, args) -> None:  # type: ignore[override]
        """Run one command, print its payload and record the exit code.

        stdout carries only the JSON/CSV payload; logging goes to stderr.
        """
        self._configure_stderr_logging()

        params = dict(vars(args))
        if params.get("log_level") is None and os.environ.get("LOG_LEVEL"):
            params["log_level"] = os.environ["LOG_LEVEL"]
        logger.info("Starting dtBesselUmbral v%s: %s", __version__, params.get("command"))

        outcome = execute_command(params)
        sys.stdout.write(outcome.stdout)
        sys.stdout.flush()
        if outcome.stderr:
            sys.stderr.write(outcome.stderr)
            sys.stderr.flush()

        self.exit_code = outcome.exit_code
        logger.info("Command %s finished with exit code %d", params.get("command"), self.exit_code)

    def exiting(self) -> None:
        """Cleanup callback on application exit."""
        logger.info("dtBesselUmbral exiting")

    @staticmethod
    def _configure_stderr_logging() -> None:
        """Ensure all log handlers write to stderr, not stdout."""
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            if isinstance(handler, logging.StreamHandler):
                if handler.stream is sys.stdout:
                    handler.stream = sys.stderr
