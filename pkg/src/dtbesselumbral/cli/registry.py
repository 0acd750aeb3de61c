"""Command registry with auto-discovery of CLI subcommands.

Scans the configured packages for BaseCommand subclasses, instantiates them
with the application configuration and routes a command name to its handler.
"""

from __future__ import annotations

import importlib
import inspect
import logging
from typing import Any

from dtbesselumbral.cli.base import BaseCommand, CommandResult
from dtbesselumbral.config.models import AppConfig
from dtbesselumbral.exceptions import CommandNotFoundError

logger = logging.getLogger(__name__)

# Packages to scan for command classes. Empty packages are silently skipped.
COMMAND_PACKAGES = [
    "dtbesselumbral.cli.commands",
]


class CommandRegistry:
    """Registry for auto-discovering and dispatching CLI commands."""

    def __init__(self, config: AppConfig | None = None) -> None:
        self._config = config or AppConfig()
        self._commands: dict[str, BaseCommand] = {}

    def discover_and_register(self) -> None:
        """Scan COMMAND_PACKAGES for BaseCommand subclasses and register them.

        Each package's __init__.py should export its command classes.
        """
        for package_name in COMMAND_PACKAGES:
            try:
                package = importlib.import_module(package_name)
            except ImportError:
                logger.debug("Package %s not found, skipping", package_name)
                continue

            for attr_name in dir(package):
                attr = getattr(package, attr_name)
                if (
                    inspect.isclass(attr)
                    and issubclass(attr, BaseCommand)
                    and attr is not BaseCommand
                    and isinstance(getattr(attr, "name", None), str)
                ):
                    self._register_command_class(attr)

    def _register_command_class(self, command_cls: type[BaseCommand]) -> None:
        command = command_cls(config=self._config)
        if command.name in self._commands:
            logger.warning("Duplicate command name '%s', overwriting", command.name)
        self._commands[command.name] = command
        logger.debug("Registered command: %s", command.name)

    @property
    def names(self) -> list[str]:
        return sorted(self._commands)

    def get_command(self, name: str) -> BaseCommand | None:
        return self._commands.get(name)

    def call_command(self, name: str, params: dict[str, Any]) -> CommandResult:
        """Route a command to its handler.

        Raises:
            CommandNotFoundError: If no command with the given name exists.
        """
        command = self._commands.get(name)
        if command is None:
            raise CommandNotFoundError(f"Command '{name}' not found (available: {', '.join(self.names)})")
        logger.info("Running command %s", name)
        return command.safe_execute(params)

    @property
    def command_count(self) -> int:
        return len(self._commands)
