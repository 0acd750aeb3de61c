"""Command-line argument definitions, shared by the app and the tests."""

from __future__ import annotations

import argparse

COMMANDS = ("expand", "eval", "derive", "integrate", "verify")
FORMATS = ("json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def add_arguments(parser: argparse.ArgumentParser) -> None:
    """Register the subcommand and its flags on ``parser``.

    Numeric lists are comma-separated and read exactly: ``--scales 1,1/2``.
    Unset flags stay ``None`` so configuration defaults apply.
    """
    parser.add_argument("command", choices=COMMANDS, help="Operation to run")
    parser.add_argument("--orders", default=None, help="Bessel orders nu_i, comma-separated (default all 0)")
    parser.add_argument("--scales", default=None, help="Scales a_i, comma-separated")
    parser.add_argument("--trunc", type=int, default=None, help="Truncation order R (0..64)")
    parser.add_argument("--tol", type=float, default=None, help="Convergence / residual tolerance")
    parser.add_argument("--format", choices=FORMATS, default=None, help="Output format")
    parser.add_argument("--x", default=None, help="Evaluation point")
    parser.add_argument("--n", type=int, default=None, help="Derivative order")
    parser.add_argument("--suite", default=None, help="Verification suite name or 'all'")
    parser.add_argument("--workers", type=int, default=None, help="Threads for verify")
    parser.add_argument("--digits", type=int, default=None, help="Significant digits for real values (1..17)")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=LOG_LEVELS,
        type=str.upper,
        default=None,
        help="Logging level (also read from LOG_LEVEL)",
    )


def build_parser(prog: str = "dtbesselumbral") -> argparse.ArgumentParser:
    """Standalone parser with the same arguments as the application."""
    parser = argparse.ArgumentParser(prog=prog, description="Products and powers of Bessel functions")
    add_arguments(parser)
    return parser
