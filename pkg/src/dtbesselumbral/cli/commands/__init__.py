"""Command-line subcommands for dtBesselUmbral."""

from .derive import DeriveCommand
from .evaluate import EvaluateCommand
from .expand import ExpandCommand
from .integrate import IntegrateCommand
from .verify import VerifyCommand

__all__ = [
    "DeriveCommand",
    "EvaluateCommand",
    "ExpandCommand",
    "IntegrateCommand",
    "VerifyCommand",
]
