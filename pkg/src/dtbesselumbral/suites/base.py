"""Base suite class and report models for the verification framework.

Defines the contract that all verification suites implement:
    - name, description class attributes
    - build() records cases on a SuiteBuilder in a fixed order
    - run() wraps build() and returns the VerifyReport
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from dtbesselumbral.cli.formatting import format_scalar
from dtbesselumbral.exceptions import BesselUmbralError

logger = logging.getLogger(__name__)


# --------------------------------------------------------------------------- #
# Report models
# --------------------------------------------------------------------------- #


class CaseResult(BaseModel):
    """One verification case: what was expected, what came out."""

    case_id: str
    expected: str
    got: str
    residual: float
    passed: bool


class VerifyReport(BaseModel):
    """Outcome of one suite.

    ``tolerance`` is the largest case tolerance the suite used, so a report
    with no failures has ``worst_residual <= tolerance``.
    """

    suite: str
    cases: int
    failures: int
    worst_residual: float
    tolerance: float
    details: list[CaseResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def relative_residual(expected: Any, got: Any) -> float:
    """|expected - got| / max(1, |expected|); exact inputs stay exact until the end."""
    if isinstance(expected, Fraction) and isinstance(got, Fraction):
        diff = abs(expected - got) / max(Fraction(1), abs(expected))
        return float(diff)
    return abs(float(expected) - float(got)) / max(1.0, abs(float(expected)))


# --------------------------------------------------------------------------- #
# Case accumulator
# --------------------------------------------------------------------------- #


class SuiteBuilder:
    """Accumulates cases in the order they are recorded."""

    def __init__(self, suite: str) -> None:
        self._suite = suite
        self._cases: list[CaseResult] = []
        self._tolerance = 0.0

    def exact(self, case_id: str, expected: Any, got: Any) -> bool:
        """Record an exact-equality case."""
        passed = expected == got
        residual = 0.0 if passed else _safe_residual(expected, got)
        self._add(case_id, expected, got, residual, passed)
        return passed

    def close(self, case_id: str, expected: Any, got: Any, tol: float) -> bool:
        """Record a case passing when the relative residual is within ``tol``."""
        residual = relative_residual(expected, got)
        passed = residual <= tol
        self._tolerance = max(self._tolerance, tol)
        self._add(case_id, expected, got, residual, passed)
        return passed

    def check(self, case_id: str, passed: bool, expected: Any = True, got: Any = None) -> bool:
        """Record a yes/no case (residual 0 on success, 1 on failure)."""
        self._add(case_id, expected, passed if got is None else got, 0.0 if passed else 1.0, passed)
        return passed

    def raises(self, case_id: str, exc_type: type[Exception], func: Callable[..., Any], *args: Any) -> bool:
        """Record a case passing when ``func(*args)`` raises ``exc_type``."""
        try:
            got = func(*args)
        except exc_type as exc:
            return self.check(case_id, True, expected=exc_type.__name__, got=type(exc).__name__)
        return self.check(case_id, False, expected=exc_type.__name__, got=got)

    @contextmanager
    def guard(self, case_id: str) -> Iterator[None]:
        """Turn an exception raised inside the block into a failed case."""
        try:
            yield
        except (BesselUmbralError, ArithmeticError, ValueError) as exc:
            logger.warning("Case %s raised %s: %s", case_id, type(exc).__name__, exc)
            self._add(case_id, "no error", f"{type(exc).__name__}: {exc}", 1.0, False)

    def report(self) -> VerifyReport:
        failures = sum(1 for c in self._cases if not c.passed)
        worst = max((c.residual for c in self._cases), default=0.0)
        return VerifyReport(
            suite=self._suite,
            cases=len(self._cases),
            failures=failures,
            worst_residual=worst,
            tolerance=self._tolerance,
            details=list(self._cases),
        )

    def _add(self, case_id: str, expected: Any, got: Any, residual: float, passed: bool) -> None:
        self._cases.append(
            CaseResult(
                case_id=case_id,
                expected=format_scalar(expected),
                got=format_scalar(got),
                residual=residual,
                passed=passed,
            )
        )


def _safe_residual(expected: Any, got: Any) -> float:
    try:
        return relative_residual(expected, got)
    except (TypeError, ValueError):
        return 1.0


# --------------------------------------------------------------------------- #
# Base suite class
# --------------------------------------------------------------------------- #


class BaseSuite(ABC):
    """Abstract base class for all verification suites.

    Every suite must:
        1. Set name and description class attributes
        2. Implement build() recording its cases in a deterministic order

    Individual suites should let numerical exceptions propagate from a case
    and wrap groups of cases in SuiteBuilder.guard() so a failure is
    recorded rather than aborting the run.
    """

    name: str
    description: str

    @abstractmethod
    def build(self, builder: SuiteBuilder) -> None:
        """Record every case of the suite on ``builder``."""
        ...

    def run(self) -> VerifyReport:
        """Build the suite and return its report."""
        builder = SuiteBuilder(self.name)
        logger.info("Running suite %s", self.name)
        self.build(builder)
        report = builder.report()
        logger.info(
            "Suite %s: %d cases, %d failures, worst residual %.3e",
            self.name,
            report.cases,
            report.failures,
            report.worst_residual,
        )
        return report
