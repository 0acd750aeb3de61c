"""Command: verify.

Runs one verification suite, or all of them, and reports every case.
"""

from __future__ import annotations

from typing import Any

from dtbesselumbral.cli.base import EXIT_FAILURE, EXIT_OK, BaseCommand, CommandResult
from dtbesselumbral.suites.registry import ALL_SUITES, SuiteRegistry
from dtbesselumbral.validation import validate_integer

CSV_HEADER = ["suite", "case_id", "expected", "got", "residual", "passed"]


class VerifyCommand(BaseCommand):
    """Verification suites with deterministic case order."""

    name = "verify"
    description = "Run the verification suites (lpoly, besselfam, products, integrals or all)"

    def __init__(self, *args: Any, registry: SuiteRegistry | None = None, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._registry = registry

    @property
    def registry(self) -> SuiteRegistry:
        if self._registry is None:
            self._registry = SuiteRegistry()
            self._registry.discover_and_register()
        return self._registry

    def execute(self, params: dict[str, Any]) -> CommandResult:
        suite = str(params.get("suite") or ALL_SUITES).strip().lower()
        workers = validate_integer(params.get("workers") or self.config.workers, "workers", minimum=1)

        reports = self.registry.run(suite, workers=workers)
        cases = sum(r.cases for r in reports)
        failures = sum(r.failures for r in reports)
        worst = max((r.worst_residual for r in reports), default=0.0)

        data: dict[str, Any] = {
            "command": self.name,
            "suite": suite,
            "passed": failures == 0,
            "cases": cases,
            "failures": failures,
            "reports": [
                {
                    "suite": r.suite,
                    "cases": r.cases,
                    "failures": r.failures,
                    "worst_residual": self.real(r.worst_residual),
                    "tolerance": self.real(r.tolerance),
                    "details": [
                        {
                            "case_id": c.case_id,
                            "expected": c.expected,
                            "got": c.got,
                            "residual": self.real(c.residual),
                            "passed": c.passed,
                        }
                        for c in r.details
                    ],
                }
                for r in reports
            ],
        }
        rows = [CSV_HEADER] + [
            [r.suite, c.case_id, c.expected, c.got, self.real(c.residual), "true" if c.passed else "false"]
            for r in reports
            for c in r.details
        ]
        summary = (
            f"verify {suite}: {len(reports)} suite(s), {cases} cases, "
            f"{failures} failures, worst residual {worst:.3e}"
        )
        return CommandResult.ok(
            data,
            rows=rows,
            exit_code=EXIT_OK if failures == 0 else EXIT_FAILURE,
            summary=summary,
        )
