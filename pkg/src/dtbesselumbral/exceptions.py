"""Custom exception hierarchy for dtBesselUmbral.

Numerical failures carry a category string and structured details so the
command layer can map them onto exit codes and JSON error payloads without
inspecting message text.
"""

from __future__ import annotations

from typing import Any


class BesselUmbralError(Exception):
    """Base exception for all dtBesselUmbral errors."""


class ConfigurationError(BesselUmbralError):
    """Raised when application configuration is invalid or missing."""


class InputValidationError(BesselUmbralError):
    """Raised when a parameter fails local validation.

    Carries the field name and reason to enable structured error responses.
    """

    def __init__(
        self,
        message: str,
        field: str | None = None,
        reason: str | None = None,
    ) -> None:
        super().__init__(message)
        self.field = field
        self.reason = reason


class SuiteNotFoundError(BesselUmbralError):
    """Raised when a requested verification suite is not registered."""


class CommandNotFoundError(BesselUmbralError):
    """Raised when a requested CLI command is not registered."""


class NumericalError(BesselUmbralError):
    """Base exception for failures of a numerical operation.

    Attributes:
        category: Error category string (e.g. DIVERGENT).
        message: Human-readable error description.
        details: Optional dictionary with additional error context.
    """

    def __init__(
        self,
        category: str,
        message: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.category = category
        self.message = message
        self.details = details


class DomainError(NumericalError):
    """An argument lies outside the mathematical domain of the operation."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        category: str = "DOMAIN_ERROR",
    ) -> None:
        super().__init__(category=category, message=message, details=details)


class DeskScaleError(DomainError):
    """Argument beyond the range where direct power series are trustworthy."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, details=details, category="DESK_SCALE")


class DivergenceError(NumericalError):
    """The requested series or integral diverges for these parameters.

    Attributes:
        rho: Convergence ratio of the series (None when not applicable).
        condition: The condition actually enforced.
        stated_condition: The weaker ordering condition usually quoted for it.
    """

    def __init__(
        self,
        message: str,
        rho: float | None = None,
        condition: str | None = None,
        stated_condition: str | None = None,
    ) -> None:
        details: dict[str, Any] = {}
        if rho is not None:
            details["rho"] = rho
        if condition is not None:
            details["condition"] = condition
        if stated_condition is not None:
            details["stated_condition"] = stated_condition
        super().__init__(category="DIVERGENT", message=message, details=details or None)
        self.rho = rho
        self.condition = condition
        self.stated_condition = stated_condition


class NonConvergenceError(NumericalError):
    """A series or quadrature did not settle within its budget.

    Attributes:
        best_estimate: The last value reached before giving up.
        terms_used: Number of terms or intervals consumed.
    """

    def __init__(
        self,
        message: str,
        best_estimate: float | None = None,
        terms_used: int | None = None,
    ) -> None:
        super().__init__(
            category="NON_CONVERGENCE",
            message=message,
            details={"best_estimate": best_estimate, "terms_used": terms_used},
        )
        self.best_estimate = best_estimate
        self.terms_used = terms_used
