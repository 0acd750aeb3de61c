"""Value types shared by the numerical modules.

Exact values are ``fractions.Fraction``; anything that cannot stay exact is a
Python float. ``Scalar`` names that union. All records are frozen so they can
be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from dtbesselumbral.exceptions import DomainError, InputValidationError

Scalar = Union[Fraction, float]


def as_scalar(value: int | float | Fraction, field_name: str = "value") -> Scalar:
    """Normalise a number: ints become Fractions, floats and Fractions pass through.

    Raises:
        InputValidationError: For booleans, non-numbers and non-finite floats.
    """
    if isinstance(value, bool):
        raise InputValidationError(
            message=f"Parameter '{field_name}' must be numeric",
            field=field_name,
            reason="invalid_type",
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputValidationError(
                message=f"Parameter '{field_name}' must be finite",
                field=field_name,
                reason="not_finite",
            )
        return value
    raise InputValidationError(
        message=f"Parameter '{field_name}' must be numeric",
        field=field_name,
        reason="invalid_type",
    )


def is_exact(value: Scalar) -> bool:
    """True for exact rationals."""
    return isinstance(value, Fraction)


def is_nonneg_integral(value: Scalar) -> bool:
    """True for exact rationals that are nonnegative integers."""
    return isinstance(value, Fraction) and value.denominator == 1 and value >= 0


class Provenance(str, Enum):
    """How an l-polynomial value was produced."""

    CLOSED_FORM = "closed-form"
    RECURSION = "recursion"
    FRACTIONAL_SERIES = "fractional-series"


@dataclass(frozen=True)
class EvalReport:
    """Outcome of an adaptively truncated series evaluation.

    ``tol`` is the relative tail bound the report was judged against, when
    one applies. A converged report with a tolerance keeps its last term
    within tol * max(1, |value|).
    """

    value: float
    terms_used: int
    last_term: float
    converged: bool
    tol: float | None = None

    def __post_init__(self) -> None:
        if self.tol is None:
            return
        if not 0.0 < self.tol:
            raise DomainError("tol must be positive", details={"tol": self.tol})
        bound = self.tol * max(1.0, abs(self.value))
        if self.converged and abs(self.last_term) > bound:
            raise DomainError(
                "converged report has a last term above its tail bound",
                details={"last_term": self.last_term, "bound": bound},
            )


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of the oscillatory quadrature oracle."""

    value: float
    abs_error_estimate: float
    intervals_used: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.abs_error_estimate) or self.abs_error_estimate < 0:
            raise DomainError("abs_error_estimate must be finite and nonnegative")
        if self.intervals_used < 1:
            raise DomainError("intervals_used must be at least 1")


@dataclass(frozen=True)
class LValue:
    """Value of an l-polynomial with its provenance."""

    value: Scalar
    index: Scalar
    provenance: Provenance

    def __post_init__(self) -> None:
        if self.provenance is Provenance.FRACTIONAL_SERIES:
            integral = float(self.index).is_integer() and self.index >= 0
            if integral:
                raise DomainError(
                    "fractional-series provenance requires a non-integer or negative index",
                    details={"index": str(self.index)},
                )
