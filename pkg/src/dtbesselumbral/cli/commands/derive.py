"""Command: derive.

n-th derivative of J_0(a x) J_0(b x) through the Hermite-structured sum,
checked against exact finite differences of the truncated product series.
"""

from __future__ import annotations

from typing import Any

from dtbesselumbral.cli.base import EXIT_FAILURE, EXIT_OK, BaseCommand, CommandResult
from dtbesselumbral.products import (
    OrderSpec,
    ScaleSpec,
    derivative_product,
    finite_difference_derivative,
    product_expansion,
)
from dtbesselumbral.validation import validate_integer, validate_required

MAX_DERIVATIVE_ORDER = 12
CSV_HEADER = ["n", "x", "value", "finite_difference", "residual"]


class DeriveCommand(BaseCommand):
    """Derivative of a two-factor J_0 product."""

    name = "derive"
    description = "n-th derivative of J_0(a x) J_0(b x) with a finite-difference cross-check"

    def execute(self, params: dict[str, Any]) -> CommandResult:
        scales = self.parse_scales(params, min_length=2, max_length=2)
        validate_required(params, "n")
        n = validate_integer(params["n"], "n", minimum=0, maximum=MAX_DERIVATIVE_ORDER)
        x = self.parse_point(params)
        numerics = self.config.numerics

        self.check_desk_scale(x, scales)

        spec = ScaleSpec.from_scales(list(scales))
        value = derivative_product(n, spec, x, R=numerics.trunc, tol=numerics.tol)
        series = product_expansion(OrderSpec.zeros(2), spec, numerics.trunc)
        oracle = float(finite_difference_derivative(series, n, x))
        residual = abs(value - oracle) / max(1.0, abs(oracle))

        data: dict[str, Any] = {
            "command": self.name,
            "scales": [str(v) for v in scales],
            "n": n,
            "x": str(x),
            "R": numerics.trunc,
            "value": self.real(value),
            "finite_difference": self.real(oracle),
            "residual": self.real(residual),
            "tolerance": self.real(numerics.tol),
        }
        rows = [CSV_HEADER, [str(n), data["x"], data["value"], data["finite_difference"], data["residual"]]]
        passed = residual <= numerics.tol
        return CommandResult.ok(
            data,
            rows=rows,
            exit_code=EXIT_OK if passed else EXIT_FAILURE,
            summary=f"derive: D^{n} f({x}) = {data['value']}, residual {residual:.3e}",
        )
