"""Command: expand.

Prints the truncated power series of a product of Bessel functions,
prod_i J_{nu_i}(a_i x), as coefficients of u = (x/2)^2.
"""

from __future__ import annotations

from typing import Any

from dtbesselumbral.cli.base import BaseCommand, CommandResult
from dtbesselumbral.models import is_exact
from dtbesselumbral.products import OrderSpec, ScaleSpec, product_expansion

CSV_HEADER = ["r", "coefficient", "exact"]


class ExpandCommand(BaseCommand):
    """Closed-form product expansion through u^R."""

    name = "expand"
    description = "Expand a product of Bessel functions into a truncated series in (x/2)^2"

    def execute(self, params: dict[str, Any]) -> CommandResult:
        scales = self.parse_scales(params)
        orders = self.parse_orders(params, len(scales))

        series = product_expansion(
            OrderSpec(orders=orders),
            ScaleSpec.from_scales(list(scales)),
            self.config.numerics.trunc,
        )
        coeffs = [self.scalar(c) for c in series.coeffs]

        data: dict[str, Any] = {
            "command": self.name,
            "orders": [str(v) for v in orders],
            "scales": [str(v) for v in scales],
            "R": series.R,
            "prefactor_exponent": self.scalar(series.prefactor_exponent),
            "scalar": self.scalar(series.scalar),
            "exact": series.exact,
            "coeffs": coeffs,
        }
        rows = [CSV_HEADER] + [
            [str(r), text, self.scalar(is_exact(c))]
            for r, (c, text) in enumerate(zip(series.coeffs, coeffs))
        ]
        return CommandResult.ok(
            data,
            rows=rows,
            summary=f"expand: R={series.R}, exact={str(series.exact).lower()}",
        )
